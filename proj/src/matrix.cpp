#include "matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace tg {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::multiplied(const IntegerMatrix& rhs) const {
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

mpz_class IntegerMatrix::determinant() const {
    if (rows_ != cols_) return 0;
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntegerMatrix m = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = n;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (m.at(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

// Row/column operation helpers keeping u * original * v == d in sync.
struct SmithWorking {
    IntegerMatrix d, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(a, c), d.at(b, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(a, c), u.at(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, a), d.at(r, b));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, a), v.at(r, b));
    }
    void add_row(std::size_t dst, std::size_t src, const mpz_class& c) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(dst, j) += c * d.at(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += c * u.at(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const mpz_class& c) {
        for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, dst) += c * d.at(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += c * v.at(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(r, j) = -d.at(r, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }
};

std::optional<std::pair<std::size_t, std::size_t>> least_nonzero(const IntegerMatrix& m,
                                                                 std::size_t from) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs;
    for (std::size_t i = from; i < m.rows(); ++i) {
        for (std::size_t j = from; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            mpz_class a = abs(m.at(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    SmithWorking w{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
    const std::size_t bound = std::min(m.rows(), m.cols());

    std::size_t t = 0;
    while (t < bound) {
        auto pivot = least_nonzero(w.d, t);
        if (!pivot) break;
        w.swap_rows(t, pivot->first);
        w.swap_cols(t, pivot->second);

        bool residue = false;
        for (std::size_t r = t + 1; r < w.d.rows(); ++r) {
            if (w.d.at(r, t) == 0) continue;
            mpz_class q;
            mpz_tdiv_q(q.get_mpz_t(), w.d.at(r, t).get_mpz_t(), w.d.at(t, t).get_mpz_t());
            if (q != 0) w.add_row(r, t, -q);
            if (w.d.at(r, t) != 0) residue = true;
        }
        for (std::size_t c = t + 1; c < w.d.cols(); ++c) {
            if (w.d.at(t, c) == 0) continue;
            mpz_class q;
            mpz_tdiv_q(q.get_mpz_t(), w.d.at(t, c).get_mpz_t(), w.d.at(t, t).get_mpz_t());
            if (q != 0) w.add_col(c, t, -q);
            if (w.d.at(t, c) != 0) residue = true;
        }
        if (residue) continue;  // smaller pivot now exists in the submatrix

        // Divisibility sweep: fold any non-multiple into the pivot's row.
        bool folded = false;
        for (std::size_t r = t + 1; r < w.d.rows() && !folded; ++r) {
            for (std::size_t c = t + 1; c < w.d.cols() && !folded; ++c) {
                if (w.d.at(r, c) % w.d.at(t, t) != 0) {
                    w.add_row(t, r, 1);
                    folded = true;
                }
            }
        }
        if (folded) continue;

        if (w.d.at(t, t) < 0) w.negate_row(t);
        ++t;
    }
    return {std::move(w.u), std::move(w.d), std::move(w.v)};
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
    IntegerMatrix h = m;
    const std::size_t rows = h.rows();
    const std::size_t cols = h.cols();

    auto swap_rows = [&h, cols](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(h.at(a, c), h.at(b, c));
    };
    auto add_row = [&h, cols](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t c = 0; c < cols; ++c) h.at(dst, c) += q * h.at(src, c);
    };

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // gcd-collapse the column below pivot_row
        while (true) {
            std::size_t best = rows;
            mpz_class best_abs;
            for (std::size_t r = pivot_row; r < rows; ++r) {
                if (h.at(r, col) == 0) continue;
                mpz_class a = abs(h.at(r, col));
                if (best == rows || a < best_abs) {
                    best = r;
                    best_abs = a;
                }
            }
            if (best == rows) break;  // column is zero from pivot_row down
            swap_rows(pivot_row, best);
            bool leftover = false;
            for (std::size_t r = pivot_row + 1; r < rows; ++r) {
                if (h.at(r, col) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), h.at(r, col).get_mpz_t(),
                           h.at(pivot_row, col).get_mpz_t());
                if (q != 0) add_row(r, pivot_row, -q);
                if (h.at(r, col) != 0) leftover = true;
            }
            if (!leftover) {
                if (h.at(pivot_row, col) < 0) {
                    for (std::size_t c = 0; c < cols; ++c) {
                        h.at(pivot_row, c) = -h.at(pivot_row, c);
                    }
                }
                // reduce entries above the pivot into [0, pivot)
                for (std::size_t r = 0; r < pivot_row; ++r) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), h.at(r, col).get_mpz_t(),
                               h.at(pivot_row, col).get_mpz_t());
                    if (q != 0) add_row(r, pivot_row, -q);
                }
                ++pivot_row;
                break;
            }
        }
    }
    return h;
}

}  // namespace tg
