#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace tg {

// Dense integer matrix with arbitrary-precision entries. Zero-dimension
// matrices are valid (an empty relator set produces a 0 x k matrix).
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntegerMatrix multiplied(const IntegerMatrix& rhs) const;
    IntegerMatrix transposed() const;

    // Exact determinant (Bareiss); the 0 x 0 determinant is 1.
    mpz_class determinant() const;

    bool operator==(const IntegerMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

struct SmithDecomposition {
    IntegerMatrix u;  // rows x rows, unimodular
    IntegerMatrix d;  // diagonal, d1 | d2 | ...
    IntegerMatrix v;  // cols x cols, unimodular
};

// u * m * v == d with d diagonal, nonnegative, and each entry dividing the
// next. Pivots are chosen by least absolute value to keep entries small.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// Canonical row-style Hermite normal form: positive pivots, entries above a
// pivot reduced into [0, pivot). Two matrices have equal HNF iff they differ
// by a left unimodular factor.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

}  // namespace tg
