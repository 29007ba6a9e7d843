#include "iso.hpp"

#include <algorithm>
#include <map>

#include "abelian.hpp"
#include "errors.hpp"
#include "finite_group.hpp"
#include "matrix.hpp"

namespace tg {

WordRewriter::WordRewriter(const Presentation& p) : free_(p.is_free()) {
    std::map<std::vector<Letter>, std::vector<Letter>> by_pattern;
    for (const Word& relator : p.relators()) {
        const Word reduced = cyclically_reduced(relator);
        if (reduced.empty()) continue;
        for (const Word& base : {reduced, reduced.inverse()}) {
            const auto& ls = base.letters();
            const std::size_t len = ls.size();
            for (std::size_t shift = 0; shift < len; ++shift) {
                std::vector<Letter> rot;
                rot.reserve(len);
                rot.insert(rot.end(), ls.begin() + shift, ls.end());
                rot.insert(rot.end(), ls.begin(), ls.begin() + shift);
                // rot = u v with u v = 1, so u rewrites to v^-1; keep only
                // strictly length-reducing splits
                for (std::size_t take = len; take * 2 > len; --take) {
                    std::vector<Letter> pattern(rot.begin(), rot.begin() + take);
                    Word tail = Word::reduce({rot.begin() + take, rot.end()});
                    by_pattern.try_emplace(std::move(pattern), tail.inverse().letters());
                }
            }
        }
    }
    rules_.assign(by_pattern.begin(), by_pattern.end());
}

namespace {

std::optional<std::size_t> find_subword(const std::vector<Letter>& haystack,
                                        const std::vector<Letter>& needle) {
    if (needle.empty() || needle.size() > haystack.size()) return std::nullopt;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < needle.size() && match; ++j) {
            match = haystack[i + j] == needle[j];
        }
        if (match) return i;
    }
    return std::nullopt;
}

}  // namespace

bool WordRewriter::trivial(const Word& w) const {
    Word current = cyclically_reduced(w);
    if (current.empty()) return true;
    if (free_) return false;

    bool progressing = true;
    while (progressing) {
        progressing = false;
        for (const auto& [pattern, replacement] : rules_) {
            auto pos = find_subword(current.letters(), pattern);
            if (!pos) continue;
            std::vector<Letter> next(current.letters().begin(),
                                     current.letters().begin() + *pos);
            next.insert(next.end(), replacement.begin(), replacement.end());
            next.insert(next.end(), current.letters().begin() + *pos + pattern.size(),
                        current.letters().end());
            current = cyclically_reduced(Word::reduce(next));
            if (current.empty()) return true;
            progressing = true;
            break;
        }
    }
    return false;
}

bool is_trivial_in_group(const Word& w, const Presentation& p) {
    return WordRewriter(p).trivial(w);
}

bool words_equal_in_group(const Word& a, const Word& b, const Presentation& p) {
    return WordRewriter(p).equal(a, b);
}

nlohmann::ordered_json IsoWitness::to_json() const {
    nlohmann::ordered_json out;
    out["lhs_middle"] = lhs.middle().to_json();
    out["rhs_middle"] = rhs.middle().to_json();
    out["forward"] = nlohmann::ordered_json::array();
    for (const Word& w : forward) out["forward"].push_back(Presentation::word_to_json(w));
    out["backward"] = nlohmann::ordered_json::array();
    for (const Word& w : backward) out["backward"].push_back(Presentation::word_to_json(w));
    return out;
}

IsoVerdict IsoVerdict::equal(IsoWitness w) {
    return IsoVerdict(Kind::Equal, std::move(w), "");
}
IsoVerdict IsoVerdict::distinct(std::string invariant) {
    return IsoVerdict(Kind::Distinct, std::nullopt, std::move(invariant));
}
IsoVerdict IsoVerdict::unknown(std::string reason) {
    return IsoVerdict(Kind::Unknown, std::nullopt, std::move(reason));
}

nlohmann::ordered_json IsoVerdict::to_json() const {
    nlohmann::ordered_json out;
    switch (kind_) {
        case Kind::Equal:
            out["verdict"] = "equal";
            out["witness"] = witness_->to_json();
            break;
        case Kind::Distinct:
            out["verdict"] = "distinct";
            out["invariant"] = detail_;
            break;
        case Kind::Unknown:
            out["verdict"] = "unknown";
            out["reason"] = detail_;
            break;
    }
    return out;
}

namespace {

// Reduced words over `gens` of length <= maxlen, shortest first, in a fixed
// lexicographic order.
std::vector<Word> enumerate_reduced_words(const std::vector<GeneratorId>& gens,
                                          std::size_t maxlen) {
    std::vector<Word> out;
    out.emplace_back();
    std::vector<std::vector<Letter>> frontier = {{}};
    for (std::size_t len = 1; len <= maxlen; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& seq : frontier) {
            for (const GeneratorId& g : gens) {
                for (int sign : {1, -1}) {
                    Letter l{g, sign};
                    if (!seq.empty() && seq.back() == l.inverted()) continue;
                    std::vector<Letter> extended = seq;
                    extended.push_back(l);
                    out.push_back(Word::reduce(extended));
                    next.push_back(std::move(extended));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// A directed hom search from one simplified cospan's middle into another's,
// constrained to commute with both legs and kill all relators.
struct DirectedSearch {
    const Cospan& from;
    const Cospan& to;
    const WordRewriter& to_rewriter;

    struct Constraint {
        const Word* source_word;  // word over `from` middle generators
        const Word* target_word;  // nullptr means "must be trivial"
    };

    std::vector<std::vector<Constraint>> checkable_at;  // by last-needed generator index
    bool infeasible = false;

    DirectedSearch(const Cospan& f, const Cospan& t, const WordRewriter& rw)
        : from(f), to(t), to_rewriter(rw) {
        checkable_at.resize(from.middle().generators().size());
        auto add = [this](const Word& src, const Word* dst) {
            std::size_t highest = 0;
            bool any = false;
            for (const Letter& l : src.letters()) {
                highest = std::max(highest, *from.middle().generator_index(l.gen));
                any = true;
            }
            if (!any) {
                // empty source image: the matching target must itself be trivial
                if (dst != nullptr && !to_rewriter.trivial(*dst)) infeasible = true;
                return;
            }
            checkable_at[highest].push_back({&src, dst});
        };
        for (std::size_t i = 0; i < from.left_leg().images().size(); ++i) {
            add(from.left_leg().images()[i], &to.left_leg().images()[i]);
        }
        for (std::size_t i = 0; i < from.right_leg().images().size(); ++i) {
            add(from.right_leg().images()[i], &to.right_leg().images()[i]);
        }
        for (const Word& r : from.middle().relators()) add(r, nullptr);
    }

    Word apply(const std::vector<Word>& assignment, const Word& w) const {
        std::vector<Letter> out;
        for (const Letter& l : w.letters()) {
            const Word& image = assignment[*from.middle().generator_index(l.gen)];
            if (l.sign > 0) {
                out.insert(out.end(), image.letters().begin(), image.letters().end());
            } else {
                Word inv = image.inverse();
                out.insert(out.end(), inv.letters().begin(), inv.letters().end());
            }
        }
        return Word::reduce(out);
    }

    bool satisfied(const std::vector<Word>& assignment, std::size_t idx) const {
        for (const Constraint& c : checkable_at[idx]) {
            Word image = apply(assignment, *c.source_word);
            if (c.target_word ? !to_rewriter.equal(image, *c.target_word)
                              : !to_rewriter.trivial(image)) {
                return false;
            }
        }
        return true;
    }
};

// Single-letter leg images pin down candidate images; those seeds are tried
// first, then the full enumeration.
std::map<GeneratorId, Word> forced_seeds(const Cospan& from, const Cospan& to) {
    std::map<GeneratorId, Word> seeds;
    auto scan = [&seeds](const GroupHom& a, const GroupHom& b) {
        for (std::size_t i = 0; i < a.images().size(); ++i) {
            const Word& img = a.images()[i];
            if (img.size() != 1) continue;
            const Letter& l = img.letters().front();
            seeds.try_emplace(l.gen,
                              l.sign > 0 ? b.images()[i] : b.images()[i].inverse());
        }
    };
    scan(from.left_leg(), to.left_leg());
    scan(from.right_leg(), to.right_leg());
    return seeds;
}

struct WitnessSearch {
    const Cospan& lhs;
    const Cospan& rhs;
    const IsoBudget& budget;
    WordRewriter lhs_rewriter;
    WordRewriter rhs_rewriter;
    DirectedSearch forward;
    DirectedSearch backward;
    // one shared pool per direction; per-generator forced seeds are tried first
    std::vector<Word> forward_pool;
    std::vector<Word> backward_pool;
    std::vector<std::optional<Word>> forward_seed;
    std::vector<std::optional<Word>> backward_seed;
    std::size_t steps = 0;
    bool exhausted = false;

    WitnessSearch(const Cospan& a, const Cospan& b, const IsoBudget& bd)
        : lhs(a),
          rhs(b),
          budget(bd),
          lhs_rewriter(a.middle()),
          rhs_rewriter(b.middle()),
          forward(a, b, rhs_rewriter),
          backward(b, a, lhs_rewriter) {}

    void prepare_pools() {
        forward_pool = enumerate_reduced_words(rhs.middle().generators(), budget.max_word_length);
        backward_pool = enumerate_reduced_words(lhs.middle().generators(), budget.max_word_length);
        auto collect = [this](const Cospan& from, const Cospan& to) {
            const auto seeds = forced_seeds(from, to);
            std::vector<std::optional<Word>> out(from.middle().generators().size());
            for (std::size_t i = 0; i < out.size(); ++i) {
                auto it = seeds.find(from.middle().generators()[i]);
                if (it != seeds.end() && it->second.size() <= budget.max_word_length) {
                    out[i] = it->second;
                }
            }
            return out;
        };
        forward_seed = collect(lhs, rhs);
        backward_seed = collect(rhs, lhs);
    }

    bool step() {
        ++steps;
        if (steps > budget.max_search_steps) {
            exhausted = true;
            return false;
        }
        return true;
    }

    // Cheap first shot: match generators by position with single letters.
    // Catches the common case of equal shapes under different names.
    std::optional<IsoWitness> try_aligned() {
        const auto& gens_l = lhs.middle().generators();
        const auto& gens_r = rhs.middle().generators();
        if (gens_l.size() != gens_r.size() || budget.max_word_length < 1) return std::nullopt;
        std::vector<Word> fwd, bwd;
        for (std::size_t i = 0; i < gens_l.size(); ++i) {
            fwd.push_back(Word::generator(gens_r[i]));
            bwd.push_back(Word::generator(gens_l[i]));
        }
        IsoWitness witness{lhs, rhs, std::move(fwd), std::move(bwd)};
        if (verify_witness(witness)) return witness;
        return std::nullopt;
    }

    template <typename Try>
    bool for_each_candidate(const std::vector<Word>& pool,
                            const std::optional<Word>& seed, Try&& attempt) {
        if (seed && attempt(*seed)) return true;
        if (exhausted) return false;
        for (const Word& w : pool) {
            if (seed && w == *seed) continue;
            if (attempt(w)) return true;
            if (exhausted) return false;
        }
        return false;
    }

    // Backward DFS for a two-sided inverse of the completed forward map.
    bool find_inverse(const std::vector<Word>& fwd, std::vector<Word>& bwd, std::size_t idx) {
        const auto& rhs_gens = rhs.middle().generators();
        if (idx == rhs_gens.size()) {
            // psi . phi = id on the lhs generators
            for (std::size_t i = 0; i < fwd.size(); ++i) {
                Word round_trip = backward.apply(bwd, fwd[i]);
                Word expected = Word::generator(lhs.middle().generators()[i]);
                if (!lhs_rewriter.equal(round_trip, expected)) return false;
            }
            return true;
        }
        return for_each_candidate(backward_pool, backward_seed[idx], [&](const Word& candidate) {
            if (!step()) return false;
            bwd[idx] = candidate;
            if (!backward.satisfied(bwd, idx)) return false;
            // phi . psi = id on this rhs generator
            Word round_trip = forward.apply(fwd, candidate);
            if (!rhs_rewriter.equal(round_trip, Word::generator(rhs_gens[idx]))) return false;
            return find_inverse(fwd, bwd, idx + 1);
        });
    }

    bool find_forward(std::vector<Word>& fwd, std::vector<Word>& bwd, std::size_t idx) {
        if (idx == lhs.middle().generators().size()) {
            return find_inverse(fwd, bwd, 0);
        }
        return for_each_candidate(forward_pool, forward_seed[idx], [&](const Word& candidate) {
            if (!step()) return false;
            fwd[idx] = candidate;
            if (!forward.satisfied(fwd, idx)) return false;
            return find_forward(fwd, bwd, idx + 1);
        });
    }

    std::optional<IsoWitness> run() {
        if (forward.infeasible || backward.infeasible) return std::nullopt;
        if (auto aligned = try_aligned()) return aligned;
        prepare_pools();
        std::vector<Word> fwd(lhs.middle().generators().size());
        std::vector<Word> bwd(rhs.middle().generators().size());
        if (find_forward(fwd, bwd, 0)) {
            return IsoWitness{lhs, rhs, std::move(fwd), std::move(bwd)};
        }
        return std::nullopt;
    }
};

}  // namespace

IntegerMatrix boundary_profile(const Cospan& c) {
    const IntegerMatrix relators = relator_exponent_matrix(c.middle());
    const SmithDecomposition snf = smith_normal_form(relators);
    const std::size_t gens = c.middle().generators().size();

    std::vector<std::size_t> free_columns;
    const std::size_t bound = std::min(relators.rows(), relators.cols());
    for (std::size_t j = 0; j < gens; ++j) {
        if (j >= bound || snf.d.at(j, j) == 0) free_columns.push_back(j);
    }

    IntegerMatrix legs(c.m() + c.n(), gens);
    const IntegerMatrix left = hom_exponent_matrix(c.left_leg());
    const IntegerMatrix right = hom_exponent_matrix(c.right_leg());
    for (std::size_t i = 0; i < c.m(); ++i) {
        for (std::size_t j = 0; j < gens; ++j) legs.at(i, j) = left.at(i, j);
    }
    for (std::size_t i = 0; i < c.n(); ++i) {
        for (std::size_t j = 0; j < gens; ++j) legs.at(c.m() + i, j) = right.at(i, j);
    }

    const IntegerMatrix in_snf_basis = legs.multiplied(snf.v);
    IntegerMatrix projected(c.m() + c.n(), free_columns.size());
    for (std::size_t i = 0; i < projected.rows(); ++i) {
        for (std::size_t j = 0; j < free_columns.size(); ++j) {
            projected.at(i, j) = in_snf_basis.at(i, free_columns[j]);
        }
    }
    return hermite_normal_form(projected.transposed());
}

namespace {

// The enumeration in count_homs is order^constrained; keep the invariant
// check to presentations where that stays trivial.
std::size_t constrained_generator_count(const Presentation& p) {
    std::size_t count = 0;
    for (const GeneratorId& g : p.generators()) {
        for (const Word& r : p.relators()) {
            if (r.mentions(g)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

}  // namespace

IsoVerdict iso_check(const Cospan& a, const Cospan& b, const IsoBudget& budget) {
    if (a.m() != b.m() || a.n() != b.n()) {
        return IsoVerdict::distinct("arity");
    }

    const Cospan sa = simplified(a);
    const Cospan sb = simplified(b);

    // Certify first when certification is cheap; invariants are only needed
    // to separate or to justify giving up.
    if (sa == sb && budget.max_word_length >= 1) {
        std::vector<Word> identity_images;
        for (const GeneratorId& g : sa.middle().generators()) {
            identity_images.push_back(Word::generator(g));
        }
        return IsoVerdict::equal(IsoWitness{sa, sb, identity_images, identity_images});
    }

    if (abelianize(sa.middle()) != abelianize(sb.middle())) {
        return IsoVerdict::distinct("middle abelianization");
    }
    if (!(boundary_profile(sa) == boundary_profile(sb))) {
        return IsoVerdict::distinct("abelianized boundary map");
    }
    if (constrained_generator_count(sa.middle()) <= 10 &&
        constrained_generator_count(sb.middle()) <= 10) {
        static const FiniteGroup s3 = FiniteGroup::builtin("S3");
        if (count_homs(sa.middle(), s3) != count_homs(sb.middle(), s3)) {
            return IsoVerdict::distinct("hom count into S3");
        }
    }

    const auto over = [&budget](const Cospan& c) {
        return c.middle().generators().size() > budget.max_generators ||
               c.middle().relators().size() > budget.max_relators;
    };
    if (over(sa) || over(sb)) {
        WitnessSearch oversized(sa, sb, budget);
        if (auto witness = oversized.try_aligned()) {
            return IsoVerdict::equal(std::move(*witness));
        }
        return IsoVerdict::unknown("simplified middle exceeds the search budget");
    }

    WitnessSearch search(sa, sb, budget);
    if (auto witness = search.run()) {
        return IsoVerdict::equal(std::move(*witness));
    }
    return IsoVerdict::unknown(search.exhausted ? "search step budget exhausted"
                                                : "no isomorphism found within budget");
}

bool verify_witness(const IsoWitness& w) {
    if (w.lhs.m() != w.rhs.m() || w.lhs.n() != w.rhs.n()) return false;
    if (w.forward.size() != w.lhs.middle().generators().size()) return false;
    if (w.backward.size() != w.rhs.middle().generators().size()) return false;

    try {
        const GroupHom fwd(w.lhs.middle().generators(), w.rhs.middle(), w.forward);
        const GroupHom bwd(w.rhs.middle().generators(), w.lhs.middle(), w.backward);
        const WordRewriter in_lhs(w.lhs.middle());
        const WordRewriter in_rhs(w.rhs.middle());

        for (const Word& r : w.lhs.middle().relators()) {
            if (!in_rhs.trivial(fwd.apply(r))) return false;
        }
        for (const Word& r : w.rhs.middle().relators()) {
            if (!in_lhs.trivial(bwd.apply(r))) return false;
        }
        for (const GeneratorId& g : w.lhs.middle().generators()) {
            const Word g_word = Word::generator(g);
            if (!in_lhs.equal(bwd.apply(fwd.apply(g_word)), g_word)) return false;
        }
        for (const GeneratorId& h : w.rhs.middle().generators()) {
            const Word h_word = Word::generator(h);
            if (!in_rhs.equal(fwd.apply(bwd.apply(h_word)), h_word)) return false;
        }
        for (std::size_t i = 0; i < w.lhs.left_leg().images().size(); ++i) {
            if (!in_rhs.equal(fwd.apply(w.lhs.left_leg().images()[i]),
                              w.rhs.left_leg().images()[i])) {
                return false;
            }
        }
        for (std::size_t i = 0; i < w.lhs.right_leg().images().size(); ++i) {
            if (!in_rhs.equal(fwd.apply(w.lhs.right_leg().images()[i]),
                              w.rhs.right_leg().images()[i])) {
                return false;
            }
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace tg
