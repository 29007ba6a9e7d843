#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cospan.hpp"
#include "json.hpp"
#include "matrix.hpp"

namespace tg {

struct IsoBudget {
    std::size_t max_word_length = 3;  // witness images are words of at most this length
    std::size_t max_generators = 8;   // after simplification; larger middles report Unknown
    std::size_t max_relators = 8;
    std::size_t max_search_steps = 500000;  // fixed cap keeping the search bounded
};

// Sound, budget-free word calculus: free reduction plus length-reducing
// rewriting by cyclic rotations of the relators. `trivial` returning true is
// a proof; returning false decides nothing unless the presentation is free.
class WordRewriter {
public:
    explicit WordRewriter(const Presentation& p);

    bool trivial(const Word& w) const;
    bool equal(const Word& a, const Word& b) const { return trivial(a * b.inverse()); }

private:
    bool free_;
    std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> rules_;
};

bool is_trivial_in_group(const Word& w, const Presentation& p);
bool words_equal_in_group(const Word& a, const Word& b, const Presentation& p);

// A certified isomorphism between the Tietze-simplified forms of the two
// compared cospans: generator images both ways, verified on all relators,
// both compositions, and both leg triangles.
struct IsoWitness {
    Cospan lhs;
    Cospan rhs;
    std::vector<Word> forward;   // images of lhs middle generators
    std::vector<Word> backward;  // images of rhs middle generators

    nlohmann::ordered_json to_json() const;
};

// Tri-state outcome. Equal only ever carries a verified witness; Distinct
// names a computable invariant whose values genuinely differ; everything
// else is Unknown, never an error.
class IsoVerdict {
public:
    enum class Kind { Equal, Distinct, Unknown };

    static IsoVerdict equal(IsoWitness w);
    static IsoVerdict distinct(std::string invariant);
    static IsoVerdict unknown(std::string reason);

    Kind kind() const noexcept { return kind_; }
    bool is_equal() const noexcept { return kind_ == Kind::Equal; }
    const IsoWitness& witness() const { return *witness_; }
    const std::string& detail() const noexcept { return detail_; }

    nlohmann::ordered_json to_json() const;

private:
    IsoVerdict(Kind k, std::optional<IsoWitness> w, std::string detail)
        : kind_(k), witness_(std::move(w)), detail_(std::move(detail)) {}

    Kind kind_;
    std::optional<IsoWitness> witness_;
    std::string detail_;
};

IsoVerdict iso_check(const Cospan& a, const Cospan& b, const IsoBudget& budget = {});

// Independent replay of every equation a witness claims.
bool verify_witness(const IsoWitness& w);

// Canonical form of the combined boundary map into the free quotient of the
// abelianized middle: a Hermite normal form, identical for isomorphic
// cospans. One of iso_check's separating invariants.
IntegerMatrix boundary_profile(const Cospan& c);

}  // namespace tg
