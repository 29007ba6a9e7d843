#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "gamma.hpp"
#include "iso.hpp"
#include "tangle.hpp"

namespace tg {

// One instantiated relation of the tangle presentation; both sides always
// share an arity.
struct RelationCase {
    std::string id;
    Expr lhs;
    Expr rhs;
};

// The eleven cases: T0 (both equalities), T0' and T0'' (both signs), T1
// (both signs, right-hand side id1), T2 (both orders), T3.
std::vector<RelationCase> relation_cases();

struct VerificationReport {
    std::string case_id;
    IsoVerdict verdict;
    double elapsed_ms = 0.0;
};

VerificationReport check_relation(const RelationCase& c, const IsoBudget& budget = {});

struct RankTheoremReport {
    bool pass = false;
    Arity ar;
    std::size_t loops = 0;
    std::size_t expected_rank = 0;
    AbelianInvariants invariants;
};

// The abelianization rank theorem on one expression: the middle of its
// evaluation must abelianize to a free group of rank (m+n)/2 + loops.
RankTheoremReport check_abelianization_theorem(const Expr& e);

// Seeded arity-valid expression generator. Compose operands are padded with
// identities so inner arities always match; deterministic per seed.
Expr random_expr(std::uint64_t seed, std::size_t max_nodes);

}  // namespace tg
