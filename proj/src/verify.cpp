#include "verify.hpp"

#include <chrono>
#include <random>

namespace tg {

std::vector<RelationCase> relation_cases() {
    const auto id1 = [] { return make_id(1); };
    const auto id2 = [] { return make_id(2); };

    std::vector<RelationCase> cases;

    // T0: (cup x id1) ; (id1 x cap) = id1 = (id1 x cup) ; (cap x id1)
    cases.push_back({"T0a",
                     make_compose(make_tensor(make_cup(), id1()), make_tensor(id1(), make_cap())),
                     id1()});
    cases.push_back({"T0b",
                     make_compose(make_tensor(id1(), make_cup()), make_tensor(make_cap(), id1())),
                     id1()});

    // T0': (id1 x cup) ; (x± x id1) = (cup x id1) ; (id1 x x∓)
    for (bool positive : {true, false}) {
        Expr x = positive ? make_xp() : make_xm();
        Expr x_flip = positive ? make_xm() : make_xp();
        cases.push_back(
            {positive ? "T0'+" : "T0'-",
             make_compose(make_tensor(id1(), make_cup()), make_tensor(x, id1())),
             make_compose(make_tensor(make_cup(), id1()), make_tensor(id1(), x_flip))});
    }

    // T0'': (x± x id1) ; (id1 x cap) = (id1 x x∓) ; (cap x id1)
    for (bool positive : {true, false}) {
        Expr x = positive ? make_xp() : make_xm();
        Expr x_flip = positive ? make_xm() : make_xp();
        cases.push_back(
            {positive ? "T0''+" : "T0''-",
             make_compose(make_tensor(x, id1()), make_tensor(id1(), make_cap())),
             make_compose(make_tensor(id1(), x_flip), make_tensor(make_cap(), id1()))});
    }

    // T1: (id1 x cup) ; (x± x id1) ; (id1 x cap) = id1 (Reidemeister I; the
    // right-hand side is fixed as id1)
    for (bool positive : {true, false}) {
        Expr x = positive ? make_xp() : make_xm();
        cases.push_back(
            {positive ? "T1+" : "T1-",
             make_compose(make_compose(make_tensor(id1(), make_cup()), make_tensor(x, id1())),
                          make_tensor(id1(), make_cap())),
             id1()});
    }

    // T2: x± ; x∓ = id2
    cases.push_back({"T2a", make_compose(make_xp(), make_xm()), id2()});
    cases.push_back({"T2b", make_compose(make_xm(), make_xp()), id2()});

    // T3: (x+ x id1) ; (id1 x x+) ; (x+ x id1)
    //   = (id1 x x+) ; (x+ x id1) ; (id1 x x+)
    cases.push_back(
        {"T3",
         make_compose(make_compose(make_tensor(make_xp(), id1()), make_tensor(id1(), make_xp())),
                      make_tensor(make_xp(), id1())),
         make_compose(make_compose(make_tensor(id1(), make_xp()), make_tensor(make_xp(), id1())),
                      make_tensor(id1(), make_xp()))});

    return cases;
}

VerificationReport check_relation(const RelationCase& c, const IsoBudget& budget) {
    const auto start = std::chrono::steady_clock::now();
    const Cospan lhs = evaluate(c.lhs).cospan;
    const Cospan rhs = evaluate(c.rhs).cospan;
    IsoVerdict verdict = iso_check(lhs, rhs, budget);
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    return {c.id, std::move(verdict), elapsed.count()};
}

RankTheoremReport check_abelianization_theorem(const Expr& e) {
    RankTheoremReport report;
    report.ar = arity(e);
    report.loops = connectivity(e).loops;
    report.invariants = abelianize(evaluate(e).cospan.middle());
    report.expected_rank = (report.ar.m + report.ar.n) / 2 + report.loops;
    report.pass = report.invariants.free_rank == report.expected_rank &&
                  report.invariants.torsion.empty();
    return report;
}

namespace {

// Plain modulo on the raw engine output keeps the sequence identical across
// standard library implementations.
std::uint64_t roll(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Expr random_atom(std::mt19937_64& rng) {
    switch (roll(rng, 5)) {
        case 0:
            return make_cup();
        case 1:
            return make_cap();
        case 2:
            return make_xp();
        case 3:
            return make_xm();
        default:
            return make_id(1 + roll(rng, 3));
    }
}

Expr random_node(std::mt19937_64& rng, std::size_t budget) {
    if (budget <= 1) return random_atom(rng);
    const std::uint64_t kind = roll(rng, 5);
    if (kind == 0) return random_atom(rng);

    const std::size_t left_budget = 1 + roll(rng, budget - 1);
    const std::size_t right_budget = budget - left_budget;
    Expr lhs = random_node(rng, left_budget);
    Expr rhs = random_node(rng, right_budget);

    if (kind <= 2) return make_tensor(std::move(lhs), std::move(rhs));

    // compose: pad the narrower side with an identity so inner arities meet
    const std::size_t upper = arity(lhs).n;
    const std::size_t lower = arity(rhs).m;
    if (upper < lower) {
        lhs = make_tensor(std::move(lhs), make_id(lower - upper));
    } else if (lower < upper) {
        rhs = make_tensor(std::move(rhs), make_id(upper - lower));
    }
    return make_compose(std::move(lhs), std::move(rhs));
}

}  // namespace

Expr random_expr(std::uint64_t seed, std::size_t max_nodes) {
    std::mt19937_64 rng(seed);
    return random_node(rng, max_nodes == 0 ? 1 : max_nodes);
}

}  // namespace tg
