#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finite_group.hpp"
#include "gamma.hpp"
#include "json.hpp"
#include "verify.hpp"

namespace tg {

struct EvalRequest {
    bool simplify_every_node = false;
    std::vector<FiniteGroup> hom_targets;
    bool timing = false;  // wall-clock fields only appear when asked for
};

// Everything the eval pipeline reports about one expression. The text and
// JSON renderings carry the same fields.
struct EvalDocument {
    std::string expression;
    Arity ar;
    std::size_t loops = 0;
    std::size_t raw_generators = 0;
    std::size_t raw_relators = 0;
    Cospan cospan;
    AbelianInvariants invariants;
    std::vector<std::pair<std::string, std::uint64_t>> hom_counts;
    bool with_timing = false;
    double elapsed_ms = 0.0;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

EvalDocument make_eval_document(const Expr& e, const EvalRequest& request);

struct CheckRequest {
    bool relations = false;
    bool rank_theorem = false;
    std::size_t budget = 3;  // witness word length for iso checks
    std::uint64_t seeds = 200;
    std::size_t max_nodes = 12;
    bool timing = false;
};

struct CheckDocument {
    CheckRequest request;
    std::vector<VerificationReport> relation_reports;
    bool relations_passed = true;
    struct RankFailure {
        std::uint64_t seed;
        std::string expression;
        RankTheoremReport report;
    };
    std::uint64_t rank_passes = 0;
    std::vector<RankFailure> rank_failures;
    bool rank_passed = true;
    bool passed = true;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

CheckDocument run_checks(const CheckRequest& request);

}  // namespace tg
