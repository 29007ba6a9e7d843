#include "document.hpp"

#include <chrono>

namespace tg {

namespace {

std::string invariants_text(const AbelianInvariants& inv) {
    std::string out = "free rank " + std::to_string(inv.free_rank) + ", torsion [";
    for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
        if (i > 0) out += ", ";
        out += inv.torsion[i].get_str();
    }
    out += "]";
    return out;
}

std::string leg_text(const GroupHom& leg) {
    if (leg.images().empty()) return "(trivial)";
    std::string out;
    for (std::size_t i = 0; i < leg.images().size(); ++i) {
        if (i > 0) out += ", ";
        out += leg.source_generators()[i].name() + " -> " + leg.images()[i].str();
    }
    return out;
}

}  // namespace

nlohmann::ordered_json EvalDocument::to_json() const {
    nlohmann::ordered_json out;
    out["expression"] = expression;
    out["arity"] = {{"m", ar.m}, {"n", ar.n}};
    out["loops"] = loops;
    out["raw_size"] = {{"generators", raw_generators}, {"relators", raw_relators}};
    out["cospan"] = cospan.to_json();
    out["abelianization"] = invariants.to_json();
    if (!hom_counts.empty()) {
        nlohmann::ordered_json counts;
        for (const auto& [name, count] : hom_counts) counts[name] = count;
        out["hom_counts"] = std::move(counts);
    }
    if (with_timing) out["elapsed_ms"] = elapsed_ms;
    return out;
}

std::string EvalDocument::to_text() const {
    std::string out;
    out += "expression: " + expression + "\n";
    out += "arity: " + std::to_string(ar.m) + " -> " + std::to_string(ar.n) + "\n";
    out += "loops: " + std::to_string(loops) + "\n";
    out += "raw size: " + std::to_string(raw_generators) + " generators, " +
           std::to_string(raw_relators) + " relators\n";
    out += "middle: " + cospan.middle().text() + "\n";
    out += "left leg: " + leg_text(cospan.left_leg()) + "\n";
    out += "right leg: " + leg_text(cospan.right_leg()) + "\n";
    out += "abelianization: " + invariants_text(invariants) + "\n";
    for (const auto& [name, count] : hom_counts) {
        out += "homs into " + name + ": " + std::to_string(count) + "\n";
    }
    if (with_timing) out += "elapsed ms: " + std::to_string(elapsed_ms) + "\n";
    return out;
}

EvalDocument make_eval_document(const Expr& e, const EvalRequest& request) {
    const auto start = std::chrono::steady_clock::now();

    EvalOptions options;
    options.simplify_every_node = request.simplify_every_node;
    Evaluation eval = evaluate(e, options);

    EvalDocument doc{print(e),
                     arity(e),
                     connectivity(e).loops,
                     eval.raw_generator_count,
                     eval.raw_relator_count,
                     eval.cospan,
                     abelianize(eval.cospan.middle()),
                     {},
                     request.timing,
                     0.0};
    for (const FiniteGroup& g : request.hom_targets) {
        doc.hom_counts.emplace_back(g.name(), count_homs(eval.cospan.middle(), g));
    }
    doc.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return doc;
}

nlohmann::ordered_json CheckDocument::to_json() const {
    nlohmann::ordered_json out;
    if (request.relations) {
        nlohmann::ordered_json rel;
        rel["budget"] = request.budget;
        rel["cases"] = nlohmann::ordered_json::array();
        std::size_t equal = 0;
        for (const VerificationReport& r : relation_reports) {
            nlohmann::ordered_json c;
            c["id"] = r.case_id;
            nlohmann::ordered_json verdict = r.verdict.to_json();
            for (auto& [key, value] : verdict.items()) c[key] = value;
            if (request.timing) c["elapsed_ms"] = r.elapsed_ms;
            if (r.verdict.is_equal()) ++equal;
            rel["cases"].push_back(std::move(c));
        }
        rel["equal"] = equal;
        rel["total"] = relation_reports.size();
        rel["passed"] = relations_passed;
        out["relations"] = std::move(rel);
    }
    if (request.rank_theorem) {
        nlohmann::ordered_json rank;
        rank["seeds"] = request.seeds;
        rank["max_nodes"] = request.max_nodes;
        rank["passes"] = rank_passes;
        rank["failures"] = nlohmann::ordered_json::array();
        for (const RankFailure& f : rank_failures) {
            nlohmann::ordered_json entry;
            entry["seed"] = f.seed;
            entry["expression"] = f.expression;
            entry["arity"] = {{"m", f.report.ar.m}, {"n", f.report.ar.n}};
            entry["loops"] = f.report.loops;
            entry["expected_rank"] = f.report.expected_rank;
            entry["abelianization"] = f.report.invariants.to_json();
            rank["failures"].push_back(std::move(entry));
        }
        rank["passed"] = rank_passed;
        out["rank_theorem"] = std::move(rank);
    }
    out["passed"] = passed;
    return out;
}

std::string CheckDocument::to_text() const {
    std::string out;
    if (request.relations) {
        out += "relations (budget " + std::to_string(request.budget) + ")\n";
        std::size_t equal = 0;
        for (const VerificationReport& r : relation_reports) {
            std::string verdict;
            switch (r.verdict.kind()) {
                case IsoVerdict::Kind::Equal:
                    verdict = "equal";
                    ++equal;
                    break;
                case IsoVerdict::Kind::Distinct:
                    verdict = "distinct (" + r.verdict.detail() + ")";
                    break;
                case IsoVerdict::Kind::Unknown:
                    verdict = "unknown (" + r.verdict.detail() + ")";
                    break;
            }
            out += "  " + r.case_id + std::string(r.case_id.size() < 6 ? 6 - r.case_id.size() : 1, ' ') +
                   verdict;
            if (request.timing) out += "  [" + std::to_string(r.elapsed_ms) + " ms]";
            out += "\n";
        }
        out += "  " + std::to_string(equal) + "/" + std::to_string(relation_reports.size()) +
               " equal\n";
    }
    if (request.rank_theorem) {
        out += "rank theorem (seeds " + std::to_string(request.seeds) + ", max nodes " +
               std::to_string(request.max_nodes) + ")\n";
        out += "  " + std::to_string(rank_passes) + "/" + std::to_string(request.seeds) +
               " pass\n";
        for (const RankFailure& f : rank_failures) {
            out += "  seed " + std::to_string(f.seed) + " FAIL: " + f.expression +
                   " expected rank " + std::to_string(f.report.expected_rank) + ", got " +
                   invariants_text(f.report.invariants) + "\n";
        }
    }
    out += passed ? "PASS\n" : "FAIL\n";
    return out;
}

CheckDocument run_checks(const CheckRequest& request) {
    CheckDocument doc;
    doc.request = request;

    if (request.relations) {
        IsoBudget budget;
        budget.max_word_length = request.budget;
        for (const RelationCase& c : relation_cases()) {
            VerificationReport report = check_relation(c, budget);
            if (!report.verdict.is_equal()) doc.relations_passed = false;
            doc.relation_reports.push_back(std::move(report));
        }
        doc.passed = doc.passed && doc.relations_passed;
    }
    if (request.rank_theorem) {
        for (std::uint64_t seed = 0; seed < request.seeds; ++seed) {
            Expr e = random_expr(seed, request.max_nodes);
            RankTheoremReport report = check_abelianization_theorem(e);
            if (report.pass) {
                ++doc.rank_passes;
            } else {
                doc.rank_failures.push_back({seed, print(e), report});
                doc.rank_passed = false;
            }
        }
        doc.passed = doc.passed && doc.rank_passed;
    }
    return doc;
}

}  // namespace tg
