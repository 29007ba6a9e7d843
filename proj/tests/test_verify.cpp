#include <set>

#include "doctest.h"
#include "document.hpp"
#include "gamma.hpp"
#include "iso.hpp"
#include "verify.hpp"

using tg::IsoVerdict;
using tg::RelationCase;
using tg::VerificationReport;

TEST_CASE("the relation list instantiates all eleven cases with equal arities") {
    const auto cases = tg::relation_cases();
    REQUIRE(cases.size() == 11);

    std::set<std::string> ids;
    for (const RelationCase& c : cases) {
        ids.insert(c.id);
        CHECK(arity(c.lhs) == arity(c.rhs));
    }
    CHECK(ids == std::set<std::string>{"T0a", "T0b", "T0'+", "T0'-", "T0''+", "T0''-", "T1+",
                                       "T1-", "T2a", "T2b", "T3"});

    // spot-check the documented shapes
    for (const RelationCase& c : cases) {
        if (c.id == "T2a") {
            CHECK(tg::print(c.lhs) == "x+ ; x-");
            CHECK(tg::print(c.rhs) == "id(2)");
        }
        if (c.id == "T0a") {
            CHECK(tg::print(c.lhs) == "cup * id(1) ; id(1) * cap");
        }
        if (c.id == "T1+") {
            CHECK(tg::print(c.lhs) == "id(1) * cup ; x+ * id(1) ; id(1) * cap");
            CHECK(tg::print(c.rhs) == "id(1)");
        }
    }
}

TEST_CASE("every relation holds under the functor with a verified witness") {
    for (const RelationCase& c : tg::relation_cases()) {
        const VerificationReport report = tg::check_relation(c);
        INFO(c.id);
        REQUIRE(report.verdict.is_equal());
        CHECK(tg::verify_witness(report.verdict.witness()));
    }
}

TEST_CASE("a zero budget downgrades every relation to unknown") {
    tg::IsoBudget zero;
    zero.max_word_length = 0;
    for (const RelationCase& c : tg::relation_cases()) {
        const VerificationReport report = tg::check_relation(c, zero);
        CHECK(report.verdict.kind() == IsoVerdict::Kind::Unknown);
    }
}

TEST_CASE("rank theorem on the generators and the corpus") {
    // cup: rank 1 == (0+2)/2 + 0
    CHECK(tg::check_abelianization_theorem(tg::make_cup()).pass);
    CHECK(tg::check_abelianization_theorem(tg::make_xp()).pass);
    CHECK(tg::check_abelianization_theorem(tg::make_id(3)).pass);

    const auto unknot = tg::check_abelianization_theorem(tg::builtin("unknot"));
    CHECK(unknot.pass);
    CHECK(unknot.invariants.free_rank == 1);
    CHECK(unknot.loops == 1);

    const auto hopf = tg::check_abelianization_theorem(tg::builtin("hopf"));
    CHECK(hopf.pass);
    CHECK(hopf.invariants.free_rank == 2);
    CHECK(hopf.loops == 2);

    const auto figure8 = tg::check_abelianization_theorem(tg::builtin("figure8"));
    CHECK(figure8.pass);
    CHECK(figure8.invariants.free_rank == 1);
}

TEST_CASE("rank theorem holds on a seeded batch") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto report = tg::check_abelianization_theorem(tg::random_expr(seed, 12));
        INFO("seed ", seed);
        CHECK(report.pass);
    }
}

TEST_CASE("check documents render both formats with the same verdicts") {
    tg::CheckRequest request;
    request.relations = true;
    request.rank_theorem = true;
    request.seeds = 10;
    request.max_nodes = 6;
    const tg::CheckDocument doc = tg::run_checks(request);
    CHECK(doc.passed);
    CHECK(doc.relation_reports.size() == 11);
    CHECK(doc.rank_passes == 10);

    const auto j = doc.to_json();
    CHECK(j.at("passed") == true);
    CHECK(j.at("relations").at("equal") == 11);
    CHECK(j.at("relations").at("cases").size() == 11);
    CHECK(j.at("rank_theorem").at("passes") == 10);

    const std::string text = doc.to_text();
    CHECK(text.find("11/11 equal") != std::string::npos);
    CHECK(text.find("10/10 pass") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);

    // timing fields only appear when asked for
    CHECK(j.dump().find("elapsed") == std::string::npos);
}

TEST_CASE("text and json eval output carry the same data across the corpus") {
    for (const std::string& name : tg::builtin_tangle_names()) {
        const tg::EvalDocument doc = tg::make_eval_document(tg::builtin(name), {});
        const auto j = doc.to_json();
        const std::string text = doc.to_text();

        CHECK(text.find("expression: " + j.at("expression").get<std::string>()) !=
              std::string::npos);
        CHECK(text.find("loops: " + std::to_string(j.at("loops").get<std::size_t>())) !=
              std::string::npos);
        CHECK(text.find("free rank " +
                        std::to_string(
                            j.at("abelianization").at("free_rank").get<std::size_t>())) !=
              std::string::npos);
        CHECK(text.find("raw size: " +
                        std::to_string(j.at("raw_size").at("generators").get<std::size_t>()) +
                        " generators") != std::string::npos);
    }
}

TEST_CASE("eval documents carry the full pipeline output") {
    tg::EvalRequest request;
    request.hom_targets.push_back(tg::FiniteGroup::builtin("S3"));
    const tg::EvalDocument doc = tg::make_eval_document(tg::builtin("trefoil"), request);

    CHECK(doc.ar.m == 0);
    CHECK(doc.ar.n == 0);
    CHECK(doc.loops == 1);
    CHECK(doc.invariants.free_rank == 1);
    REQUIRE(doc.hom_counts.size() == 1);
    CHECK(doc.hom_counts[0].second == 12);

    const auto j = doc.to_json();
    CHECK(j.at("hom_counts").at("S3") == 12);
    CHECK(j.at("loops") == 1);
    const std::string text = doc.to_text();
    CHECK(text.find("homs into S3: 12") != std::string::npos);
    CHECK(text.find("loops: 1") != std::string::npos);
}
