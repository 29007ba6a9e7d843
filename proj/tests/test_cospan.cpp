#include <cstdint>
#include <functional>
#include <map>
#include <random>

#include "abelian.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "finite_group.hpp"
#include "gamma.hpp"
#include "iso.hpp"
#include "verify.hpp"

using tg::boundary_generators;
using tg::Cospan;
using tg::Error;
using tg::GeneratorId;
using tg::GroupHom;
using tg::IsoBudget;
using tg::IsoVerdict;
using tg::Presentation;
using tg::Word;

TEST_CASE("identity cospans") {
    const Cospan zero = tg::identity_cospan(0);
    CHECK(zero.middle().generators().empty());
    CHECK(zero.left_leg().images().empty());

    const Cospan one = tg::identity_cospan(1);
    CHECK(one.middle().text() == "< p1 | >");
    CHECK(one.left_leg().images()[0] == Word::generator(GeneratorId{"p1"}));
    CHECK(one.right_leg() == one.left_leg());
}

TEST_CASE("compose requires matching arities") {
    CHECK_THROWS_AS(tg::compose(tg::identity_cospan(1), tg::identity_cospan(2)), Error);
}

TEST_CASE("composing the cup with the cap yields the infinite cyclic middle") {
    const Cospan unknot = tg::compose(tg::generator_cospan(tg::ExprNode::Kind::Cup),
                                      tg::generator_cospan(tg::ExprNode::Kind::Cap));
    CHECK(unknot.m() == 0);
    CHECK(unknot.n() == 0);
    const auto inv = abelianize(unknot.middle());
    CHECK(inv.free_rank == 1);
    CHECK(inv.torsion.empty());
    const Cospan reduced = tg::simplified(unknot);
    CHECK(reduced.middle().generators().size() == 1);
    CHECK(reduced.middle().relators().empty());
}

TEST_CASE("unit laws hold up to verified isomorphism") {
    const Cospan xp = tg::generator_cospan(tg::ExprNode::Kind::Xp);
    const IsoVerdict left = tg::iso_check(tg::compose(tg::identity_cospan(2), xp), xp);
    const IsoVerdict right = tg::iso_check(tg::compose(xp, tg::identity_cospan(2)), xp);
    REQUIRE(left.is_equal());
    REQUIRE(right.is_equal());
    CHECK(tg::verify_witness(left.witness()));
    CHECK(tg::verify_witness(right.witness()));
}

TEST_CASE("tensor arities add and the unit is the empty cospan") {
    const Cospan two = tg::tensor(tg::identity_cospan(1), tg::identity_cospan(1));
    CHECK(tg::iso_check(two, tg::identity_cospan(2)).is_equal());

    const Cospan cup = tg::generator_cospan(tg::ExprNode::Kind::Cup);
    CHECK(tg::iso_check(tg::tensor(cup, tg::identity_cospan(0)), cup).is_equal());

    const Cospan pair = tg::tensor(cup, cup);
    CHECK(pair.m() == 0);
    CHECK(pair.n() == 4);
    CHECK(abelianize(pair.middle()).free_rank == 2);
    CHECK(pair.middle().relators().empty());
}

TEST_CASE("lambda embedding of the identity is the identity diagram") {
    const Presentation f2 = Presentation::free_group(boundary_generators(2));
    const Cospan embedded = tg::lambda_embed(GroupHom::identity(f2), f2);
    CHECK(tg::iso_check(embedded, tg::identity_cospan(2)).is_equal());
}

TEST_CASE("lambda is functorial on the squaring endomorphism") {
    const Presentation f1 = Presentation::free_group(boundary_generators(1));
    const GeneratorId p1{"p1"};
    const GroupHom square(f1.generators(), f1, {Word::generator(p1) * Word::generator(p1)});

    const Cospan via_composition =
        tg::compose(tg::lambda_embed(square, f1), tg::lambda_embed(square, f1));
    const Cospan direct = tg::lambda_embed(square.then(square), f1);
    const IsoVerdict verdict = tg::iso_check(direct, via_composition);
    REQUIRE(verdict.is_equal());

    // both sides send p1 to the fourth power of the surviving generator
    const Cospan reduced = tg::simplified(via_composition);
    CHECK(reduced.left_leg().images()[0].size() == 4);
}

TEST_CASE("lambda embedding rejects presented sources") {
    const GeneratorId x{"x"};
    const Presentation z2({x}, {Word::generator(x) * Word::generator(x)});
    CHECK_THROWS_AS(tg::lambda_embed(GroupHom::identity(z2), z2), Error);
}

TEST_CASE("iso_check certifies reflexivity with an identity witness") {
    const Cospan xp = tg::generator_cospan(tg::ExprNode::Kind::Xp);
    const IsoVerdict verdict = tg::iso_check(xp, xp);
    REQUIRE(verdict.is_equal());
    for (std::size_t i = 0; i < verdict.witness().forward.size(); ++i) {
        CHECK(verdict.witness().forward[i] ==
              Word::generator(verdict.witness().rhs.middle().generators()[i]));
    }
}

TEST_CASE("iso_check separates different arities immediately") {
    const IsoVerdict verdict =
        tg::iso_check(tg::identity_cospan(1), tg::generator_cospan(tg::ExprNode::Kind::Cup));
    CHECK(verdict.kind() == IsoVerdict::Kind::Distinct);
    CHECK(verdict.detail() == "arity");
}

TEST_CASE("the two crossings are never reported equal") {
    const Cospan xp = tg::generator_cospan(tg::ExprNode::Kind::Xp);
    const Cospan xm = tg::generator_cospan(tg::ExprNode::Kind::Xm);
    const IsoVerdict verdict = tg::iso_check(xp, xm);
    CHECK_FALSE(verdict.is_equal());

    // yet they are mutually inverse: both composition orders give id_2
    CHECK(tg::iso_check(tg::compose(xp, xm), tg::identity_cospan(2)).is_equal());
    CHECK(tg::iso_check(tg::compose(xm, xp), tg::identity_cospan(2)).is_equal());
}

TEST_CASE("budget zero certifies nothing") {
    IsoBudget zero;
    zero.max_word_length = 0;
    const Cospan xp = tg::generator_cospan(tg::ExprNode::Kind::Xp);
    const IsoVerdict verdict = tg::iso_check(xp, xp, zero);
    CHECK(verdict.kind() == IsoVerdict::Kind::Unknown);
}

TEST_CASE("equal verdicts imply matching invariants") {
    const tg::FiniteGroup s3 = tg::FiniteGroup::builtin("S3");
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const tg::Expr e = tg::random_expr(rng(), 5);
        const Cospan c = tg::evaluate(e).cospan;
        const IsoVerdict verdict =
            tg::iso_check(tg::compose(tg::identity_cospan(c.m()), c), c,
                          IsoBudget{3, 16, 16, 500000});
        REQUIRE(verdict.is_equal());
        CHECK(tg::verify_witness(verdict.witness()));
        CHECK(abelianize(verdict.witness().lhs.middle()) ==
              abelianize(verdict.witness().rhs.middle()));
        CHECK(count_homs(verdict.witness().lhs.middle(), s3) ==
              count_homs(verdict.witness().rhs.middle(), s3));
    }
}

TEST_CASE("distinct verdicts re-verify their invariant") {
    using tg::abelianize;
    using tg::boundary_profile;

    // arity split
    const Cospan cup = tg::generator_cospan(tg::ExprNode::Kind::Cup);
    const IsoVerdict arity_split =
        tg::iso_check(tg::tensor(cup, cup), tg::tensor(cup, tg::identity_cospan(0)));
    CHECK(arity_split.kind() == IsoVerdict::Kind::Distinct);
    CHECK(arity_split.detail() == "arity");

    // abelianization split: unknot vs hopf, both closed tangles
    const Cospan unknot = tg::evaluate(tg::builtin("unknot")).cospan;
    const Cospan hopf = tg::evaluate(tg::builtin("hopf")).cospan;
    const IsoVerdict rank_split = tg::iso_check(unknot, hopf);
    CHECK(rank_split.kind() == IsoVerdict::Kind::Distinct);
    CHECK(rank_split.detail() == "middle abelianization");
    CHECK(abelianize(unknot.middle()) != abelianize(hopf.middle()));

    // boundary-map split: two embeddings of F1 into F2 with different
    // exponent data share the middle but not the legs
    const Presentation f1 = Presentation::free_group(boundary_generators(1));
    const Presentation f2 = Presentation::free_group(boundary_generators(2));
    const GeneratorId p1{"p1"}, p2{"p2"};
    const GroupHom f(f1.generators(), f2, {Word::generator(p1)});
    const GroupHom g(f1.generators(), f2, {Word::generator(p1) * Word::generator(p2)});
    const Cospan lf = tg::simplified(tg::lambda_embed(f, f1));
    const Cospan lg = tg::simplified(tg::lambda_embed(g, f1));
    const IsoVerdict leg_split = tg::iso_check(lf, lg);
    CHECK(leg_split.kind() == IsoVerdict::Kind::Distinct);
    CHECK(leg_split.detail() == "abelianized boundary map");
    CHECK(!(boundary_profile(lf) == boundary_profile(lg)));
}

TEST_CASE("boundary profile is invariant across bracketing and naming") {
    const tg::Expr flat = tg::parse("x+ ; x- ; x+");
    const tg::Expr nested = tg::parse("x+ ; (x- ; x+)");
    CHECK(tg::boundary_profile(tg::evaluate(flat).cospan) ==
          tg::boundary_profile(tg::evaluate(nested).cospan));
}

namespace {

// Functional oracle for cospan isomorphism: the multiset of boundary
// restrictions of homs middle -> T. Isomorphic cospans must agree on it,
// since composing with the middle isomorphism bijects the hom sets while
// fixing every boundary restriction.
std::map<std::vector<std::uint32_t>, int> boundary_restriction_multiset(
    const Cospan& c, const tg::FiniteGroup& t) {
    std::map<std::vector<std::uint32_t>, int> out;
    const Presentation& p = c.middle();
    std::vector<std::uint32_t> assignment(p.generators().size(), 0);

    auto eval = [&](const Word& w) {
        std::uint32_t acc = t.identity();
        for (const tg::Letter& l : w.letters()) {
            std::uint32_t img = assignment[*p.generator_index(l.gen)];
            if (l.sign < 0) img = t.inverse(img);
            acc = t.mul(acc, img);
        }
        return acc;
    };

    std::function<void(std::size_t)> recurse = [&](std::size_t idx) {
        if (idx == assignment.size()) {
            for (const Word& r : p.relators()) {
                if (eval(r) != t.identity()) return;
            }
            std::vector<std::uint32_t> restriction;
            for (const Word& w : c.left_leg().images()) restriction.push_back(eval(w));
            for (const Word& w : c.right_leg().images()) restriction.push_back(eval(w));
            ++out[restriction];
            return;
        }
        for (std::uint32_t v = 0; v < t.order(); ++v) {
            assignment[idx] = v;
            recurse(idx + 1);
        }
    };
    recurse(0);
    return out;
}

}  // namespace

TEST_CASE("equal verdicts agree on boundary-restriction multisets") {
    const tg::FiniteGroup z4 = tg::FiniteGroup::builtin("Z4");
    std::mt19937_64 rng(4040);
    int compared = 0;
    for (int trial = 0; trial < 40 && compared < 8; ++trial) {
        const tg::Expr e = tg::random_expr(rng(), 5);
        const Cospan c = tg::evaluate(e).cospan;
        if (c.middle().generators().size() > 6) continue;
        const auto verdict = tg::iso_check(tg::compose(tg::identity_cospan(c.m()), c), c,
                                           tg::IsoBudget{3, 16, 16, 500000});
        REQUIRE(verdict.is_equal());
        CHECK(boundary_restriction_multiset(verdict.witness().lhs, z4) ==
              boundary_restriction_multiset(verdict.witness().rhs, z4));
        ++compared;
    }
    CHECK(compared > 0);
}

TEST_CASE("iso_check is deterministic for a fixed budget") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 8; ++trial) {
        const tg::Expr e1 = tg::random_expr(rng(), 5);
        const tg::Expr e2 = tg::random_expr(rng(), 5);
        const Cospan a = tg::evaluate(e1).cospan;
        const Cospan b = tg::evaluate(e2).cospan;
        if (a.m() != b.m() || a.n() != b.n()) continue;
        const auto v1 = tg::iso_check(a, b);
        const auto v2 = tg::iso_check(a, b);
        CHECK(v1.to_json().dump() == v2.to_json().dump());
    }
}

TEST_CASE("cospan json follows the documented shape") {
    const Cospan cup = tg::generator_cospan(tg::ExprNode::Kind::Cup);
    const auto j = cup.to_json();
    CHECK(j.at("m") == 0);
    CHECK(j.at("n") == 2);
    CHECK(j.at("middle").at("generators").size() == 1);
    CHECK(j.at("left").empty());
    CHECK(j.at("right").size() == 2);
}
