#include <random>

#include "abelian.hpp"
#include "doctest.h"
#include "finite_group.hpp"
#include "tietze.hpp"

using tg::GeneratorId;
using tg::GroupHom;
using tg::Presentation;
using tg::TietzeResult;
using tg::Word;

TEST_CASE("two-generator amalgam collapses to one free generator") {
    const GeneratorId b{"b"}, b2{"b'"};
    const Word r1 = Word::generator(b) * Word::generator(b2, -1);
    const Word r2 = Word::generator(b, -1) * Word::generator(b2);
    const Presentation p({b, b2}, {r1, r2});

    const GroupHom leg({GeneratorId{"p1"}}, p, {Word::generator(b2)});
    const TietzeResult res = tietze_simplify(p, {leg});

    CHECK(res.presentation.generators().size() == 1);
    CHECK(res.presentation.relators().empty());
    // the transported leg lands on the surviving generator
    REQUIRE(res.transported.size() == 1);
    CHECK(res.transported[0].images()[0] ==
          Word::generator(res.presentation.generators()[0]));
    CHECK_FALSE(res.trace.moves.empty());
}

TEST_CASE("free presentations are already simplified") {
    const Presentation p = Presentation::free_group(tg::numbered_generators("x", 3));
    const TietzeResult res = tietze_simplify(p);
    CHECK(res.presentation == p);
    CHECK(res.trace.moves.empty());
}

TEST_CASE("length-one relators kill their generator") {
    const GeneratorId x{"x"}, y{"y"};
    const Presentation p({x, y}, {Word::generator(y)});
    const TietzeResult res = tietze_simplify(p);
    CHECK(res.presentation.generators() == std::vector<GeneratorId>{x});
    CHECK(res.presentation.relators().empty());
}

TEST_CASE("duplicate relators up to rotation and inversion are dropped") {
    const GeneratorId x{"x"}, y{"y"};
    const Word w = Word::generator(x) * Word::generator(y) * Word::generator(x) *
                   Word::generator(y);
    // same relator rotated and inverted
    const Word rotated = Word::generator(y) * Word::generator(x) * Word::generator(y) *
                         Word::generator(x);
    const Word inverted = w.inverse();
    const Presentation p({x, y}, {w, rotated, inverted});
    const TietzeResult res = tietze_simplify(p);
    CHECK(res.presentation.relators().size() == 1);
}

TEST_CASE("simplification preserves abelian invariants and finite hom counts") {
    std::mt19937_64 rng(2024);
    const tg::FiniteGroup s3 = tg::FiniteGroup::builtin("S3");
    const tg::FiniteGroup z4 = tg::FiniteGroup::builtin("Z4");

    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n_gens = 1 + rng() % 5;
        std::vector<GeneratorId> gens = tg::numbered_generators("g", n_gens);
        std::vector<Word> relators;
        const std::size_t n_rel = rng() % 4;
        for (std::size_t i = 0; i < n_rel; ++i) {
            std::vector<tg::Letter> letters;
            const std::size_t len = 1 + rng() % 6;
            for (std::size_t k = 0; k < len; ++k) {
                letters.push_back({gens[rng() % n_gens], rng() % 2 == 0 ? 1 : -1});
            }
            relators.push_back(Word::reduce(letters));
        }
        const Presentation p(gens, relators);
        const TietzeResult res = tietze_simplify(p);

        CHECK(abelianize(p) == abelianize(res.presentation));
        CHECK(count_homs(p, s3) == count_homs(res.presentation, s3));
        CHECK(count_homs(p, z4) == count_homs(res.presentation, z4));
    }
}

TEST_CASE("pass limit caps the loop") {
    const GeneratorId x{"x"}, y{"y"};
    const Word r1 = Word::generator(x) * Word::generator(y, -1);
    const Presentation p({x, y}, {r1});
    tg::TietzeOptions options;
    options.max_passes = 1;
    const TietzeResult res = tietze_simplify(p, {}, options);
    CHECK(res.trace.passes <= 1);
}
