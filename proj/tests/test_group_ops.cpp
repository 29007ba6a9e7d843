#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "abelian.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "finite_group.hpp"
#include "hom.hpp"
#include "tietze.hpp"

using tg::Error;
using tg::FiniteGroup;
using tg::GeneratorId;
using tg::GroupHom;
using tg::Presentation;
using tg::ProductDiagram;
using tg::Word;

namespace {

// Independent hom enumerator for the universality oracle: all assignments of
// generators to group elements satisfying the relators, with no pruning.
std::vector<std::vector<std::uint32_t>> all_homs(const Presentation& p, const FiniteGroup& g) {
    std::vector<std::vector<std::uint32_t>> result;
    std::vector<std::uint32_t> assignment(p.generators().size(), 0);

    std::function<void(std::size_t)> recurse = [&](std::size_t idx) {
        if (idx == assignment.size()) {
            for (const Word& r : p.relators()) {
                std::uint32_t acc = g.identity();
                for (const tg::Letter& l : r.letters()) {
                    std::uint32_t img = assignment[*p.generator_index(l.gen)];
                    if (l.sign < 0) img = g.inverse(img);
                    acc = g.mul(acc, img);
                }
                if (acc != g.identity()) return;
            }
            result.push_back(assignment);
            return;
        }
        for (std::uint32_t v = 0; v < g.order(); ++v) {
            assignment[idx] = v;
            recurse(idx + 1);
        }
    };
    recurse(0);
    return result;
}

std::uint32_t eval_word(const Word& w, const Presentation& p, const FiniteGroup& g,
                        const std::vector<std::uint32_t>& assignment) {
    std::uint32_t acc = g.identity();
    for (const tg::Letter& l : w.letters()) {
        std::uint32_t img = assignment[*p.generator_index(l.gen)];
        if (l.sign < 0) img = g.inverse(img);
        acc = g.mul(acc, img);
    }
    return acc;
}

Word word_of(std::initializer_list<std::pair<const char*, int>> letters) {
    std::vector<tg::Letter> ls;
    for (const auto& [name, sign] : letters) ls.push_back({GeneratorId{name}, sign});
    return Word::reduce(ls);
}

}  // namespace

TEST_CASE("free product is the disjoint renamed union") {
    const Presentation f1({GeneratorId{"b"}}, {});
    const Presentation f1_prime({GeneratorId{"b"}}, {});
    const ProductDiagram fp = free_product(f1, f1_prime);
    CHECK(fp.presentation.generators().size() == 2);
    CHECK(fp.presentation.relators().empty());

    const Presentation z2({GeneratorId{"x"}}, {word_of({{"x", 1}, {"x", 1}})});
    const Presentation z3({GeneratorId{"y"}},
                          {word_of({{"y", 1}, {"y", 1}, {"y", 1}})});
    const ProductDiagram mixed = free_product(z2, z3);
    CHECK(mixed.presentation.generators().size() == 2);
    CHECK(mixed.presentation.relators().size() == 2);
    CHECK(mixed.presentation.relators()[0].size() == 2);
    CHECK(mixed.presentation.relators()[1].size() == 3);

    // unit: 1 * P is P up to renaming
    const ProductDiagram unit = free_product(Presentation({}, {}), z3);
    CHECK(unit.presentation.generators().size() == 1);
    CHECK(unit.presentation.relators().size() == 1);
}

TEST_CASE("free product injections are valid homs") {
    const Presentation z2({GeneratorId{"x"}}, {word_of({{"x", 1}, {"x", 1}})});
    const ProductDiagram fp = free_product(z2, z2);
    CHECK(fp.left.apply(Word::generator(GeneratorId{"x"})) !=
          fp.right.apply(Word::generator(GeneratorId{"x"})));
}

TEST_CASE("pushout of the unknot legs gives the infinite cyclic group") {
    // f, g: F2 -> <b>, <b'> with a1 -> b, a2 -> b^-1 on both sides
    const std::vector<GeneratorId> source = {GeneratorId{"a1"}, GeneratorId{"a2"}};
    const Presentation left({GeneratorId{"b"}}, {});
    const Presentation right({GeneratorId{"c"}}, {});
    const GroupHom f(source, left,
                     {Word::generator(GeneratorId{"b"}), Word::generator(GeneratorId{"b"}, -1)});
    const GroupHom g(source, right,
                     {Word::generator(GeneratorId{"c"}), Word::generator(GeneratorId{"c"}, -1)});

    const ProductDiagram po = pushout(f, g);
    CHECK(po.presentation.generators().size() == 2);
    CHECK(po.presentation.relators().size() == 2);

    const tg::AbelianInvariants inv = abelianize(po.presentation);
    CHECK(inv.free_rank == 1);
    CHECK(inv.torsion.empty());

    const tg::TietzeResult simplified = tietze_simplify(po.presentation);
    CHECK(simplified.presentation.generators().size() == 1);
    CHECK(simplified.presentation.relators().empty());
}

TEST_CASE("pushout over the empty source is the free product") {
    const Presentation a({GeneratorId{"x"}}, {});
    const Presentation b({GeneratorId{"y"}}, {});
    const GroupHom f({}, a, {});
    const GroupHom g({}, b, {});
    const ProductDiagram po = pushout(f, g);
    CHECK(po.presentation.generators().size() == 2);
    CHECK(po.presentation.relators().empty());
}

TEST_CASE("pushout along identities recovers the free group") {
    const Presentation fn = Presentation::free_group(tg::numbered_generators("a", 3));
    const GroupHom id = GroupHom::identity(fn);
    const ProductDiagram po = pushout(id, id);
    const tg::TietzeResult simplified = tietze_simplify(po.presentation);
    CHECK(simplified.presentation.generators().size() == 3);
    CHECK(simplified.presentation.relators().empty());
}

TEST_CASE("pushout rejects mismatched sources") {
    const Presentation t({GeneratorId{"x"}}, {});
    const GroupHom f({GeneratorId{"a"}}, t, {Word::generator(GeneratorId{"x"})});
    const GroupHom g({GeneratorId{"other"}}, t, {Word::generator(GeneratorId{"x"})});
    CHECK_THROWS_AS(pushout(f, g), Error);
}

namespace {

FiniteGroup klein_four() {
    std::vector<std::vector<std::uint32_t>> t(4, std::vector<std::uint32_t>(4));
    for (std::uint32_t i = 0; i < 4; ++i) {
        for (std::uint32_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
    }
    return FiniteGroup::from_table("Z2xZ2", std::move(t));
}

FiniteGroup quaternion_eight() {
    // elements 1, -1, i, -i, j, -j, k, -k as sign bit + axis
    auto encode = [](int sign, int axis) { return (sign < 0 ? 4 : 0) + axis; };
    std::vector<std::vector<std::uint32_t>> t(8, std::vector<std::uint32_t>(8));
    // axis multiplication: 0=1, 1=i, 2=j, 3=k
    const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            const int sa = a < 4 ? 1 : -1, sb = b < 4 ? 1 : -1;
            const int xa = a % 4, xb = b % 4;
            t[a][b] = static_cast<std::uint32_t>(
                encode(sa * sb * sign_mul[xa][xb], axis_mul[xa][xb]));
        }
    }
    return FiniteGroup::from_table("Q8", std::move(t));
}

}  // namespace

TEST_CASE("pushout satisfies the finite-target universal property") {
    // count_homs(pushout middle, T) must equal the number of pairs of homs
    // out of the two factors agreeing on the shared source.
    std::mt19937_64 rng(11);
    const std::vector<FiniteGroup> targets = {
        FiniteGroup::builtin("Z2"), FiniteGroup::builtin("Z3"), FiniteGroup::builtin("S3"),
        FiniteGroup::builtin("Z4"), FiniteGroup::builtin("D4"), klein_four(),
        quaternion_eight()};

    auto random_presentation = [&rng](const std::string& prefix) {
        const std::size_t n_gens = 1 + rng() % 2;
        std::vector<GeneratorId> gens = tg::numbered_generators(prefix, n_gens);
        std::vector<Word> relators;
        const std::size_t n_rel = rng() % 2;
        for (std::size_t i = 0; i < n_rel; ++i) {
            std::vector<tg::Letter> letters;
            const std::size_t len = 1 + rng() % 4;
            for (std::size_t k = 0; k < len; ++k) {
                letters.push_back({gens[rng() % n_gens], rng() % 2 == 0 ? 1 : -1});
            }
            relators.push_back(Word::reduce(letters));
        }
        return Presentation(gens, relators);
    };

    auto random_word = [&rng](const std::vector<GeneratorId>& gens) {
        std::vector<tg::Letter> letters;
        const std::size_t len = rng() % 3;
        for (std::size_t k = 0; k < len; ++k) {
            letters.push_back({gens[rng() % gens.size()], rng() % 2 == 0 ? 1 : -1});
        }
        return Word::reduce(letters);
    };

    for (int trial = 0; trial < 14; ++trial) {
        const Presentation g1 = random_presentation("u");
        const Presentation g2 = random_presentation("v");
        const std::size_t source_size = 1 + rng() % 2;
        const std::vector<GeneratorId> source = tg::numbered_generators("s", source_size);

        std::vector<Word> f_images, g_images;
        for (std::size_t i = 0; i < source_size; ++i) {
            f_images.push_back(random_word(g1.generators()));
            g_images.push_back(random_word(g2.generators()));
        }
        const GroupHom f(source, g1, f_images);
        const GroupHom g(source, g2, g_images);
        const ProductDiagram po = pushout(f, g);

        const FiniteGroup& t = targets[trial % targets.size()];
        const std::uint64_t direct = count_homs(po.presentation, t);

        std::uint64_t pairs = 0;
        for (const auto& phi1 : all_homs(g1, t)) {
            for (const auto& phi2 : all_homs(g2, t)) {
                bool agree = true;
                for (std::size_t i = 0; i < source_size && agree; ++i) {
                    agree = eval_word(f_images[i], g1, t, phi1) ==
                            eval_word(g_images[i], g2, t, phi2);
                }
                if (agree) ++pairs;
            }
        }
        CHECK(direct == pairs);
    }
}

TEST_CASE("free product abelianization adds ranks and merges torsion") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        auto random_presentation = [&rng](const std::string& prefix) {
            const std::size_t n_gens = 1 + rng() % 3;
            std::vector<GeneratorId> gens = tg::numbered_generators(prefix, n_gens);
            std::vector<Word> relators;
            const std::size_t n_rel = rng() % 3;
            for (std::size_t i = 0; i < n_rel; ++i) {
                std::vector<tg::Letter> letters;
                const std::size_t len = 1 + rng() % 5;
                for (std::size_t k = 0; k < len; ++k) {
                    letters.push_back({gens[rng() % n_gens], rng() % 2 == 0 ? 1 : -1});
                }
                relators.push_back(Word::reduce(letters));
            }
            return Presentation(gens, relators);
        };
        const Presentation p1 = random_presentation("x");
        const Presentation p2 = random_presentation("y");
        const auto inv1 = abelianize(p1);
        const auto inv2 = abelianize(p2);
        const auto combined = abelianize(free_product(p1, p2).presentation);

        CHECK(combined.free_rank == inv1.free_rank + inv2.free_rank);
        // invariant factors of the direct sum: same multiset after
        // renormalization, so compare the total torsion cardinality
        mpz_class product = 1;
        for (const auto& t : inv1.torsion) product *= t;
        for (const auto& t : inv2.torsion) product *= t;
        mpz_class combined_product = 1;
        for (const auto& t : combined.torsion) combined_product *= t;
        CHECK(product == combined_product);
    }
}
