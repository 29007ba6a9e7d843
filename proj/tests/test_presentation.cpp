#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "hom.hpp"
#include "presentation.hpp"

using tg::Error;
using tg::ErrorCode;
using tg::GeneratorId;
using tg::GroupHom;
using tg::Presentation;
using tg::Word;

namespace {

const GeneratorId x{"x"};
const GeneratorId y{"y"};

Word pow(const GeneratorId& g, int n) {
    Word w;
    for (int i = 0; i < std::abs(n); ++i) w = w * Word::generator(g, n > 0 ? 1 : -1);
    return w;
}

}  // namespace

TEST_CASE("construction drops empty relators and validates generators") {
    Presentation p({x, y}, {Word(), pow(x, 2)});
    CHECK(p.relators().size() == 1);

    CHECK_THROWS_AS(Presentation({x}, {Word::generator(y)}), Error);
    CHECK_THROWS_AS(Presentation({x, x}, {}), Error);
}

TEST_CASE("text round trip is exact on canonical output") {
    const Presentation p({x, y}, {pow(x, 2), Word::generator(x) * Word::generator(y, -1)});
    const std::string text = p.text();
    CHECK(text == "< x, y | x x, x y^-1 >");
    const Presentation reparsed = Presentation::parse_text(text);
    CHECK(reparsed == p);
    CHECK(reparsed.text() == text);

    const Presentation empty({}, {});
    CHECK(empty.text() == "< | >");
    CHECK(Presentation::parse_text(empty.text()) == empty);

    const Presentation free_one({x}, {});
    CHECK(free_one.text() == "< x | >");
    CHECK(Presentation::parse_text(free_one.text()) == free_one);
}

TEST_CASE("text parser accepts loose whitespace and rejects junk") {
    const Presentation p = Presentation::parse_text("  <x ,y|x  x , x y^-1>  ");
    CHECK(p.generators().size() == 2);
    CHECK(p.relators().size() == 2);

    CHECK_THROWS_AS(Presentation::parse_text("< x | x^2 >"), Error);
    CHECK_THROWS_AS(Presentation::parse_text("< x  x >"), Error);
    CHECK_THROWS_AS(Presentation::parse_text("< x | > trailing"), Error);
}

TEST_CASE("json round trip") {
    const Presentation p({x, y}, {Word::generator(x) * Word::generator(y, -1)});
    const auto j = p.to_json();
    CHECK(j.dump() == R"({"generators":["x","y"],"relators":[[["x",1],["y",-1]]]})");
    CHECK(Presentation::from_json(j) == p);

    CHECK_THROWS_AS(
        Presentation::from_json(nlohmann::ordered_json::parse(
            R"({"generators":["x"],"relators":[[["x",2]]]})")),
        Error);
}

TEST_CASE("hom apply follows the generator theorem cup example") {
    // a1 -> b, a2 -> b^-1 kills a1 a2
    const GeneratorId a1{"a1"}, a2{"a2"}, b{"b"};
    const Presentation target({b}, {});
    const GroupHom h({a1, a2}, target, {Word::generator(b), Word::generator(b, -1)});
    CHECK(h.apply(Word::generator(a1) * Word::generator(a2)).empty());
    CHECK(h.apply(Word()).empty());
}

TEST_CASE("hom apply reduces conjugated crossing images") {
    // c1 -> b1^-1 b2 b1, c2 -> b1; c2 c1 c2^-1 lands on b2
    const GeneratorId c1{"c1"}, c2{"c2"}, b1{"b1"}, b2{"b2"};
    const Presentation target({b1, b2}, {});
    const GroupHom h({c1, c2}, target,
                     {Word::generator(b1, -1) * Word::generator(b2) * Word::generator(b1),
                      Word::generator(b1)});
    const Word w = Word::generator(c2) * Word::generator(c1) * Word::generator(c2, -1);
    CHECK(h.apply(w) == Word::generator(b2));
}

TEST_CASE("hom apply is a homomorphism on random words") {
    std::mt19937_64 rng(314);
    const GeneratorId s1{"s1"}, s2{"s2"}, s3{"s3"}, t1{"t1"}, t2{"t2"};
    const Presentation target({t1, t2}, {});

    auto random_word = [&rng](const std::vector<GeneratorId>& gens, std::size_t maxlen) {
        std::vector<tg::Letter> letters;
        const std::size_t len = rng() % (maxlen + 1);
        for (std::size_t i = 0; i < len; ++i) {
            letters.push_back({gens[rng() % gens.size()], rng() % 2 == 0 ? 1 : -1});
        }
        return Word::reduce(letters);
    };

    const std::vector<GeneratorId> source = {s1, s2, s3};
    for (int trial = 0; trial < 50; ++trial) {
        const GroupHom h(source, target,
                         {random_word(target.generators(), 4), random_word(target.generators(), 4),
                          random_word(target.generators(), 4)});
        const Word u = random_word(source, 8);
        const Word v = random_word(source, 8);
        CHECK(h.apply(u * v) == h.apply(u) * h.apply(v));
        CHECK(h.apply(u.inverse()) == h.apply(u).inverse());
    }
}

TEST_CASE("hom rejects unknown generators") {
    const GeneratorId s{"s"}, t{"t"}, other{"other"};
    const Presentation target({t}, {});
    const GroupHom h({s}, target, {Word::generator(t)});
    CHECK_THROWS_AS(h.apply(Word::generator(other)), Error);
    CHECK_THROWS_AS(GroupHom({s}, target, {Word::generator(other)}), Error);
}
