#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tg {

// A generator symbol. Plain string ordering gives the deterministic total
// order every derived listing relies on.
class GeneratorId {
public:
    GeneratorId() = default;
    explicit GeneratorId(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

    auto operator<=>(const GeneratorId&) const = default;

private:
    std::string name_;
};

struct Letter {
    GeneratorId gen;
    int sign = 1;  // +1 or -1

    Letter inverted() const { return {gen, -sign}; }
    auto operator<=>(const Letter&) const = default;
};

// A freely reduced word over some generator set. The empty word is the
// identity. All constructors reduce, so no adjacent inverse pair survives.
class Word {
public:
    Word() = default;

    static Word reduce(std::span<const Letter> letters);
    static Word generator(const GeneratorId& g, int sign = 1);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t size() const noexcept { return letters_.size(); }

    Word inverse() const;
    bool mentions(const GeneratorId& g) const;
    std::size_t occurrences(const GeneratorId& g) const;

    // Replaces every occurrence of `g` (and its inverse) by `replacement`,
    // then reduces.
    Word substituted(const GeneratorId& g, const Word& replacement) const;

    friend Word operator*(const Word& a, const Word& b);

    std::string str() const;  // "x y^-1"; the identity prints as "1"

    auto operator<=>(const Word&) const = default;

private:
    void push(const Letter& l);

    std::vector<Letter> letters_;
};

// p1..pk style name lists used for boundary groups and renamings.
std::vector<GeneratorId> numbered_generators(std::string_view prefix, std::size_t count);

}  // namespace tg
