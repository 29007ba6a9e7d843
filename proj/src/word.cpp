#include "word.hpp"

namespace tg {

void Word::push(const Letter& l) {
    if (!letters_.empty() && letters_.back() == l.inverted()) {
        letters_.pop_back();
    } else {
        letters_.push_back(l);
    }
}

Word Word::reduce(std::span<const Letter> letters) {
    Word w;
    w.letters_.reserve(letters.size());
    for (const Letter& l : letters) w.push(l);
    return w;
}

Word Word::generator(const GeneratorId& g, int sign) {
    Word w;
    w.letters_.push_back({g, sign});
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        w.letters_.push_back(it->inverted());
    }
    return w;
}

bool Word::mentions(const GeneratorId& g) const {
    for (const Letter& l : letters_) {
        if (l.gen == g) return true;
    }
    return false;
}

std::size_t Word::occurrences(const GeneratorId& g) const {
    std::size_t count = 0;
    for (const Letter& l : letters_) {
        if (l.gen == g) ++count;
    }
    return count;
}

Word Word::substituted(const GeneratorId& g, const Word& replacement) const {
    Word out;
    const Word inv = replacement.inverse();
    for (const Letter& l : letters_) {
        if (l.gen == g) {
            for (const Letter& r : (l.sign > 0 ? replacement : inv).letters()) out.push(r);
        } else {
            out.push(l);
        }
    }
    return out;
}

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    for (const Letter& l : b.letters_) out.push(l);
    return out;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += ' ';
        out += letters_[i].gen.name();
        if (letters_[i].sign < 0) out += "^-1";
    }
    return out;
}

std::vector<GeneratorId> numbered_generators(std::string_view prefix, std::size_t count) {
    std::vector<GeneratorId> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        out.emplace_back(std::string(prefix) + std::to_string(i));
    }
    return out;
}

}  // namespace tg
