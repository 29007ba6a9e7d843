#include "presentation.hpp"

#include <cctype>
#include <set>

#include "errors.hpp"

namespace tg {

Presentation::Presentation(std::vector<GeneratorId> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
    std::set<GeneratorId> seen;
    for (const GeneratorId& g : generators_) {
        if (g.name().empty()) fail(ErrorCode::BadArgument, "empty generator name");
        if (!seen.insert(g).second) {
            fail(ErrorCode::BadArgument, "duplicate generator '" + g.name() + "'");
        }
    }
    relators_.reserve(relators.size());
    for (Word& w : relators) {
        if (w.empty()) continue;  // trivial relators are dropped on construction
        for (const Letter& l : w.letters()) {
            if (!seen.count(l.gen)) {
                fail(ErrorCode::UnknownGenerator,
                     "relator uses unknown generator '" + l.gen.name() + "'");
            }
        }
        relators_.push_back(std::move(w));
    }
}

Presentation Presentation::free_group(std::vector<GeneratorId> generators) {
    return Presentation(std::move(generators), {});
}

std::optional<std::size_t> Presentation::generator_index(const GeneratorId& g) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == g) return i;
    }
    return std::nullopt;
}

std::string Presentation::text() const {
    std::string out = "<";
    if (generators_.empty()) {
        out += ' ';
    } else {
        out += ' ';
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (i > 0) out += ", ";
            out += generators_[i].name();
        }
        out += ' ';
    }
    out += '|';
    if (relators_.empty()) {
        out += ' ';
    } else {
        out += ' ';
        for (std::size_t i = 0; i < relators_.size(); ++i) {
            if (i > 0) out += ", ";
            out += relators_[i].str();
        }
        out += ' ';
    }
    out += '>';
    return out;
}

namespace {

struct TextCursor {
    const std::string& input;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < input.size() && input[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) {
            fail(ErrorCode::Syntax, std::string("expected '") + c + "' at offset " +
                                        std::to_string(pos) + " in presentation text");
        }
    }

    bool name_char(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    }

    std::optional<std::string> try_name() {
        skip_space();
        if (pos >= input.size()) return std::nullopt;
        char c = input[pos];
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) return std::nullopt;
        std::size_t start = pos;
        while (pos < input.size() && name_char(input[pos])) ++pos;
        return input.substr(start, pos - start);
    }
};

Word parse_word(TextCursor& cur) {
    std::vector<Letter> letters;
    while (true) {
        cur.skip_space();
        if (cur.pos < cur.input.size() && cur.input[cur.pos] == '1' && letters.empty()) {
            // explicit identity word
            ++cur.pos;
            break;
        }
        auto name = cur.try_name();
        if (!name) break;
        int sign = 1;
        if (cur.pos < cur.input.size() && cur.input[cur.pos] == '^') {
            ++cur.pos;
            if (cur.input.compare(cur.pos, 2, "-1") != 0) {
                fail(ErrorCode::Syntax,
                     "expected '-1' after '^' at offset " + std::to_string(cur.pos));
            }
            cur.pos += 2;
            sign = -1;
        }
        letters.push_back({GeneratorId(*name), sign});
    }
    return Word::reduce(letters);
}

}  // namespace

Presentation Presentation::parse_text(const std::string& input) {
    TextCursor cur{input};
    cur.expect('<');
    std::vector<GeneratorId> gens;
    while (true) {
        auto name = cur.try_name();
        if (!name) break;
        gens.emplace_back(*name);
        if (!cur.eat(',')) break;
    }
    cur.expect('|');
    std::vector<Word> relators;
    cur.skip_space();
    if (cur.pos < cur.input.size() && cur.input[cur.pos] != '>') {
        while (true) {
            relators.push_back(parse_word(cur));
            if (!cur.eat(',')) break;
        }
    }
    cur.expect('>');
    cur.skip_space();
    if (cur.pos != input.size()) {
        fail(ErrorCode::Syntax, "trailing input after '>' at offset " + std::to_string(cur.pos));
    }
    return Presentation(std::move(gens), std::move(relators));
}

nlohmann::ordered_json Presentation::word_to_json(const Word& w) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Letter& l : w.letters()) {
        out.push_back(nlohmann::ordered_json::array({l.gen.name(), l.sign}));
    }
    return out;
}

Word Presentation::word_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_array()) fail(ErrorCode::Syntax, "word must be a JSON array");
    std::vector<Letter> letters;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_number_integer()) {
            fail(ErrorCode::Syntax, "word letter must be [name, sign]");
        }
        int sign = entry[1].get<int>();
        if (sign != 1 && sign != -1) {
            fail(ErrorCode::Syntax, "letter exponent must be 1 or -1");
        }
        letters.push_back({GeneratorId(entry[0].get<std::string>()), sign});
    }
    return Word::reduce(letters);
}

nlohmann::ordered_json Presentation::to_json() const {
    nlohmann::ordered_json out;
    out["generators"] = nlohmann::ordered_json::array();
    for (const GeneratorId& g : generators_) out["generators"].push_back(g.name());
    out["relators"] = nlohmann::ordered_json::array();
    for (const Word& w : relators_) out["relators"].push_back(word_to_json(w));
    return out;
}

Presentation Presentation::from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relators")) {
        fail(ErrorCode::Syntax, "presentation JSON needs 'generators' and 'relators'");
    }
    std::vector<GeneratorId> gens;
    for (const auto& g : j.at("generators")) {
        if (!g.is_string()) fail(ErrorCode::Syntax, "generator names must be strings");
        gens.emplace_back(g.get<std::string>());
    }
    std::vector<Word> relators;
    for (const auto& w : j.at("relators")) relators.push_back(word_from_json(w));
    return Presentation(std::move(gens), std::move(relators));
}

}  // namespace tg
