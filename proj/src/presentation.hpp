#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "word.hpp"

namespace tg {

// A finite group presentation: an ordered generator list and a list of
// freely reduced, nonempty relator words over those generators.
class Presentation {
public:
    Presentation() = default;
    Presentation(std::vector<GeneratorId> generators, std::vector<Word> relators);

    static Presentation free_group(std::vector<GeneratorId> generators);

    const std::vector<GeneratorId>& generators() const noexcept { return generators_; }
    const std::vector<Word>& relators() const noexcept { return relators_; }
    bool is_free() const noexcept { return relators_.empty(); }

    std::optional<std::size_t> generator_index(const GeneratorId& g) const;
    bool has_generator(const GeneratorId& g) const { return generator_index(g).has_value(); }

    // Text form "< g1, g2 | w1, w2 >"; canonical output round-trips exactly.
    std::string text() const;
    static Presentation parse_text(const std::string& input);

    nlohmann::ordered_json to_json() const;
    static Presentation from_json(const nlohmann::ordered_json& j);

    static nlohmann::ordered_json word_to_json(const Word& w);
    static Word word_from_json(const nlohmann::ordered_json& j);

    bool operator==(const Presentation&) const = default;

private:
    std::vector<GeneratorId> generators_;
    std::vector<Word> relators_;
};

}  // namespace tg
