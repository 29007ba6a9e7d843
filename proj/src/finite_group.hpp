#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "presentation.hpp"

namespace tg {

// A finite group as a validated multiplication table over 0..order-1.
// table[i][j] = i * j.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::string name, std::vector<std::vector<std::uint32_t>> table);
    static FiniteGroup builtin(const std::string& name);  // S3, Z2, Z3, Z4, D4
    static const std::vector<std::string>& builtin_names();

    // {"order": k, "table": [[...]]}
    static FiniteGroup from_json(std::string name, const nlohmann::ordered_json& j);

    const std::string& name() const noexcept { return name_; }
    std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(table_.size()); }
    std::uint32_t identity() const noexcept { return identity_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
    std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }

private:
    FiniteGroup() = default;
    void validate();

    std::string name_;
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverse_;
    std::uint32_t identity_ = 0;
};

// Exact number of homomorphisms from the presented group into the finite
// group, by exhaustive enumeration with per-generator pruning: a relator is
// checked as soon as all of its generators are assigned.
std::uint64_t count_homs(const Presentation& p, const FiniteGroup& target);

}  // namespace tg
