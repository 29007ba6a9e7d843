#include "finite_group.hpp"

#include <algorithm>
#include <array>

#include "errors.hpp"

namespace tg {

void FiniteGroup::validate() {
    const std::size_t n = table_.size();
    if (n == 0) fail(ErrorCode::InvalidGroupTable, "group table must be nonempty");
    for (const auto& row : table_) {
        if (row.size() != n) fail(ErrorCode::InvalidGroupTable, "group table must be square");
        for (std::uint32_t v : row) {
            if (v >= n) fail(ErrorCode::InvalidGroupTable, "table entry out of range");
        }
    }
    // identity
    std::size_t id = n;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            ok = table_[e][x] == x && table_[x][e] == x;
        }
        if (ok) {
            id = e;
            break;
        }
    }
    if (id == n) fail(ErrorCode::InvalidGroupTable, "no identity element");
    identity_ = static_cast<std::uint32_t>(id);
    // inverses
    inverse_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) {
            if (table_[x][y] == id && table_[y][x] == id) {
                inverse_[x] = static_cast<std::uint32_t>(y);
                found = true;
            }
        }
        if (!found) {
            fail(ErrorCode::InvalidGroupTable,
                 "element " + std::to_string(x) + " has no inverse");
        }
    }
    // associativity
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                    fail(ErrorCode::InvalidGroupTable, "multiplication is not associative");
                }
            }
        }
    }
}

FiniteGroup FiniteGroup::from_table(std::string name,
                                    std::vector<std::vector<std::uint32_t>> table) {
    FiniteGroup g;
    g.name_ = std::move(name);
    g.table_ = std::move(table);
    g.validate();
    return g;
}

namespace {

std::vector<std::vector<std::uint32_t>> cyclic_table(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return t;
}

// S3 as permutations of {0,1,2} in lexicographic order; (i*j)(x) = i(j(x)).
std::vector<std::vector<std::uint32_t>> s3_table() {
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    auto index_of = [&perms](const std::array<int, 3>& p) -> std::uint32_t {
        for (std::uint32_t k = 0; k < perms.size(); ++k) {
            if (perms[k] == p) return k;
        }
        return 0;
    };
    std::vector<std::vector<std::uint32_t>> t(6, std::vector<std::uint32_t>(6));
    for (std::uint32_t i = 0; i < 6; ++i) {
        for (std::uint32_t j = 0; j < 6; ++j) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(comp);
        }
    }
    return t;
}

// D4 of order 8: element a + 4b stands for r^a s^b with r^4 = s^2 = 1,
// s r = r^-1 s.
std::vector<std::vector<std::uint32_t>> d4_table() {
    std::vector<std::vector<std::uint32_t>> t(8, std::vector<std::uint32_t>(8));
    for (std::uint32_t i = 0; i < 8; ++i) {
        for (std::uint32_t j = 0; j < 8; ++j) {
            const std::uint32_t a = i % 4, b = i / 4;
            const std::uint32_t c = j % 4, d = j / 4;
            const std::uint32_t rot = b ? (a + 4 - c) % 4 : (a + c) % 4;
            t[i][j] = rot + 4 * ((b + d) % 2);
        }
    }
    return t;
}

}  // namespace

const std::vector<std::string>& FiniteGroup::builtin_names() {
    static const std::vector<std::string> names = {"S3", "Z2", "Z3", "Z4", "D4"};
    return names;
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
    if (name == "S3") return from_table("S3", s3_table());
    if (name == "Z2") return from_table("Z2", cyclic_table(2));
    if (name == "Z3") return from_table("Z3", cyclic_table(3));
    if (name == "Z4") return from_table("Z4", cyclic_table(4));
    if (name == "D4") return from_table("D4", d4_table());
    fail(ErrorCode::UnknownBuiltin, "unknown builtin group '" + name + "'");
}

FiniteGroup FiniteGroup::from_json(std::string name, const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
        fail(ErrorCode::InvalidGroupTable, "group JSON needs 'order' and 'table'");
    }
    if (!j.at("order").is_number_unsigned() && !j.at("order").is_number_integer()) {
        fail(ErrorCode::InvalidGroupTable, "'order' must be an integer");
    }
    const auto order = j.at("order").get<std::int64_t>();
    const auto& table = j.at("table");
    if (order <= 0 || !table.is_array() || table.size() != static_cast<std::size_t>(order)) {
        fail(ErrorCode::InvalidGroupTable, "'table' must be an order x order array");
    }
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& row : table) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(order)) {
            fail(ErrorCode::InvalidGroupTable, "'table' must be an order x order array");
        }
        std::vector<std::uint32_t> r;
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
                v.get<std::int64_t>() >= order) {
                fail(ErrorCode::InvalidGroupTable, "table entry out of range");
            }
            r.push_back(v.get<std::uint32_t>());
        }
        rows.push_back(std::move(r));
    }
    return from_table(std::move(name), std::move(rows));
}

namespace {

struct HomSearch {
    const FiniteGroup& target;
    const Presentation& p;
    // relators bucketed by the highest generator index they mention
    std::vector<std::vector<const Word*>> checkable_at;
    std::vector<std::uint32_t> assignment;

    std::uint32_t eval(const Word& w) const {
        std::uint32_t acc = target.identity();
        for (const Letter& l : w.letters()) {
            std::uint32_t img = assignment[*p.generator_index(l.gen)];
            if (l.sign < 0) img = target.inverse(img);
            acc = target.mul(acc, img);
        }
        return acc;
    }

    std::uint64_t run(std::size_t next) {
        if (next == p.generators().size()) return 1;
        std::uint64_t total = 0;
        for (std::uint32_t value = 0; value < target.order(); ++value) {
            assignment[next] = value;
            bool ok = true;
            for (const Word* r : checkable_at[next]) {
                if (eval(*r) != target.identity()) {
                    ok = false;
                    break;
                }
            }
            if (ok) total += run(next + 1);
        }
        return total;
    }
};

}  // namespace

std::uint64_t count_homs(const Presentation& p, const FiniteGroup& target) {
    // Generators mentioned by no relator are unconstrained: they contribute
    // a plain factor of order^k, so only the constrained ones are enumerated.
    std::vector<GeneratorId> constrained;
    for (const GeneratorId& g : p.generators()) {
        bool used = false;
        for (const Word& r : p.relators()) {
            if (r.mentions(g)) {
                used = true;
                break;
            }
        }
        if (used) constrained.push_back(g);
    }
    const std::size_t unconstrained = p.generators().size() - constrained.size();

    std::uint64_t factor = 1;
    for (std::size_t i = 0; i < unconstrained; ++i) {
        if (factor > UINT64_MAX / target.order()) {
            fail(ErrorCode::BadArgument, "hom count exceeds 64 bits");
        }
        factor *= target.order();
    }

    Presentation core(constrained, p.relators());
    HomSearch search{target, core, {}, {}};
    search.checkable_at.resize(core.generators().size());
    search.assignment.assign(core.generators().size(), 0);

    for (const Word& r : core.relators()) {
        std::size_t highest = 0;  // relators are nonempty by construction
        for (const Letter& l : r.letters()) {
            highest = std::max(highest, *core.generator_index(l.gen));
        }
        search.checkable_at[highest].push_back(&r);
    }
    const std::uint64_t base = search.run(0);
    if (base != 0 && factor > UINT64_MAX / base) {
        fail(ErrorCode::BadArgument, "hom count exceeds 64 bits");
    }
    return base * factor;
}

}  // namespace tg
