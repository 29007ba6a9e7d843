#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace tg {

struct SourcePos {
    int line = 0;  // 1-based; 0 for synthetic nodes
    int col = 0;
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

// Tangle expression tree over the generators cup, cap, x+, x- and id(n),
// closed under composition (`;`, diagrammatic order) and tensor (`*`).
struct ExprNode {
    enum class Kind { Id, Cup, Cap, Xp, Xm, Compose, Tensor };

    Kind kind;
    std::size_t id_arity = 0;  // Kind::Id only
    Expr lhs, rhs;             // Compose / Tensor only
    SourcePos pos;
};

Expr make_id(std::size_t n, SourcePos pos = {});
Expr make_cup(SourcePos pos = {});
Expr make_cap(SourcePos pos = {});
Expr make_xp(SourcePos pos = {});
Expr make_xm(SourcePos pos = {});
Expr make_compose(Expr lhs, Expr rhs, SourcePos pos = {});
Expr make_tensor(Expr lhs, Expr rhs, SourcePos pos = {});

bool structurally_equal(const Expr& a, const Expr& b);

struct Arity {
    std::size_t m = 0;  // lower endpoints
    std::size_t n = 0;  // upper endpoints
    bool operator==(const Arity&) const = default;
};

// Throws Arity errors that point at the offending compose node.
Arity arity(const Expr& e);

// Boundary pairing and closed-loop count. Ports 0..m-1 are the lower
// endpoints, m..m+n-1 the upper ones; `pairing` is a fixed-point-free
// involution.
struct Connectivity {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::size_t> pairing;
    std::size_t loops = 0;
};

Connectivity connectivity(const Expr& e);

// Canonical DSL form; parse(print(e)) reproduces the tree exactly.
std::string print(const Expr& e);

// expr := term { ";" term } ; term := factor { "*" factor } ;
// factor := "id" "(" nat ")" | "cup" | "cap" | "x+" | "x-" | "(" expr ")".
// `#` starts a line comment. Throws Syntax errors with line and column.
Expr parse(const std::string& text);

// unknot, unlink2, hopf, trefoil, figure8.
Expr builtin(const std::string& name);
const std::vector<std::string>& builtin_tangle_names();

}  // namespace tg
