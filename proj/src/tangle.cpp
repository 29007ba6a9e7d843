#include "tangle.hpp"

#include <utility>

#include "errors.hpp"

namespace tg {

namespace {

Expr atom(ExprNode::Kind kind, SourcePos pos) {
    auto node = std::make_shared<ExprNode>();
    node->kind = kind;
    node->pos = pos;
    return node;
}

}  // namespace

Expr make_id(std::size_t n, SourcePos pos) {
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Id;
    node->id_arity = n;
    node->pos = pos;
    return node;
}

Expr make_cup(SourcePos pos) { return atom(ExprNode::Kind::Cup, pos); }
Expr make_cap(SourcePos pos) { return atom(ExprNode::Kind::Cap, pos); }
Expr make_xp(SourcePos pos) { return atom(ExprNode::Kind::Xp, pos); }
Expr make_xm(SourcePos pos) { return atom(ExprNode::Kind::Xm, pos); }

Expr make_compose(Expr lhs, Expr rhs, SourcePos pos) {
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Compose;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    node->pos = pos;
    return node;
}

Expr make_tensor(Expr lhs, Expr rhs, SourcePos pos) {
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Tensor;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    node->pos = pos;
    return node;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::Kind::Id:
            return a->id_arity == b->id_arity;
        case ExprNode::Kind::Compose:
        case ExprNode::Kind::Tensor:
            return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
        default:
            return true;
    }
}

Arity arity(const Expr& e) {
    switch (e->kind) {
        case ExprNode::Kind::Id:
            return {e->id_arity, e->id_arity};
        case ExprNode::Kind::Cup:
            return {0, 2};
        case ExprNode::Kind::Cap:
            return {2, 0};
        case ExprNode::Kind::Xp:
        case ExprNode::Kind::Xm:
            return {2, 2};
        case ExprNode::Kind::Compose: {
            const Arity a = arity(e->lhs);
            const Arity b = arity(e->rhs);
            if (a.n != b.m) {
                std::string where = e->pos.line > 0
                                        ? "line " + std::to_string(e->pos.line) + ", column " +
                                              std::to_string(e->pos.col)
                                        : "a synthetic node";
                fail(ErrorCode::Arity,
                     "arity mismatch in composition at " + where + ": left side ends with " +
                         std::to_string(a.n) + " strands, right side starts with " +
                         std::to_string(b.m));
            }
            return {a.m, b.n};
        }
        case ExprNode::Kind::Tensor: {
            const Arity a = arity(e->lhs);
            const Arity b = arity(e->rhs);
            return {a.m + b.m, a.n + b.n};
        }
    }
    fail(ErrorCode::BadArgument, "corrupt expression node");
}

namespace {

Connectivity atom_connectivity(const ExprNode& node) {
    Connectivity c;
    switch (node.kind) {
        case ExprNode::Kind::Id:
            c.m = c.n = node.id_arity;
            c.pairing.resize(2 * node.id_arity);
            for (std::size_t i = 0; i < node.id_arity; ++i) {
                c.pairing[i] = node.id_arity + i;
                c.pairing[node.id_arity + i] = i;
            }
            return c;
        case ExprNode::Kind::Cup:
            c.m = 0;
            c.n = 2;
            c.pairing = {1, 0};
            return c;
        case ExprNode::Kind::Cap:
            c.m = 2;
            c.n = 0;
            c.pairing = {1, 0};
            return c;
        case ExprNode::Kind::Xp:
        case ExprNode::Kind::Xm:
            // crossings transpose the strands; over/under is invisible here
            c.m = 2;
            c.n = 2;
            c.pairing = {3, 2, 1, 0};
            return c;
        default:
            fail(ErrorCode::BadArgument, "not an atom");
    }
}

Connectivity compose_connectivity(const Connectivity& a, const Connectivity& b) {
    Connectivity out;
    out.m = a.m;
    out.n = b.n;
    out.loops = a.loops + b.loops;
    out.pairing.assign(a.m + b.n, 0);

    const std::size_t interface = a.n;  // == b.m
    std::vector<bool> visited(interface, false);

    // Walks alternate between the two halves. Positions inside `a` are its
    // port indices; likewise for `b`. A step follows the half's own pairing,
    // then hops across the interface if it landed there.
    auto resolve = [&](bool in_a, std::size_t port) {
        while (true) {
            if (in_a) {
                std::size_t q = a.pairing[port];
                if (q < a.m) return std::pair<bool, std::size_t>{true, q};  // result lower q
                visited[q - a.m] = true;
                in_a = false;
                port = q - a.m;  // enter b at lower port
            } else {
                std::size_t q = b.pairing[port];
                if (q >= b.m) return std::pair<bool, std::size_t>{false, q - b.m};  // upper
                visited[q] = true;
                in_a = true;
                port = a.m + q;  // enter a at upper port
            }
        }
    };

    auto result_port = [&](bool lower_of_a, std::size_t p) {
        return lower_of_a ? p : a.m + p;
    };

    for (std::size_t p = 0; p < a.m; ++p) {
        auto [is_lower, q] = resolve(true, p);
        out.pairing[p] = result_port(is_lower, q);
    }
    for (std::size_t p = 0; p < b.n; ++p) {
        auto [is_lower, q] = resolve(false, b.m + p);
        out.pairing[a.m + p] = result_port(is_lower, q);
    }

    // Any interface strand not reached from a boundary lies on a closed
    // cycle created by this splice.
    for (std::size_t k = 0; k < interface; ++k) {
        if (visited[k]) continue;
        ++out.loops;
        bool in_a = false;
        std::size_t port = k;  // start inside b at lower k
        visited[k] = true;
        while (true) {
            if (in_a) {
                std::size_t q = a.pairing[port];
                std::size_t cross = q - a.m;  // must be an upper port of a
                if (cross == k) break;
                visited[cross] = true;
                in_a = false;
                port = cross;
            } else {
                std::size_t q = b.pairing[port];
                visited[q] = true;  // q is a lower port of b
                if (q == k) break;
                in_a = true;
                port = a.m + q;
            }
        }
    }
    return out;
}

Connectivity tensor_connectivity(const Connectivity& a, const Connectivity& b) {
    Connectivity out;
    out.m = a.m + b.m;
    out.n = a.n + b.n;
    out.loops = a.loops + b.loops;
    out.pairing.assign(out.m + out.n, 0);

    auto a_to_out = [&](std::size_t p) { return p < a.m ? p : out.m + (p - a.m); };
    auto b_to_out = [&](std::size_t p) {
        return p < b.m ? a.m + p : out.m + a.n + (p - b.m);
    };

    for (std::size_t p = 0; p < a.m + a.n; ++p) {
        out.pairing[a_to_out(p)] = a_to_out(a.pairing[p]);
    }
    for (std::size_t p = 0; p < b.m + b.n; ++p) {
        out.pairing[b_to_out(p)] = b_to_out(b.pairing[p]);
    }
    return out;
}

}  // namespace

Connectivity connectivity(const Expr& e) {
    arity(e);  // surface arity mismatches before walking strands
    switch (e->kind) {
        case ExprNode::Kind::Compose:
            return compose_connectivity(connectivity(e->lhs), connectivity(e->rhs));
        case ExprNode::Kind::Tensor:
            return tensor_connectivity(connectivity(e->lhs), connectivity(e->rhs));
        default:
            return atom_connectivity(*e);
    }
}

namespace {

void print_into(const Expr& e, std::string& out, int level);  // 0=expr, 1=term, 2=factor

void print_atom(const Expr& e, std::string& out) {
    switch (e->kind) {
        case ExprNode::Kind::Id:
            out += "id(" + std::to_string(e->id_arity) + ")";
            break;
        case ExprNode::Kind::Cup:
            out += "cup";
            break;
        case ExprNode::Kind::Cap:
            out += "cap";
            break;
        case ExprNode::Kind::Xp:
            out += "x+";
            break;
        case ExprNode::Kind::Xm:
            out += "x-";
            break;
        default:
            break;
    }
}

void print_into(const Expr& e, std::string& out, int level) {
    switch (e->kind) {
        case ExprNode::Kind::Compose:
            if (level > 0) {
                out += '(';
                print_into(e, out, 0);
                out += ')';
                return;
            }
            print_into(e->lhs, out, 0);
            out += " ; ";
            print_into(e->rhs, out, 1);
            return;
        case ExprNode::Kind::Tensor:
            if (level > 1) {
                out += '(';
                print_into(e, out, 0);
                out += ')';
                return;
            }
            print_into(e->lhs, out, 1);
            out += " * ";
            print_into(e->rhs, out, 2);
            return;
        default:
            print_atom(e, out);
            return;
    }
}

}  // namespace

std::string print(const Expr& e) {
    std::string out;
    print_into(e, out, 0);
    return out;
}

namespace {

// Braid-generator slice sigma_i^{+/-} on `strands` strands (1-based i).
Expr braid_slice(std::size_t strands, std::size_t i, bool positive) {
    Expr x = positive ? make_xp() : make_xm();
    Expr slice = x;
    if (i > 1) slice = make_tensor(make_id(i - 1), slice);
    if (i + 1 < strands) slice = make_tensor(slice, make_id(strands - i - 1));
    return slice;
}

// Trace closure of a braid word: nested cups, the braid beside the closure
// arcs, then nested caps.
Expr trace_closure(std::size_t strands, const std::vector<std::pair<std::size_t, bool>>& word) {
    Expr e = make_cup();
    for (std::size_t k = 1; k < strands; ++k) {
        e = make_compose(e, make_tensor(make_tensor(make_id(k), make_cup()), make_id(k)));
    }
    for (const auto& [i, positive] : word) {
        e = make_compose(e, make_tensor(make_id(strands), braid_slice(strands, i, positive)));
    }
    for (std::size_t k = strands - 1; k >= 1; --k) {
        e = make_compose(e, make_tensor(make_tensor(make_id(k), make_cap()), make_id(k)));
    }
    return make_compose(e, make_cap());
}

}  // namespace

const std::vector<std::string>& builtin_tangle_names() {
    static const std::vector<std::string> names = {"unknot", "unlink2", "hopf", "trefoil",
                                                   "figure8"};
    return names;
}

Expr builtin(const std::string& name) {
    if (name == "unknot") return make_compose(make_cup(), make_cap());
    if (name == "unlink2") {
        return make_tensor(make_compose(make_cup(), make_cap()),
                           make_compose(make_cup(), make_cap()));
    }
    if (name == "hopf") return trace_closure(2, {{1, true}, {1, true}});
    if (name == "trefoil") return trace_closure(2, {{1, true}, {1, true}, {1, true}});
    if (name == "figure8") {
        return trace_closure(3, {{1, true}, {2, false}, {1, true}, {2, false}});
    }
    fail(ErrorCode::UnknownBuiltin, "unknown builtin tangle '" + name + "'");
}

}  // namespace tg
