#pragma once

#include "cospan.hpp"
#include "tangle.hpp"

namespace tg {

struct EvalOptions {
    bool simplify_every_node = false;  // default simplifies once, at the root
    TietzeOptions tietze = {};
};

struct Evaluation {
    Cospan cospan;  // Tietze-simplified at the root, legs transported
    std::size_t raw_generator_count = 0;
    std::size_t raw_relator_count = 0;
};

// The fixed cospan images of cup, cap, x+ and x-.
Cospan generator_cospan(ExprNode::Kind kind);

// Evaluates the tangle functor: identities to identity cospans, composition
// to pushout, tensor to free product.
Evaluation evaluate(const Expr& e, const EvalOptions& options = {});

// Evaluation without the final simplification pass.
Cospan evaluate_raw(const Expr& e, const EvalOptions& options = {});

// The simplified middle presentation of a closed tangle; both legs come from
// the trivial group and are dropped.
Presentation knot_group(const Expr& e, const EvalOptions& options = {});

}  // namespace tg
