#include "gamma.hpp"

#include "errors.hpp"

namespace tg {

namespace {

Cospan cup_cospan() {
    Presentation middle = Presentation::free_group(numbered_generators("b", 1));
    const GeneratorId b = middle.generators()[0];
    GroupHom left(boundary_generators(0), middle, {});
    GroupHom right(boundary_generators(2), middle,
                   {Word::generator(b), Word::generator(b, -1)});
    return Cospan(0, 2, middle, std::move(left), std::move(right));
}

Cospan cap_cospan() {
    Presentation middle = Presentation::free_group(numbered_generators("b", 1));
    const GeneratorId b = middle.generators()[0];
    GroupHom left(boundary_generators(2), middle,
                  {Word::generator(b), Word::generator(b, -1)});
    GroupHom right(boundary_generators(0), middle, {});
    return Cospan(2, 0, middle, std::move(left), std::move(right));
}

Cospan crossing_cospan(bool positive) {
    Presentation middle = Presentation::free_group(numbered_generators("b", 2));
    const GeneratorId b1 = middle.generators()[0];
    const GeneratorId b2 = middle.generators()[1];
    GroupHom left(boundary_generators(2), middle, {Word::generator(b1), Word::generator(b2)});

    std::vector<Word> right_images;
    if (positive) {
        // c1 -> b1^-1 b2 b1, c2 -> b1
        right_images = {Word::generator(b1, -1) * Word::generator(b2) * Word::generator(b1),
                        Word::generator(b1)};
    } else {
        // c1 -> b2, c2 -> b2 b1 b2^-1
        right_images = {Word::generator(b2),
                        Word::generator(b2) * Word::generator(b1) * Word::generator(b2, -1)};
    }
    GroupHom right(boundary_generators(2), middle, std::move(right_images));
    return Cospan(2, 2, middle, std::move(left), std::move(right));
}

}  // namespace

Cospan generator_cospan(ExprNode::Kind kind) {
    switch (kind) {
        case ExprNode::Kind::Cup:
            return cup_cospan();
        case ExprNode::Kind::Cap:
            return cap_cospan();
        case ExprNode::Kind::Xp:
            return crossing_cospan(true);
        case ExprNode::Kind::Xm:
            return crossing_cospan(false);
        default:
            fail(ErrorCode::BadArgument, "not a generator tangle");
    }
}

namespace {

Cospan eval_node(const Expr& e, const EvalOptions& options) {
    switch (e->kind) {
        case ExprNode::Kind::Id:
            return identity_cospan(e->id_arity);
        case ExprNode::Kind::Compose: {
            Cospan c = compose(eval_node(e->lhs, options), eval_node(e->rhs, options));
            return options.simplify_every_node ? simplified(c, options.tietze) : c;
        }
        case ExprNode::Kind::Tensor: {
            Cospan c = tensor(eval_node(e->lhs, options), eval_node(e->rhs, options));
            return options.simplify_every_node ? simplified(c, options.tietze) : c;
        }
        default:
            return generator_cospan(e->kind);
    }
}

}  // namespace

Cospan evaluate_raw(const Expr& e, const EvalOptions& options) {
    arity(e);  // report mismatches with positions before evaluating
    return eval_node(e, options);
}

Evaluation evaluate(const Expr& e, const EvalOptions& options) {
    Cospan raw = evaluate_raw(e, options);
    Evaluation result{simplified(raw, options.tietze), raw.middle().generators().size(),
                      raw.middle().relators().size()};
    return result;
}

Presentation knot_group(const Expr& e, const EvalOptions& options) {
    const Arity a = arity(e);
    if (a.m != 0 || a.n != 0) {
        fail(ErrorCode::NotALink, "knot groups need a closed tangle; this one has arity (" +
                                      std::to_string(a.m) + ", " + std::to_string(a.n) + ")");
    }
    return evaluate(e, options).cospan.middle();
}

}  // namespace tg
