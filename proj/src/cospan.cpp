#include "cospan.hpp"

#include "errors.hpp"

namespace tg {

std::vector<GeneratorId> boundary_generators(std::size_t arity) {
    return numbered_generators("p", arity);
}

Cospan::Cospan(std::size_t m, std::size_t n, Presentation middle, GroupHom left, GroupHom right)
    : m_(m), n_(n), middle_(std::move(middle)), left_(std::move(left)), right_(std::move(right)) {
    if (left_.source_generators() != boundary_generators(m_)) {
        fail(ErrorCode::BadArgument, "left leg must come from the canonical free group F_m");
    }
    if (right_.source_generators() != boundary_generators(n_)) {
        fail(ErrorCode::BadArgument, "right leg must come from the canonical free group F_n");
    }
    if (left_.target() != middle_ || right_.target() != middle_) {
        fail(ErrorCode::BadArgument, "both legs must target the middle presentation");
    }
}

nlohmann::ordered_json Cospan::to_json() const {
    nlohmann::ordered_json out;
    out["m"] = m_;
    out["n"] = n_;
    out["middle"] = middle_.to_json();
    out["left"] = nlohmann::ordered_json::array();
    for (const Word& w : left_.images()) out["left"].push_back(Presentation::word_to_json(w));
    out["right"] = nlohmann::ordered_json::array();
    for (const Word& w : right_.images()) out["right"].push_back(Presentation::word_to_json(w));
    return out;
}

Cospan identity_cospan(std::size_t n) {
    Presentation middle = Presentation::free_group(boundary_generators(n));
    GroupHom leg = GroupHom::identity(middle);
    return Cospan(n, n, middle, leg, leg);
}

Cospan compose(const Cospan& c1, const Cospan& c2) {
    if (c1.n() != c2.m()) {
        fail(ErrorCode::Arity, "cannot compose: left factor has " + std::to_string(c1.n()) +
                                   " upper endpoints, right factor has " +
                                   std::to_string(c2.m()) + " lower endpoints");
    }
    ProductDiagram po = pushout(c1.right_leg(), c2.left_leg());
    GroupHom left = c1.left_leg().then(po.left);
    GroupHom right = c2.right_leg().then(po.right);
    return Cospan(c1.m(), c2.n(), po.presentation, std::move(left), std::move(right));
}

Cospan tensor(const Cospan& c1, const Cospan& c2) {
    ProductDiagram fp = free_product(c1.middle(), c2.middle());
    const std::size_t m = c1.m() + c2.m();
    const std::size_t n = c1.n() + c2.n();

    auto juxtapose = [&fp](const GroupHom& a, const GroupHom& b, std::size_t arity) {
        std::vector<Word> images;
        images.reserve(arity);
        for (const Word& w : a.images()) images.push_back(fp.left.apply(w));
        for (const Word& w : b.images()) images.push_back(fp.right.apply(w));
        return GroupHom(boundary_generators(arity), fp.presentation, std::move(images));
    };

    return Cospan(m, n, fp.presentation, juxtapose(c1.left_leg(), c2.left_leg(), m),
                  juxtapose(c1.right_leg(), c2.right_leg(), n));
}

Cospan lambda_embed(const GroupHom& f, const Presentation& source) {
    if (f.source_generators() != source.generators()) {
        fail(ErrorCode::SourceMismatch, "hom source does not match the source presentation");
    }
    if (!source.is_free()) {
        fail(ErrorCode::BadArgument, "lambda embedding here requires a free source");
    }
    const std::size_t m = source.generators().size();
    const std::size_t n = f.target().generators().size();

    GroupHom left(boundary_generators(m), f.target(), f.images());
    std::vector<Word> identity_images;
    identity_images.reserve(n);
    for (const GeneratorId& g : f.target().generators()) {
        identity_images.push_back(Word::generator(g));
    }
    GroupHom right(boundary_generators(n), f.target(), std::move(identity_images));
    return Cospan(m, n, f.target(), std::move(left), std::move(right));
}

Cospan simplified(const Cospan& c, const TietzeOptions& options) {
    TietzeResult res = tietze_simplify(c.middle(), {c.left_leg(), c.right_leg()}, options);
    return Cospan(c.m(), c.n(), res.presentation, res.transported[0], res.transported[1]);
}

}  // namespace tg
