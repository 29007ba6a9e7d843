#include "hom.hpp"

#include <set>

#include "errors.hpp"

namespace tg {

GroupHom::GroupHom(std::vector<GeneratorId> source_generators, Presentation target,
                   std::vector<Word> images)
    : source_(std::move(source_generators)),
      target_(std::move(target)),
      images_(std::move(images)) {
    if (source_.size() != images_.size()) {
        fail(ErrorCode::BadArgument, "hom needs one image per source generator");
    }
    for (std::size_t i = 0; i < source_.size(); ++i) {
        if (!index_.emplace(source_[i], i).second) {
            fail(ErrorCode::BadArgument, "duplicate source generator '" + source_[i].name() + "'");
        }
        for (const Letter& l : images_[i].letters()) {
            if (!target_.has_generator(l.gen)) {
                fail(ErrorCode::UnknownGenerator,
                     "image of '" + source_[i].name() + "' uses unknown generator '" +
                         l.gen.name() + "'");
            }
        }
    }
}

GroupHom GroupHom::identity(const Presentation& p) {
    std::vector<Word> images;
    images.reserve(p.generators().size());
    for (const GeneratorId& g : p.generators()) images.push_back(Word::generator(g));
    return GroupHom(p.generators(), p, std::move(images));
}

const Word& GroupHom::image_of(const GeneratorId& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) {
        fail(ErrorCode::UnknownGenerator, "'" + g.name() + "' is not a source generator");
    }
    return images_[it->second];
}

Word GroupHom::apply(const Word& w) const {
    std::vector<Letter> out;
    for (const Letter& l : w.letters()) {
        const Word& image = image_of(l.gen);
        if (l.sign > 0) {
            out.insert(out.end(), image.letters().begin(), image.letters().end());
        } else {
            const Word inv = image.inverse();
            out.insert(out.end(), inv.letters().begin(), inv.letters().end());
        }
    }
    return Word::reduce(out);
}

GroupHom GroupHom::then(const GroupHom& next) const {
    if (target_.generators() != next.source_generators()) {
        fail(ErrorCode::SourceMismatch,
             "composition requires the first target to match the second source");
    }
    std::vector<Word> images;
    images.reserve(images_.size());
    for (const Word& w : images_) images.push_back(next.apply(w));
    return GroupHom(source_, next.target(), std::move(images));
}

GroupHom GroupHom::with_target(Presentation new_target) const {
    return GroupHom(source_, std::move(new_target), images_);
}

ProductDiagram free_product(const Presentation& a, const Presentation& b) {
    const std::size_t na = a.generators().size();
    const std::size_t nb = b.generators().size();
    std::vector<GeneratorId> fresh = numbered_generators("g", na + nb);

    auto renamed = [&fresh](const Presentation& p, std::size_t offset) {
        std::map<GeneratorId, GeneratorId> names;
        for (std::size_t i = 0; i < p.generators().size(); ++i) {
            names.emplace(p.generators()[i], fresh[offset + i]);
        }
        std::vector<Word> relators;
        relators.reserve(p.relators().size());
        for (const Word& r : p.relators()) {
            std::vector<Letter> letters;
            letters.reserve(r.size());
            for (const Letter& l : r.letters()) letters.push_back({names.at(l.gen), l.sign});
            relators.push_back(Word::reduce(letters));
        }
        return relators;
    };

    std::vector<Word> relators = renamed(a, 0);
    std::vector<Word> rel_b = renamed(b, na);
    relators.insert(relators.end(), rel_b.begin(), rel_b.end());

    Presentation product(fresh, std::move(relators));

    auto injection = [&product, &fresh](const Presentation& p, std::size_t offset) {
        std::vector<Word> images;
        images.reserve(p.generators().size());
        for (std::size_t i = 0; i < p.generators().size(); ++i) {
            images.push_back(Word::generator(fresh[offset + i]));
        }
        return GroupHom(p.generators(), product, std::move(images));
    };

    return {product, injection(a, 0), injection(b, na)};
}

ProductDiagram pushout(const GroupHom& f, const GroupHom& g) {
    if (f.source_generators() != g.source_generators()) {
        fail(ErrorCode::SourceMismatch, "pushout legs must share the same source generators");
    }
    ProductDiagram fp = free_product(f.target(), g.target());

    std::vector<Word> relators = fp.presentation.relators();
    for (const GeneratorId& x : f.source_generators()) {
        Word r = fp.left.apply(f.image_of(x)) * fp.right.apply(g.image_of(x)).inverse();
        relators.push_back(std::move(r));  // empty ones are dropped by the constructor
    }
    Presentation amalgam(fp.presentation.generators(), std::move(relators));

    return {amalgam, fp.left.with_target(amalgam), fp.right.with_target(amalgam)};
}

}  // namespace tg
