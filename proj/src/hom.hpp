#pragma once

#include <map>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace tg {

// A homomorphism given by images of source generators in a target
// presentation. Sources in this artifact are always free groups, so no
// relator-preservation obligation is carried here; the source list still
// exists to catch wiring mistakes.
class GroupHom {
public:
    GroupHom(std::vector<GeneratorId> source_generators, Presentation target,
             std::vector<Word> images);

    static GroupHom identity(const Presentation& p);

    const std::vector<GeneratorId>& source_generators() const noexcept { return source_; }
    const Presentation& target() const noexcept { return target_; }
    const std::vector<Word>& images() const noexcept { return images_; }

    const Word& image_of(const GeneratorId& g) const;

    // hom_apply: maps a word over the source generators to its freely
    // reduced image.
    Word apply(const Word& w) const;

    // Composition in diagram order: first this map, then `next`.
    GroupHom then(const GroupHom& next) const;

    // Same images, new target presentation (re-validated).
    GroupHom with_target(Presentation new_target) const;

    bool operator==(const GroupHom& other) const {
        return source_ == other.source_ && target_ == other.target_ && images_ == other.images_;
    }

private:
    std::vector<GeneratorId> source_;
    Presentation target_;
    std::vector<Word> images_;
    std::map<GeneratorId, std::size_t> index_;
};

struct ProductDiagram {
    Presentation presentation;
    GroupHom left;
    GroupHom right;
};

// Coproduct of presented groups: disjoint (renamed) union of generators and
// relators, with the two canonical injections.
ProductDiagram free_product(const Presentation& a, const Presentation& b);

// Pushout of f, g sharing a free source: the free product of the targets
// plus one relator f(x) g(x)^-1 per shared source generator. The returned
// homs are the injection-then-quotient legs.
ProductDiagram pushout(const GroupHom& f, const GroupHom& g);

}  // namespace tg
