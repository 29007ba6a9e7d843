#pragma once

#include <cstddef>

#include "hom.hpp"
#include "json.hpp"
#include "presentation.hpp"
#include "tietze.hpp"

namespace tg {

// Canonical boundary generators p1..pk. Fixing these once makes cospans of
// equal arity always composable and comparable.
std::vector<GeneratorId> boundary_generators(std::size_t arity);

// A morphism m -> n: a middle presentation with two legs from the canonical
// free groups F_m and F_n.
class Cospan {
public:
    Cospan(std::size_t m, std::size_t n, Presentation middle, GroupHom left, GroupHom right);

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    const Presentation& middle() const noexcept { return middle_; }
    const GroupHom& left_leg() const noexcept { return left_; }
    const GroupHom& right_leg() const noexcept { return right_; }

    nlohmann::ordered_json to_json() const;

    bool operator==(const Cospan& other) const {
        return m_ == other.m_ && n_ == other.n_ && middle_ == other.middle_ &&
               left_ == other.left_ && right_ == other.right_;
    }

private:
    std::size_t m_;
    std::size_t n_;
    Presentation middle_;
    GroupHom left_;
    GroupHom right_;
};

Cospan identity_cospan(std::size_t n);

// Diagrammatic order: compose(c1, c2) is "c1 then c2". The middle is the
// pushout of c1's right leg against c2's left leg.
Cospan compose(const Cospan& c1, const Cospan& c2);

// Arities add; the middle is the free product of the middles.
Cospan tensor(const Cospan& c1, const Cospan& c2);

// The lambda embedding of a hom with free source: middle = f's target, left
// leg = f, right leg = identity on the target's generators.
Cospan lambda_embed(const GroupHom& f, const Presentation& source);

// Tietze-simplifies the middle and transports both legs through the
// isomorphism.
Cospan simplified(const Cospan& c, const TietzeOptions& options = {});

}  // namespace tg
