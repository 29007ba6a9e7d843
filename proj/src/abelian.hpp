#pragma once

#include <vector>

#include "hom.hpp"
#include "json.hpp"
#include "matrix.hpp"
#include "presentation.hpp"

namespace tg {

// Invariant factors of the abelianized group: free rank plus the torsion
// chain t1 | t2 | ... with every ti >= 2.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const AbelianInvariants&) const = default;
    nlohmann::ordered_json to_json() const;
};

// One row per relator, one column per generator; entry = exponent sum.
IntegerMatrix relator_exponent_matrix(const Presentation& p);

// One row per source generator, one column per target generator.
IntegerMatrix hom_exponent_matrix(const GroupHom& h);

AbelianInvariants abelianize(const Presentation& p);

}  // namespace tg
