#pragma once

#include <string>
#include <vector>

#include "hom.hpp"
#include "presentation.hpp"

namespace tg {

struct TietzeOptions {
    std::size_t max_passes = 100;
};

struct TietzeMove {
    enum class Kind { DropTrivialRelator, DropDuplicateRelator, EliminateGenerator };
    Kind kind;
    std::string detail;
};

struct SimplificationTrace {
    std::vector<TietzeMove> moves;
    std::size_t passes = 0;
};

struct TietzeResult {
    Presentation presentation;
    std::vector<GroupHom> transported;
    SimplificationTrace trace;
};

// Deterministic fixpoint simplification: drop trivial relators, drop relator
// duplicates (up to inversion and cyclic rotation), and eliminate any
// generator occurring exactly once in some relator by substituting its
// expression everywhere, including the transported hom images. The result
// presents an isomorphic group and leaves abelian invariants and finite hom
// counts unchanged.
TietzeResult tietze_simplify(const Presentation& p, std::vector<GroupHom> transported = {},
                             const TietzeOptions& options = {});

// Cyclic reduction: strips matching conjugating letters from both ends.
Word cyclically_reduced(const Word& w);

// Canonical representative among all rotations of w and of its inverse.
Word cyclic_canonical(const Word& w);

}  // namespace tg
