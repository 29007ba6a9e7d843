#include "tietze.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <numeric>

#include "errors.hpp"

namespace tg {

Word cyclically_reduced(const Word& w) {
    std::vector<Letter> letters = w.letters();
    while (letters.size() >= 2 && letters.front() == letters.back().inverted()) {
        letters.erase(letters.begin());
        letters.pop_back();
    }
    return Word::reduce(letters);
}

Word cyclic_canonical(const Word& w) {
    const Word reduced = cyclically_reduced(w);
    if (reduced.empty()) return reduced;

    Word best;
    bool first = true;
    for (const Word& base : {reduced, reduced.inverse()}) {
        const auto& ls = base.letters();
        for (std::size_t shift = 0; shift < ls.size(); ++shift) {
            std::vector<Letter> rotated;
            rotated.reserve(ls.size());
            rotated.insert(rotated.end(), ls.begin() + shift, ls.end());
            rotated.insert(rotated.end(), ls.begin(), ls.begin() + shift);
            Word candidate = Word::reduce(rotated);
            if (first || candidate < best) {
                best = std::move(candidate);
                first = false;
            }
        }
    }
    return best;
}

namespace {

struct Workspace {
    std::vector<GeneratorId> gens;
    std::vector<Word> relators;
    std::vector<std::vector<Word>> images;  // one vector per transported hom
    SimplificationTrace trace;

    void substitute_everywhere(const GeneratorId& g, const Word& value) {
        for (Word& r : relators) r = r.substituted(g, value);
        for (auto& hom_images : images) {
            for (Word& w : hom_images) w = w.substituted(g, value);
        }
    }
};

// Solves the relator u g^s v = 1 for the single occurrence of g at `pos`.
Word solve_for(const Word& relator, std::size_t pos) {
    const auto& ls = relator.letters();
    std::vector<Letter> before(ls.begin(), ls.begin() + pos);
    std::vector<Letter> after(ls.begin() + pos + 1, ls.end());
    const Word u = Word::reduce(before);
    const Word v = Word::reduce(after);
    if (ls[pos].sign > 0) return u.inverse() * v.inverse();
    return v * u;
}

bool drop_trivial_and_duplicates(Workspace& ws) {
    bool changed = false;
    std::vector<Word> kept;
    std::map<Word, bool> seen;
    for (Word& r : ws.relators) {
        Word reduced = cyclically_reduced(r);
        if (reduced.empty()) {
            ws.trace.moves.push_back(
                {TietzeMove::Kind::DropTrivialRelator, r.str() + " is trivial"});
            changed = true;
            continue;
        }
        Word key = cyclic_canonical(reduced);
        if (seen.count(key)) {
            ws.trace.moves.push_back({TietzeMove::Kind::DropDuplicateRelator,
                                      r.str() + " repeats an earlier relator"});
            changed = true;
            continue;
        }
        seen.emplace(std::move(key), true);
        if (reduced != r) changed = true;
        kept.push_back(std::move(reduced));
    }
    ws.relators = std::move(kept);
    return changed;
}

bool eliminate_one_generator(Workspace& ws) {
    // Deterministic choice: eliminate the latest-born generator that occurs
    // exactly once in some relator, preferring the shortest such relator.
    // Structural operations append merged-in generators at the end, so this
    // sweeps later layers into earlier ones and keeps transported leg images
    // close to the identity.
    struct Candidate {
        std::size_t gen_index;
        std::size_t relator_length;
        std::size_t relator_index;
        std::size_t position;
    };
    std::optional<Candidate> best;

    for (std::size_t idx = 0; idx < ws.relators.size(); ++idx) {
        const Word& r = ws.relators[idx];
        for (std::size_t pos = 0; pos < r.size(); ++pos) {
            const GeneratorId& g = r.letters()[pos].gen;
            if (r.occurrences(g) != 1) continue;
            const std::size_t gen_index = static_cast<std::size_t>(
                std::find(ws.gens.begin(), ws.gens.end(), g) - ws.gens.begin());
            const Candidate candidate{gen_index, r.size(), idx, pos};
            if (!best || candidate.gen_index > best->gen_index ||
                (candidate.gen_index == best->gen_index &&
                 std::tie(candidate.relator_length, candidate.relator_index,
                          candidate.position) <
                     std::tie(best->relator_length, best->relator_index, best->position))) {
                best = candidate;
            }
        }
    }
    if (!best) return false;

    const Word relator = ws.relators[best->relator_index];
    const GeneratorId g = relator.letters()[best->position].gen;
    const Word value = solve_for(relator, best->position);
    ws.trace.moves.push_back(
        {TietzeMove::Kind::EliminateGenerator, g.name() + " = " + value.str()});
    ws.relators.erase(ws.relators.begin() + best->relator_index);
    ws.gens.erase(ws.gens.begin() + static_cast<std::ptrdiff_t>(best->gen_index));
    ws.substitute_everywhere(g, value);
    return true;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, std::vector<GroupHom> transported,
                             const TietzeOptions& options) {
    Workspace ws;
    ws.gens = p.generators();
    ws.relators = p.relators();
    for (const GroupHom& h : transported) {
        if (h.target() != p) {
            fail(ErrorCode::BadArgument, "transported hom does not target the presentation");
        }
        ws.images.push_back(h.images());
    }

    while (ws.trace.passes < options.max_passes) {
        ++ws.trace.passes;
        bool changed = drop_trivial_and_duplicates(ws);
        changed |= eliminate_one_generator(ws);
        if (!changed) break;
    }

    TietzeResult result{Presentation(ws.gens, ws.relators), {}, std::move(ws.trace)};
    for (std::size_t i = 0; i < transported.size(); ++i) {
        result.transported.emplace_back(transported[i].source_generators(), result.presentation,
                                        ws.images[i]);
    }
    return result;
}

}  // namespace tg
