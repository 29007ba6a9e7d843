#include "abelian.hpp"

namespace tg {

nlohmann::ordered_json AbelianInvariants::to_json() const {
    nlohmann::ordered_json out;
    out["free_rank"] = free_rank;
    out["torsion"] = nlohmann::ordered_json::array();
    for (const mpz_class& t : torsion) {
        if (t.fits_slong_p()) {
            out["torsion"].push_back(t.get_si());
        } else {
            out["torsion"].push_back(t.get_str());
        }
    }
    return out;
}

IntegerMatrix relator_exponent_matrix(const Presentation& p) {
    IntegerMatrix m(p.relators().size(), p.generators().size());
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
        for (const Letter& l : p.relators()[i].letters()) {
            m.at(i, *p.generator_index(l.gen)) += l.sign;
        }
    }
    return m;
}

IntegerMatrix hom_exponent_matrix(const GroupHom& h) {
    IntegerMatrix m(h.source_generators().size(), h.target().generators().size());
    for (std::size_t i = 0; i < h.images().size(); ++i) {
        for (const Letter& l : h.images()[i].letters()) {
            m.at(i, *h.target().generator_index(l.gen)) += l.sign;
        }
    }
    return m;
}

AbelianInvariants abelianize(const Presentation& p) {
    const IntegerMatrix m = relator_exponent_matrix(p);
    const SmithDecomposition snf = smith_normal_form(m);

    AbelianInvariants out;
    std::size_t rank = 0;
    const std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < bound; ++i) {
        const mpz_class& d = snf.d.at(i, i);
        if (d == 0) continue;
        ++rank;
        if (d >= 2) out.torsion.push_back(d);
    }
    out.free_rank = p.generators().size() - rank;
    return out;
}

}  // namespace tg
