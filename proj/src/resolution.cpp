#include "monres/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace monres {

const char* to_string(ResolutionSource s) {
    switch (s) {
        case ResolutionSource::scarf: return "scarf";
        case ResolutionSource::deformation: return "deformation";
        case ResolutionSource::taylor: return "taylor";
    }
    return "?";
}

Resolution minimal_resolution(const MonomialIdeal& ideal) {
    if (!is_generic(ideal))
        throw std::invalid_argument(
            "minimal resolution requires a generic ideal; use resolve_by_deformation");
    ScarfComplex scarf = scarf_complex(ideal);
    FreeChainComplex complex = chain_complex(scarf.base);
    if (complex.has_unit_entry())
        throw std::logic_error("Scarf resolution of a generic ideal has a unit entry");
    if (complex.length() > ideal.vars())
        throw std::logic_error("Scarf resolution longer than the number of variables");
    return Resolution{std::move(scarf.base), std::move(complex), true, ResolutionSource::scarf,
                      std::nullopt};
}

Resolution resolve_by_deformation(const MonomialIdeal& ideal,
                                  std::optional<DeformationMap> deformation) {
    DeformationMap map = deformation ? std::move(*deformation) : deform(ideal);
    if (!(map.original == ideal))
        throw std::invalid_argument("deformation was built for a different ideal");
    if (!validate_deformation(map.original, map.deformed, map.correspondence))
        throw std::invalid_argument("supplied deformation is not a generic deformation");

    const ScarfComplex deformed_scarf = scarf_complex(map.deformed);
    // Relabel: pull each face back to original generator indices.
    std::vector<Face> faces;
    faces.reserve(deformed_scarf.complex().faces().size());
    for (const Face& f : deformed_scarf.complex().faces()) {
        Face g;
        g.reserve(f.size());
        for (int v : f) g.push_back(map.correspondence[static_cast<std::size_t>(v)]);
        std::ranges::sort(g);
        faces.push_back(std::move(g));
    }
    LabeledComplex labeled(SimplicialComplex::from_faces(ideal.gen_count(), std::move(faces)),
                           ideal);
    FreeChainComplex complex = chain_complex(labeled);
    if (complex.length() > ideal.vars())
        throw std::logic_error("deformation resolution longer than the number of variables");
    const bool minimal = !complex.has_unit_entry();
    return Resolution{std::move(labeled), std::move(complex), minimal,
                      ResolutionSource::deformation, std::move(map)};
}

Resolution taylor_resolution(const MonomialIdeal& ideal, int cap) {
    FreeChainComplex complex = taylor_complex(ideal, cap);
    const int r = ideal.gen_count();
    std::vector<Face> facets;
    if (r > 0) {
        Face all(static_cast<std::size_t>(r));
        for (int v = 0; v < r; ++v) all[static_cast<std::size_t>(v)] = v;
        facets.push_back(std::move(all));
    }
    LabeledComplex labeled(SimplicialComplex::from_facets(r, facets), ideal);
    const bool minimal = !complex.has_unit_entry();
    return Resolution{std::move(labeled), std::move(complex), minimal, ResolutionSource::taylor,
                      std::nullopt};
}

std::vector<long> betti_numbers(const Resolution& res) { return res.complex.ranks(); }

int merge_sign(const Face& I, const Face& J) {
    long inversions = 0;
    for (int i : I)
        for (int j : J)
            if (i > j) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::optional<DgTerm> dg_multiply(const Resolution& res, const Face& I, const Face& J) {
    if (res.source == ResolutionSource::taylor)
        throw std::invalid_argument("product is defined on Scarf and deformation resolutions");
    if (!res.complex.find_basis(I) || !res.complex.find_basis(J))
        throw std::invalid_argument("product of unknown basis faces");
    if (face_intersection_size(I, J) != 0) return std::nullopt;
    const Face u = face_union(I, J);
    if (!res.complex.find_basis(u)) return std::nullopt;
    const Monomial mi = res.labeled.label(I);
    const Monomial mj = res.labeled.label(J);
    const Monomial mu = res.labeled.label(u);
    return DgTerm{merge_sign(I, J), (mi * mj).quotient(mu), u};
}

}  // namespace monres
