#include "monres/decompose.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "monres/scarf.hpp"

namespace monres {

bool IrreducibleComponent::contains(const Monomial& m) const {
    for (const auto& [s, p] : entries)
        if (m[s] >= p) return true;
    return false;
}

bool Decomposition::member_of_all(const Monomial& m) const {
    for (const IrreducibleComponent& c : components)
        if (!c.contains(m)) return false;
    return true;
}

namespace {

void require_generic(const MonomialIdeal& ideal, const char* what) {
    if (!is_generic(ideal))
        throw std::invalid_argument(std::string(what) +
                                    " requires a generic ideal; deform first");
}

}  // namespace

Decomposition irreducible_decomposition(const MonomialIdeal& ideal, std::optional<Exp> D_opt) {
    require_generic(ideal, "irreducible decomposition");
    const Exp D = D_opt.value_or(default_artinian_exponent(ideal));
    MonomialIdeal artinian = artinianize(ideal, D);
    const ScarfComplex scarf = scarf_complex(artinian);
    const int n = ideal.vars();

    std::map<IrreducibleComponent, Face> seen;
    for (const Face& facet : scarf.complex().facets()) {
        if (static_cast<int>(facet.size()) != n)
            throw std::logic_error("artinian generic Scarf complex is not pure");
        const Monomial label = lcm_of(artinian, facet);
        IrreducibleComponent comp;
        for (int s = 0; s < n; ++s) {
            if (label[s] >= D) continue;  // added pure power dominates
            if (label[s] == 0)
                throw std::logic_error("facet label with a zero exponent in the artinian case");
            comp.entries.push_back({s, label[s]});
        }
        if (!seen.contains(comp)) seen.emplace(std::move(comp), facet);
    }

    Decomposition out;
    for (auto& [comp, facet] : seen) {
        out.components.push_back(comp);
        out.facet_of_origin.push_back(facet);
    }
    out.D = D;
    out.artinianized = std::move(artinian);
    return out;
}

Decomposition irreducible_decomposition_by_deformation(const MonomialIdeal& ideal) {
    const DeformationMap map = deform(ideal);
    Decomposition deformed = irreducible_decomposition(map.deformed);

    // Specialize: each component exponent deg_s of a deformed facet label
    // is replaced by the degree of the corresponding original label.
    // Vertices of the artinianization beyond the deformed generators are
    // the added pure powers.
    const int r = ideal.gen_count();
    const int added = deformed.artinianized.gen_count() - r;
    std::map<IrreducibleComponent, Face> seen;
    for (std::size_t k = 0; k < deformed.components.size(); ++k) {
        const Face& facet = deformed.facet_of_origin[k];
        Face original_part;
        for (int v : facet)
            if (v >= added) original_part.push_back(map.correspondence[static_cast<std::size_t>(v - added)]);
        IrreducibleComponent comp;
        if (!original_part.empty()) {
            std::ranges::sort(original_part);
            const Monomial label = lcm_of(ideal, original_part);
            for (const auto& [s, p_deformed] : deformed.components[k].entries) {
                (void)p_deformed;
                if (label[s] > 0) comp.entries.push_back({s, label[s]});
            }
        }
        if (!seen.contains(comp)) seen.emplace(std::move(comp), facet);
    }
    Decomposition out;
    for (auto& [comp, facet] : seen) {
        out.components.push_back(comp);
        out.facet_of_origin.push_back(facet);
    }
    out.D = deformed.D;
    out.artinianized = deformed.artinianized;
    out.possibly_redundant = true;
    return out;
}

int dimension(const MonomialIdeal& ideal) {
    require_generic(ideal, "dimension");
    const Decomposition d = irreducible_decomposition(ideal);
    int best = 0;
    for (const IrreducibleComponent& c : d.components)
        best = std::max(best, ideal.vars() - c.entry_count());
    return best;
}

int depth(const MonomialIdeal& ideal) {
    require_generic(ideal, "depth");
    MonomialIdeal artinian = artinianize(ideal);
    const int added = artinian.gen_count() - ideal.gen_count();
    const ScarfComplex scarf = scarf_complex(artinian);
    const int n = ideal.vars();
    int best = n;
    for (const Face& facet : scarf.complex().facets()) {
        if (static_cast<int>(facet.size()) != n)
            throw std::logic_error("artinian generic Scarf complex is not pure");
        int axis = 0;
        for (int v : facet)
            if (v < added) ++axis;
        best = std::min(best, axis);
    }
    return best;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal) {
    require_generic(ideal, "Cohen-Macaulay test");
    const Decomposition d = irreducible_decomposition(ideal);
    bool pure = true;
    for (const IrreducibleComponent& c : d.components)
        if (c.entry_count() != d.components.front().entry_count()) pure = false;
    if (pure != (dimension(ideal) == depth(ideal)))
        throw std::logic_error("purity disagrees with dimension == depth");
    return pure;
}

}  // namespace monres
