#pragma once

#include <optional>
#include <vector>

#include "monres/deform.hpp"
#include "monres/ideal.hpp"

namespace monres {

/// An irreducible monomial ideal <x_s^{p_s} : (s, p_s) in entries>,
/// stored sparsely: absent variables impose no constraint.  No entries
/// means the zero ideal.
struct IrreducibleComponent {
    std::vector<std::pair<int, Exp>> entries;  // (variable, exponent), sorted by variable

    bool contains(const Monomial& m) const;
    int entry_count() const { return static_cast<int>(entries.size()); }
    bool operator==(const IrreducibleComponent&) const = default;
    auto operator<=>(const IrreducibleComponent&) const = default;
};

struct Decomposition {
    std::vector<IrreducibleComponent> components;  // deduplicated, sorted
    Exp D = 0;
    /// For each component, the first facet of the artinianized Scarf
    /// complex producing it (vertex indices in `artinianized`).
    std::vector<Face> facet_of_origin;
    MonomialIdeal artinianized;
    /// Deformation route only: the intersection may contain redundant
    /// components.
    bool possibly_redundant = false;

    bool member_of_all(const Monomial& m) const;
};

/// Irreducible decomposition of a generic ideal: artinianize, take the
/// Scarf facets, and read one component off each facet label (entries
/// with exponent D, from the added pure powers, are dropped).
Decomposition irreducible_decomposition(const MonomialIdeal& ideal, std::optional<Exp> D = std::nullopt);

/// Decomposition of an arbitrary ideal through a generic deformation,
/// specializing each component exponent back to the original label;
/// the result is an irreducible decomposition but possibly redundant.
Decomposition irreducible_decomposition_by_deformation(const MonomialIdeal& ideal);

/// Krull dimension of S/M: max over components of n - size.
int dimension(const MonomialIdeal& ideal);

/// depth of S/M: min over facets of the artinianized Scarf complex of
/// the number of vertices outside the original generators.
int depth(const MonomialIdeal& ideal);

/// All components of equal size; equivalently dimension == depth.
bool is_cohen_macaulay(const MonomialIdeal& ideal);

}  // namespace monres
