#pragma once

#include <optional>

#include "monres/chain.hpp"
#include "monres/deform.hpp"
#include "monres/scarf.hpp"

namespace monres {

enum class ResolutionSource { scarf, deformation, taylor };

const char* to_string(ResolutionSource s);

/// A free resolution of S/M presented by a labeled simplicial complex.
/// `labeled` keeps the supporting complex together with the ideal being
/// resolved; for deformation resolutions its faces come from the deformed
/// ideal's Scarf complex while the labels use the original generators.
struct Resolution {
    LabeledComplex labeled;
    FreeChainComplex complex;
    bool minimal = false;
    ResolutionSource source = ResolutionSource::scarf;
    std::optional<DeformationMap> deformation;

    const MonomialIdeal& ideal() const { return labeled.ideal(); }
};

/// The Scarf resolution of a generic ideal; minimal by construction
/// (every differential entry has a non-trivial monomial part, which is
/// verified).  Non-generic input is an error.
Resolution minimal_resolution(const MonomialIdeal& ideal);

/// Resolution from a generic deformation: the Scarf complex of the
/// deformed ideal relabeled with the original generators.  Exact but in
/// general not minimal; length at most the number of variables.  Uses
/// the canonical deformation when none is supplied.
Resolution resolve_by_deformation(const MonomialIdeal& ideal,
                                  std::optional<DeformationMap> deformation = std::nullopt);

/// The Taylor complex wrapped as a resolution.
Resolution taylor_resolution(const MonomialIdeal& ideal, int cap = 20);

/// Rank vector (beta_0 = 1 for S, beta_1 = generators, ...).
std::vector<long> betti_numbers(const Resolution& res);

/// One term of a product in the DG structure carried by Scarf and
/// deformation resolutions.
struct DgTerm {
    int sign = 1;
    Monomial mono;
    Face face;

    bool operator==(const DgTerm&) const = default;
};

/// e_I * e_J: zero (nullopt) when I and J overlap or I u J is not a
/// basis face; otherwise the merge sign times m_I m_J / m_{I u J} on
/// e_{I u J}.
std::optional<DgTerm> dg_multiply(const Resolution& res, const Face& I, const Face& J);

/// Sign of the permutation merging sorted I then sorted J into sorted
/// order; requires disjointness.
int merge_sign(const Face& I, const Face& J);

}  // namespace monres
