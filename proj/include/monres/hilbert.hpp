#pragma once

#include <optional>

#include "monres/resolution.hpp"

namespace monres {

/// Numerator of the multigraded Hilbert series of S/M over the common
/// denominator prod (1 - x_s): a signed sum of monomials.
struct HilbertNumerator {
    struct Term {
        int sign;  // +1 or -1 from the Scarf complex; any non-zero integer after combining
        Monomial mono;
        bool operator==(const Term&) const = default;
    };
    std::vector<Term> terms;  // sorted lexicographically by monomial

    bool operator==(const HilbertNumerator&) const = default;
};

/// Alternating sum (-1)^|I| m_I over the Scarf complex, empty face
/// included.  Requires a generic ideal; the multidegrees are then
/// pairwise distinct, which is verified.
HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal);

/// Alternating sum over the basis of any resolution from this module;
/// like terms are combined (cancellation can occur off the minimal
/// resolution).
HilbertNumerator hilbert_numerator(const Resolution& res);

/// Box with per-variable bound max exponent + 2, ample for cross-checks.
Monomial default_hilbert_box(const MonomialIdeal& ideal);

/// Expands numerator / prod(1 - x_s) as a power series truncated to the
/// box and compares with the standard monomial indicator; returns the
/// first mismatching exponent vector, if any.
std::optional<Monomial> hilbert_series_mismatch(const HilbertNumerator& numerator,
                                                const MonomialIdeal& ideal,
                                                const Monomial& box);

}  // namespace monres
