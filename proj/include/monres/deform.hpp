#pragma once

#include <vector>

#include "monres/ideal.hpp"

namespace monres {

/// A generic deformation: the deformed ideal is generic and its exponents
/// preserve the coordinatewise order of the original ones.
/// correspondence[i] is the original index of deformed generator i.
struct DeformationMap {
    MonomialIdeal original;
    MonomialIdeal deformed;
    std::vector<int> correspondence;

    bool is_identity() const;
};

std::vector<int> identity_correspondence(int r);

/// Order-preservation test: the deformed ideal is generic, has the same
/// generator count, and for every variable s and generators i != j,
/// deformed_is < deformed_js implies original_is <= original_js (indices
/// taken through the correspondence).
bool validate_deformation(const MonomialIdeal& original, const MonomialIdeal& deformed,
                          const std::vector<int>& correspondence);

/// Wraps a user-supplied deformation, validating it.
DeformationMap make_deformation(MonomialIdeal original, MonomialIdeal deformed,
                                std::vector<int> correspondence);

/// Canonical generic deformation.  A generic ideal deforms to itself.
/// Otherwise each exponent column is replaced by the ranks 1..r of the
/// pairs (exponent, generator index) in lexicographic order: ties in the
/// original exponents break toward the later generator, and zeros become
/// small positive values below every deformed non-zero exponent, so all
/// deformed exponents in a variable are distinct.
DeformationMap deform(const MonomialIdeal& ideal);

}  // namespace monres
