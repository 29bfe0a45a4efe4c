#pragma once

#include <optional>

#include "monres/homology.hpp"
#include "monres/simplicial.hpp"

namespace monres {

struct ExactnessReport {
    bool exact = false;
    /// Smallest multidegree (lexicographically) whose restriction has
    /// non-vanishing reduced homology, when not exact.
    std::optional<Monomial> counterexample;
};

/// Exactness of the labeled chain complex: for every multidegree m
/// arising as the lcm of a generator subset, the restriction to faces
/// whose label divides m must be empty or acyclic over the field.  The
/// restriction depends only on which generators divide m, so distinct
/// divisor sets are checked once.
ExactnessReport check_exactness(const LabeledComplex& lc,
                                const Field& field = Field::rationals(), int cap = 20);

bool is_exact(const LabeledComplex& lc, const Field& field = Field::rationals(), int cap = 20);

}  // namespace monres
