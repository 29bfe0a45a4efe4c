#pragma once

#include <vector>

#include "monres/linalg.hpp"
#include "monres/simplicial.hpp"

namespace monres {

/// Ranks of reduced simplicial homology, from dimension -1 upward.
/// rank(-1) is 1 exactly when the complex has no vertices (only the
/// implicit empty face).
struct HomologyProfile {
    std::vector<int> ranks;  // ranks[d + 1] = dim of reduced H_d

    int rank(int dim) const {
        const std::size_t i = static_cast<std::size_t>(dim + 1);
        return i < ranks.size() ? ranks[i] : 0;
    }
    bool all_zero() const {
        for (int r : ranks)
            if (r != 0) return false;
        return true;
    }
};

/// Boundary matrix from d-faces to (d-1)-faces of the augmented chain
/// complex; d = 0 gives the augmentation row.
IntMatrix boundary_matrix(const SimplicialComplex& c, int d);

/// Reduced homology over the chosen field, by rank-nullity on the
/// augmented chain complex.
HomologyProfile reduced_homology(const SimplicialComplex& c, const Field& field = Field::rationals());

/// True iff all reduced homology vanishes.  When asked over the
/// rationals this first tries GF(2): mod-p acyclicity forces rational
/// acyclicity, and the exact computation runs only on failure.
bool is_acyclic(const SimplicialComplex& c, const Field& field = Field::rationals());

}  // namespace monres
