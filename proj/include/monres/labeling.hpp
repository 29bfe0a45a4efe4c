#pragma once

#include <vector>

#include "monres/scarf.hpp"
#include "monres/simplicial.hpp"

namespace monres {

/// Per-facet bijections from vertices to variables, subject to:
///   (A) an axis vertex (the one playing the role of variable s) is
///       always mapped to s by every facet containing it;
///   (B) two facets sharing a ridge agree on all but exactly one of
///       their common vertices.
/// Facets are kept in canonical order; labels[k][j] is the variable
/// (0-based) assigned to the j-th vertex of facets[k].
struct Labeling {
    std::vector<Face> facets;
    std::vector<std::vector<int>> labels;

    int label_of(const Face& facet, int vertex) const;
    bool operator==(const Labeling&) const = default;
    bool operator<(const Labeling& other) const;

    /// Facets on which the two labelings disagree (they must share the
    /// same facet list).
    std::vector<Face> differing_facets(const Labeling& other) const;
};

/// Checks axioms (A) and (B); axis[s] is the vertex playing variable s,
/// or -1 when absent.
bool satisfies_labeling_axioms(const Labeling& l, const std::vector<int>& axis, int n);

/// The labeling of the Scarf complex of an artinian generic ideal: vertex
/// j of facet I is mapped to the unique variable missing in m_I / m_j.
Labeling facet_labeling(const MonomialIdeal& ideal);

/// All labelings of a pure (n-1)-dimensional complex whose vertices
/// 0..n-1 serve as the axis vertices, by exhaustive backtracking over
/// facet bijections; most-constrained facets are assigned first and the
/// result list is canonically ordered.
std::vector<Labeling> enumerate_labelings(const SimplicialComplex& tri, int n);

}  // namespace monres
