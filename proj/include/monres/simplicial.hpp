#pragma once

#include <unordered_set>
#include <vector>

#include "monres/face.hpp"
#include "monres/ideal.hpp"

namespace monres {

/// A finite simplicial complex on vertices 0..vertex_count-1.  Faces are
/// stored explicitly (the empty face is implicit) in canonical order:
/// by dimension, then lexicographically.  Construction via from_faces
/// verifies downward closure; from_facets closes downward itself.
class SimplicialComplex {
public:
    static SimplicialComplex from_faces(int vertex_count, std::vector<Face> faces);
    static SimplicialComplex from_facets(int vertex_count, const std::vector<Face>& facets);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Face>& faces() const { return faces_; }
    bool has_face(const Face& f) const;
    bool empty() const { return faces_.empty(); }

    int dimension() const;  // -1 when there are no faces
    std::vector<long> f_vector() const;  // f[d] = number of d-faces, d >= 0
    std::vector<Face> facets() const;
    bool is_pure(int expected_dim) const;
    std::vector<Face> faces_of_dim(int d) const;

private:
    SimplicialComplex(int vertex_count, std::vector<Face> faces);

    int vertex_count_ = 0;
    std::vector<Face> faces_;
    std::unordered_set<Face, FaceHash> face_set_;
};

/// A simplicial complex whose vertex i carries generator m_i; each face is
/// labeled by the lcm of its vertex labels, computed on demand.
class LabeledComplex {
public:
    LabeledComplex(SimplicialComplex complex, MonomialIdeal ideal);

    const SimplicialComplex& complex() const { return complex_; }
    const MonomialIdeal& ideal() const { return ideal_; }
    Monomial label(const Face& f) const;

private:
    SimplicialComplex complex_;
    MonomialIdeal ideal_;
};

/// The subcomplex of faces whose label divides m.
SimplicialComplex restrict(const LabeledComplex& lc, const Monomial& m);

}  // namespace monres
