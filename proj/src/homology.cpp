#include "monres/homology.hpp"

#include <unordered_map>

namespace monres {

IntMatrix boundary_matrix(const SimplicialComplex& c, int d) {
    const std::vector<Face> domain = c.faces_of_dim(d);
    if (d == 0) {
        // Augmentation: every vertex maps to the empty face.
        IntMatrix m(1, static_cast<int>(domain.size()));
        for (int col = 0; col < m.cols(); ++col) m.at(0, col) = 1;
        return m;
    }
    const std::vector<Face> codomain = c.faces_of_dim(d - 1);
    std::unordered_map<Face, int, FaceHash> row_of;
    for (std::size_t i = 0; i < codomain.size(); ++i)
        row_of[codomain[i]] = static_cast<int>(i);

    IntMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const Face& f = domain[col];
        int sign = 1;
        for (int v : f) {
            m.at(row_of.at(face_minus(f, v)), static_cast<int>(col)) = sign;
            sign = -sign;
        }
    }
    return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, const Field& field) {
    const int dim = c.dimension();
    HomologyProfile out;
    if (dim < 0) {
        out.ranks = {1};  // only the empty face: reduced H_{-1} = k
        return out;
    }
    // f[d+1] = number of d-faces, with the empty face at index 0.
    std::vector<long> f(static_cast<std::size_t>(dim + 2), 0);
    f[0] = 1;
    for (const Face& face : c.faces()) ++f[face.size()];

    // r[d+1] = rank of the boundary map from d-faces; r for d = dim+1 is 0.
    std::vector<int> r(static_cast<std::size_t>(dim + 3), 0);
    for (int d = 0; d <= dim; ++d)
        r[static_cast<std::size_t>(d + 1)] = rank(boundary_matrix(c, d), field);

    out.ranks.resize(static_cast<std::size_t>(dim + 2));
    for (int d = -1; d <= dim; ++d) {
        const std::size_t i = static_cast<std::size_t>(d + 1);
        out.ranks[i] = static_cast<int>(f[i]) - r[i] - r[i + 1];
    }
    return out;
}

bool is_acyclic(const SimplicialComplex& c, const Field& field) {
    if (field.is_rationals()) {
        // dim H_d(GF(p)) >= dim H_d(Q) for every d, so vanishing mod 2
        // already settles the rational answer.
        if (reduced_homology(c, Field::prime(2)).all_zero()) return true;
    }
    return reduced_homology(c, field).all_zero();
}

}  // namespace monres
