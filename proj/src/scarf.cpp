#include "monres/scarf.hpp"

#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "monres/errors.hpp"

namespace monres {

namespace {

/// Local Scarf test for one face.
bool is_scarf_face(const MonomialIdeal& ideal, const Face& I) {
    const int n = ideal.vars();
    const Monomial m = lcm_of(ideal, I);

    // Every vertex must be the unique attainer of the lcm in some variable
    // with a positive exponent; otherwise dropping it keeps the lcm.
    for (int i : I) {
        bool essential = false;
        for (int s = 0; s < n && !essential; ++s) {
            if (ideal.exponent(i, s) != m[s] || m[s] == 0) continue;
            bool unique = true;
            for (int j : I)
                if (j != i && ideal.exponent(j, s) == m[s]) { unique = false; break; }
            if (unique) essential = true;
        }
        if (!essential) return false;
    }
    // No outside generator may divide the lcm; otherwise adjoining it
    // keeps the lcm.
    for (int j = 0; j < ideal.gen_count(); ++j) {
        if (face_contains(I, j)) continue;
        if (ideal.gen(j).divides(m)) return false;
    }
    return true;
}

}  // namespace

ScarfComplex scarf_complex(const MonomialIdeal& ideal) {
    const int r = ideal.gen_count();
    std::vector<Face> admitted;
    std::unordered_set<Face, FaceHash> tested;
    std::vector<Face> frontier;

    for (int i = 0; i < r; ++i) {
        Face f{i};
        if (is_scarf_face(ideal, f)) {
            admitted.push_back(f);
            frontier.push_back(std::move(f));
        }
    }
    while (!frontier.empty()) {
        std::vector<Face> next;
        for (const Face& f : frontier) {
            for (int j = 0; j < r; ++j) {
                if (face_contains(f, j)) continue;
                Face candidate = face_plus(f, j);
                if (!tested.insert(candidate).second) continue;
                if (is_scarf_face(ideal, candidate)) {
                    admitted.push_back(candidate);
                    next.push_back(std::move(candidate));
                }
            }
        }
        frontier = std::move(next);
    }
    // from_faces re-verifies downward closure, which holds for the lcm
    // uniqueness condition over any minimal generating set.
    return ScarfComplex{LabeledComplex(SimplicialComplex::from_faces(r, std::move(admitted)), ideal),
                        is_generic(ideal)};
}

ScarfComplex scarf_brute_force(const MonomialIdeal& ideal, int cap) {
    const int r = ideal.gen_count();
    if (r > cap)
        throw CapExceeded("brute-force Scarf enumeration needs 2^" + std::to_string(r) +
                          " subsets, over the cap of r <= " + std::to_string(cap));
    const std::uint64_t total = static_cast<std::uint64_t>(1) << r;
    std::vector<Monomial> lcms(total);
    lcms[0] = Monomial::one(ideal.vars());
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        const int low = std::countr_zero(mask);
        lcms[mask] = lcms[mask & (mask - 1)].lcm(ideal.gen(low));
    }
    std::unordered_map<Monomial, int, MonomialHash> count;
    for (const Monomial& m : lcms) ++count[m];

    std::vector<Face> faces;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        if (count.at(lcms[mask]) != 1) continue;
        Face f;
        for (int v = 0; v < r; ++v)
            if (mask & (static_cast<std::uint64_t>(1) << v)) f.push_back(v);
        faces.push_back(std::move(f));
    }
    return ScarfComplex{LabeledComplex(SimplicialComplex::from_faces(r, std::move(faces)), ideal),
                        is_generic(ideal)};
}

}  // namespace monres
