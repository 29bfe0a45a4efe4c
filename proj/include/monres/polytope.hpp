#pragma once

#include <vector>

#include "monres/ideal.hpp"

namespace monres {

/// Face numbers c_0..c_{n-1} of the cyclic polytope C_n(r), by facet
/// enumeration through Gale's evenness condition; requires r >= n+1.
std::vector<long> cyclic_face_numbers(int n, int r);

struct BoundCheck {
    int i;        // face dimension
    long faces;   // i-faces of the (possibly deformed) Scarf complex
    long bound;
    bool ok;
};

/// Betti numbers against the face numbers of the cyclic polytope:
/// f_i <= c_i(n, r) for 1 <= i <= n-2 and f_{n-1} <= c_{n-1}(n, r) - 1.
/// Non-generic ideals are routed through the canonical deformation, whose
/// face counts dominate the true Betti numbers.  With r <= n the cyclic
/// polytope is undefined and the full-simplex counts C(r, i+1) serve as
/// the (trivially valid) bounds, without the -1 at the top.
struct UpperBoundReport {
    int n = 0;
    int r = 0;
    bool deformed = false;
    bool cyclic_bounds = true;
    std::vector<long> face_counts;  // f_0..f_{n-1}
    std::vector<BoundCheck> checks;
    bool all_ok = true;
};

UpperBoundReport check_upper_bound(const MonomialIdeal& ideal);

long binomial(int n, int k);

}  // namespace monres
