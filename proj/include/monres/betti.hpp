#pragma once

#include <vector>

#include "monres/ideal.hpp"
#include "monres/linalg.hpp"

namespace monres {

/// Multigraded Betti numbers of S/M, homological degree 0 = S itself.
struct BettiTable {
    std::vector<long> totals;  // totals[j] = beta_j
    /// Multidegrees carrying a non-zero Betti number, sorted; each with
    /// its per-degree ranks (same indexing as totals).
    std::vector<std::pair<Monomial, std::vector<long>>> by_degree;

    long max_rank_per_degree() const;
};

/// Betti numbers from the Taylor complex: the differential is reduced
/// modulo the maximal ideal (entries become +-1 exactly when the lcm is
/// unchanged by the deletion) and homology is taken one multidegree
/// strand at a time.
BettiTable betti_oracle(const MonomialIdeal& ideal, const Field& field = Field::rationals(),
                        int cap = 20);

}  // namespace monres
