#include "monres/labeling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace monres {

int Labeling::label_of(const Face& facet, int vertex) const {
    for (std::size_t k = 0; k < facets.size(); ++k) {
        if (facets[k] != facet) continue;
        for (std::size_t j = 0; j < facet.size(); ++j)
            if (facet[j] == vertex) return labels[k][j];
    }
    throw std::invalid_argument("labeling: unknown facet or vertex");
}

bool Labeling::operator<(const Labeling& other) const {
    if (facets != other.facets) return facets < other.facets;
    return labels < other.labels;
}

std::vector<Face> Labeling::differing_facets(const Labeling& other) const {
    if (facets != other.facets)
        throw std::invalid_argument("labelings live on different facet sets");
    std::vector<Face> out;
    for (std::size_t k = 0; k < facets.size(); ++k)
        if (labels[k] != other.labels[k]) out.push_back(facets[k]);
    return out;
}

namespace {

bool ridge_axiom_holds(const Face& fa, const std::vector<int>& la,
                       const Face& fb, const std::vector<int>& lb, int n) {
    if (face_intersection_size(fa, fb) != static_cast<int>(fa.size()) - 1) return true;
    int agree = 0;
    std::size_t ia = 0, ib = 0;
    while (ia < fa.size() && ib < fb.size()) {
        if (fa[ia] < fb[ib]) ++ia;
        else if (fb[ib] < fa[ia]) ++ib;
        else {
            if (la[ia] == lb[ib]) ++agree;
            ++ia;
            ++ib;
        }
    }
    return agree == n - 2;
}

}  // namespace

bool satisfies_labeling_axioms(const Labeling& l, const std::vector<int>& axis, int n) {
    for (std::size_t k = 0; k < l.facets.size(); ++k) {
        const Face& f = l.facets[k];
        if (static_cast<int>(f.size()) != n) return false;
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (std::size_t j = 0; j < f.size(); ++j) {
            const int var = l.labels[k][j];
            if (var < 0 || var >= n || used[static_cast<std::size_t>(var)]) return false;
            used[static_cast<std::size_t>(var)] = true;
        }
        for (int s = 0; s < n; ++s) {
            if (axis[static_cast<std::size_t>(s)] < 0) continue;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (f[j] == axis[static_cast<std::size_t>(s)] && l.labels[k][j] != s)
                    return false;
        }
    }
    for (std::size_t a = 0; a < l.facets.size(); ++a)
        for (std::size_t b = a + 1; b < l.facets.size(); ++b)
            if (!ridge_axiom_holds(l.facets[a], l.labels[a], l.facets[b], l.labels[b], n))
                return false;
    return true;
}

Labeling facet_labeling(const MonomialIdeal& ideal) {
    const int n = ideal.vars();
    if (!is_generic(ideal))
        throw std::invalid_argument("facet labeling requires a generic ideal");
    if (!ideal.is_artinian())
        throw std::invalid_argument("facet labeling requires an artinian ideal");

    const ScarfComplex scarf = scarf_complex(ideal);
    Labeling out;
    out.facets = scarf.complex().facets();
    for (const Face& f : out.facets) {
        if (static_cast<int>(f.size()) != n)
            throw std::invalid_argument("facet labeling: Scarf facet with fewer than n vertices");
        const Monomial m = scarf.base.label(f);
        std::vector<int> assignment;
        for (int j : f) {
            int var = -1;
            for (int s = 0; s < n; ++s) {
                if (ideal.exponent(j, s) == m[s]) {
                    if (var >= 0)
                        throw std::invalid_argument(
                            "facet labeling: missing variable is not unique");
                    var = s;
                }
            }
            if (var < 0)
                throw std::invalid_argument("facet labeling: no missing variable for a vertex");
            assignment.push_back(var);
        }
        out.labels.push_back(std::move(assignment));
    }

    std::vector<int> axis(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s)
        axis[static_cast<std::size_t>(s)] = ideal.pure_power_index(s).value();
    if (!satisfies_labeling_axioms(out, axis, n))
        throw std::logic_error("facet labeling violates the labeling axioms");
    return out;
}

std::vector<Labeling> enumerate_labelings(const SimplicialComplex& tri, int n) {
    if (!tri.is_pure(n - 1))
        throw std::invalid_argument("labeling enumeration requires a pure (n-1)-complex");
    const std::vector<Face> facets = tri.facets();
    const std::size_t count = facets.size();

    std::vector<std::vector<std::size_t>> neighbors(count);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b)
            if (face_intersection_size(facets[a], facets[b]) == n - 1) {
                neighbors[a].push_back(b);
                neighbors[b].push_back(a);
            }

    // Assignment order: most constrained first, by assigned neighbors then
    // by number of axis vertices.
    std::vector<std::size_t> order;
    std::vector<bool> placed(count, false);
    auto axis_count = [&](std::size_t k) {
        int c = 0;
        for (int v : facets[k])
            if (v < n) ++c;
        return c;
    };
    for (std::size_t step = 0; step < count; ++step) {
        std::size_t best = count;
        int best_nb = -1, best_ax = -1;
        for (std::size_t k = 0; k < count; ++k) {
            if (placed[k]) continue;
            int nb = 0;
            for (std::size_t m : neighbors[k])
                if (placed[m]) ++nb;
            const int ax = axis_count(k);
            if (nb > best_nb || (nb == best_nb && ax > best_ax)) {
                best = k;
                best_nb = nb;
                best_ax = ax;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    std::vector<std::vector<int>> labels(count);
    std::vector<bool> assigned(count, false);
    std::vector<Labeling> results;

    auto candidates_for = [&](std::size_t k) {
        const Face& f = facets[k];
        std::vector<int> fixed(f.size(), -1);
        std::vector<int> free_vars, free_slots;
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (f[j] < n) {
                fixed[j] = f[j];  // axiom (A)
                used[static_cast<std::size_t>(f[j])] = true;
            } else {
                free_slots.push_back(static_cast<int>(j));
            }
        }
        for (int s = 0; s < n; ++s)
            if (!used[static_cast<std::size_t>(s)]) free_vars.push_back(s);
        std::vector<std::vector<int>> out;
        std::ranges::sort(free_vars);
        do {
            std::vector<int> a = fixed;
            for (std::size_t t = 0; t < free_slots.size(); ++t)
                a[static_cast<std::size_t>(free_slots[t])] = free_vars[t];
            out.push_back(std::move(a));
        } while (std::ranges::next_permutation(free_vars).found);
        return out;
    };

    auto search = [&](auto&& self, std::size_t depth) -> void {
        if (depth == count) {
            Labeling l;
            l.facets = facets;
            l.labels = labels;
            results.push_back(std::move(l));
            return;
        }
        const std::size_t k = order[depth];
        for (std::vector<int>& candidate : candidates_for(k)) {
            bool ok = true;
            for (std::size_t m : neighbors[k]) {
                if (!assigned[m]) continue;
                if (!ridge_axiom_holds(facets[k], candidate, facets[m], labels[m], n)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            labels[k] = std::move(candidate);
            assigned[k] = true;
            self(self, depth + 1);
            assigned[k] = false;
        }
    };
    search(search, 0);
    std::ranges::sort(results, [](const Labeling& a, const Labeling& b) { return a < b; });
    return results;
}

}  // namespace monres
