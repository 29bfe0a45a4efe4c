#include "monres/deform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace monres {

bool DeformationMap::is_identity() const {
    return original == deformed && correspondence == identity_correspondence(original.gen_count());
}

std::vector<int> identity_correspondence(int r) {
    std::vector<int> c(static_cast<std::size_t>(r));
    std::iota(c.begin(), c.end(), 0);
    return c;
}

bool validate_deformation(const MonomialIdeal& original, const MonomialIdeal& deformed,
                          const std::vector<int>& correspondence) {
    const int r = original.gen_count();
    if (deformed.gen_count() != r) return false;
    if (original.vars() != deformed.vars()) return false;
    if (static_cast<int>(correspondence.size()) != r) return false;
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (int c : correspondence) {
        if (c < 0 || c >= r || seen[static_cast<std::size_t>(c)]) return false;
        seen[static_cast<std::size_t>(c)] = true;
    }
    if (!is_generic(deformed)) return false;
    for (int s = 0; s < original.vars(); ++s) {
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                if (deformed.exponent(i, s) < deformed.exponent(j, s) &&
                    original.exponent(correspondence[static_cast<std::size_t>(i)], s) >
                        original.exponent(correspondence[static_cast<std::size_t>(j)], s))
                    return false;
            }
        }
    }
    return true;
}

DeformationMap make_deformation(MonomialIdeal original, MonomialIdeal deformed,
                                std::vector<int> correspondence) {
    if (!validate_deformation(original, deformed, correspondence))
        throw std::invalid_argument("supplied deformation is not a generic deformation");
    return DeformationMap{std::move(original), std::move(deformed), std::move(correspondence)};
}

DeformationMap deform(const MonomialIdeal& ideal) {
    const int r = ideal.gen_count();
    if (is_generic(ideal))
        return DeformationMap{ideal, ideal, identity_correspondence(r)};

    const int n = ideal.vars();
    std::vector<std::vector<Exp>> exps(static_cast<std::size_t>(r),
                                       std::vector<Exp>(static_cast<std::size_t>(n), 0));
    for (int s = 0; s < n; ++s) {
        std::vector<int> order(static_cast<std::size_t>(r));
        std::iota(order.begin(), order.end(), 0);
        std::ranges::sort(order, [&](int i, int j) {
            if (ideal.exponent(i, s) != ideal.exponent(j, s))
                return ideal.exponent(i, s) < ideal.exponent(j, s);
            return i < j;
        });
        for (int rank = 0; rank < r; ++rank)
            exps[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])]
                [static_cast<std::size_t>(s)] = rank + 1;
    }
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(r));
    for (auto& e : exps) gens.emplace_back(std::move(e));
    MonomialIdeal deformed(ideal.var_names(), std::move(gens));
    DeformationMap map{ideal, std::move(deformed), identity_correspondence(r)};
    if (!validate_deformation(map.original, map.deformed, map.correspondence))
        throw std::logic_error("canonical deformation failed its own validation");
    return map;
}

}  // namespace monres
