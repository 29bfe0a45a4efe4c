#include "monres/exactness.hpp"

#include <algorithm>
#include <unordered_set>

#include "monres/errors.hpp"

namespace monres {

ExactnessReport check_exactness(const LabeledComplex& lc, const Field& field, int cap) {
    const MonomialIdeal& ideal = lc.ideal();
    const int r = ideal.gen_count();
    if (r > cap)
        throw CapExceeded("exactness check enumerates 2^" + std::to_string(r) +
                          " subsets, over the cap of r <= " + std::to_string(cap));

    std::unordered_set<Monomial, MonomialHash> lcm_set;
    Face stack;
    auto enumerate = [&](auto&& self, int next, const Monomial& acc) -> void {
        if (!stack.empty()) lcm_set.insert(acc);
        for (int i = next; i < r; ++i) {
            stack.push_back(i);
            self(self, i + 1, acc.lcm(ideal.gen(i)));
            stack.pop_back();
        }
    };
    enumerate(enumerate, 0, Monomial::one(ideal.vars()));

    std::vector<Monomial> degrees(lcm_set.begin(), lcm_set.end());
    std::ranges::sort(degrees);

    std::unordered_set<std::uint64_t> seen_divisor_sets;
    for (const Monomial& m : degrees) {
        std::uint64_t mask = 0;
        for (int i = 0; i < r; ++i)
            if (ideal.gen(i).divides(m)) mask |= static_cast<std::uint64_t>(1) << i;
        if (!seen_divisor_sets.insert(mask).second) continue;
        const SimplicialComplex restricted = restrict(lc, m);
        if (restricted.empty()) continue;
        if (!is_acyclic(restricted, field))
            return ExactnessReport{false, m};
    }
    return ExactnessReport{true, std::nullopt};
}

bool is_exact(const LabeledComplex& lc, const Field& field, int cap) {
    return check_exactness(lc, field, cap).exact;
}

}  // namespace monres
