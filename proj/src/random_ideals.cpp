#include "monres/random_ideals.hpp"

#include <algorithm>
#include <numeric>

namespace monres {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return bound ? next() % bound : 0; }

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

std::vector<std::string> default_vars(int n) {
    const std::vector<std::string> names{"x", "y", "z", "w", "v", "u"};
    return {names.begin(), names.begin() + n};
}

std::vector<Exp> distinct_values(Rng& rng, int count, Exp lo, Exp hi) {
    std::vector<Exp> pool;
    for (Exp v = lo; v <= hi; ++v) pool.push_back(v);
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.below(i)]);
    pool.resize(static_cast<std::size_t>(count));
    return pool;
}

}  // namespace

MonomialIdeal random_generic_ideal(Rng& rng, int max_vars, int max_gens) {
    while (true) {
        const int n = static_cast<int>(rng.range(2, max_vars));
        const int r = static_cast<int>(rng.range(2, max_gens));
        std::vector<std::vector<Exp>> exps(static_cast<std::size_t>(r),
                                           std::vector<Exp>(static_cast<std::size_t>(n), 0));
        for (int s = 0; s < n; ++s) {
            std::vector<int> with_var;
            for (int i = 0; i < r; ++i)
                if (rng.below(4) != 0) with_var.push_back(i);  // sparse zeros
            const std::vector<Exp> values =
                distinct_values(rng, static_cast<int>(with_var.size()), 1, 2 * r + 2);
            for (std::size_t k = 0; k < with_var.size(); ++k)
                exps[static_cast<std::size_t>(with_var[k])][static_cast<std::size_t>(s)] =
                    values[k];
        }
        std::vector<Monomial> monomials;
        bool unit = false;
        for (auto& e : exps) {
            Monomial m{std::move(e)};
            if (m.is_one()) unit = true;
            monomials.push_back(std::move(m));
        }
        if (unit) continue;
        MonomialIdeal ideal = MonomialIdeal::minimalize(default_vars(n), monomials);
        if (ideal.gen_count() < 2) continue;
        return ideal;
    }
}

MonomialIdeal random_nongeneric_ideal(Rng& rng, int max_vars, int max_gens) {
    while (true) {
        const int n = static_cast<int>(rng.range(2, max_vars));
        const int r = static_cast<int>(rng.range(2, max_gens));
        std::vector<std::vector<Exp>> exps(static_cast<std::size_t>(r),
                                           std::vector<Exp>(static_cast<std::size_t>(n), 0));
        for (auto& e : exps)
            for (Exp& v : e) v = rng.range(0, 3);
        std::vector<Monomial> monomials;
        bool unit = false;
        for (auto& e : exps) {
            Monomial m{std::move(e)};
            if (m.is_one()) unit = true;
            monomials.push_back(std::move(m));
        }
        if (unit) continue;
        MonomialIdeal ideal = MonomialIdeal::minimalize(default_vars(n), monomials);
        if (ideal.gen_count() < 2 || is_generic(ideal)) continue;
        return ideal;
    }
}

Monomial random_monomial_in_box(Rng& rng, const Monomial& bound) {
    std::vector<Exp> e(static_cast<std::size_t>(bound.vars()), 0);
    for (int s = 0; s < bound.vars(); ++s)
        e[static_cast<std::size_t>(s)] = rng.range(0, bound[s]);
    return Monomial(std::move(e));
}

MonomialIdeal random_bivariate_ideal(Rng& rng, int max_gens) {
    const int r = static_cast<int>(rng.range(2, max_gens));
    // Strictly decreasing a-exponents, strictly increasing b-exponents.
    std::vector<Exp> a = distinct_values(rng, r, 1, 2 * r + 2);
    std::vector<Exp> b = distinct_values(rng, r, 1, 2 * r + 2);
    std::ranges::sort(a, std::greater<>());
    std::ranges::sort(b);
    std::vector<Monomial> gens;
    for (int i = 0; i < r; ++i)
        gens.push_back(Monomial{{a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]}});
    return MonomialIdeal(default_vars(2), std::move(gens));
}

}  // namespace monres
