#include "monres/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace monres {

namespace {

void check_uniform_vars(const std::vector<std::string>& var_names,
                        const std::vector<Monomial>& gens) {
    const int n = static_cast<int>(var_names.size());
    for (const Monomial& m : gens)
        if (m.vars() != n)
            throw std::invalid_argument("generator has wrong variable count");
}

}  // namespace

MonomialIdeal MonomialIdeal::minimalize(std::vector<std::string> var_names,
                                        const std::vector<Monomial>& monomials,
                                        std::vector<Monomial>* dropped) {
    check_uniform_vars(var_names, monomials);
    for (const Monomial& m : monomials)
        if (m.is_one())
            throw std::invalid_argument("unit generator: the ideal would be the whole ring");

    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        const Monomial& m = monomials[i];
        bool redundant = false;
        for (std::size_t j = 0; j < monomials.size() && !redundant; ++j) {
            if (j == i) continue;
            // m is redundant if a strict divisor exists, or an equal
            // monomial occurred earlier.
            if (monomials[j].divides(m) && (monomials[j] != m || j < i)) redundant = true;
        }
        if (redundant) {
            if (dropped) dropped->push_back(m);
        } else {
            kept.push_back(m);
        }
    }
    return MonomialIdeal(std::move(var_names), std::move(kept));
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> var_names, std::vector<Monomial> minimal_gens)
    : var_names_(std::move(var_names)), gens_(std::move(minimal_gens)) {
    check_uniform_vars(var_names_, gens_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].is_one())
            throw std::invalid_argument("unit generator: the ideal would be the whole ring");
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (i != j && gens_[i].divides(gens_[j]))
                throw std::invalid_argument("generating set is not minimal");
    }
}

std::optional<int> MonomialIdeal::pure_power_index(int s) const {
    for (int i = 0; i < gen_count(); ++i) {
        const Monomial& m = gens_[static_cast<std::size_t>(i)];
        if (m[s] == 0) continue;
        bool pure = true;
        for (int t = 0; t < vars() && pure; ++t)
            if (t != s && m[t] != 0) pure = false;
        if (pure) return i;
    }
    return std::nullopt;
}

bool MonomialIdeal::is_artinian() const {
    for (int s = 0; s < vars(); ++s)
        if (!pure_power_index(s)) return false;
    return true;
}

Exp MonomialIdeal::max_exponent() const {
    Exp m = 0;
    for (const Monomial& g : gens_) m = std::max(m, g.max_exponent());
    return m;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    if (var_names_ != other.var_names_) return false;
    std::vector<Monomial> a = gens_, b = other.gens_;
    std::ranges::sort(a);
    std::ranges::sort(b);
    return a == b;
}

Monomial lcm_of(const MonomialIdeal& ideal, const Face& I) {
    if (I.empty())
        throw std::invalid_argument("empty face has no lcm");
    Monomial m = ideal.gen(I.front());
    for (std::size_t k = 1; k < I.size(); ++k) m = m.lcm(ideal.gen(I[k]));
    return m;
}

bool divides(const Monomial& a, const Monomial& b) { return a.divides(b); }

bool is_generic(const MonomialIdeal& ideal) {
    for (int s = 0; s < ideal.vars(); ++s) {
        std::vector<Exp> nonzero;
        for (int i = 0; i < ideal.gen_count(); ++i)
            if (ideal.exponent(i, s) != 0) nonzero.push_back(ideal.exponent(i, s));
        std::ranges::sort(nonzero);
        if (std::ranges::adjacent_find(nonzero) != nonzero.end()) return false;
    }
    return true;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
    for (const Monomial& g : ideal.generators())
        if (g.divides(m)) return true;
    return false;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, const Monomial& bound) {
    if (bound.vars() != ideal.vars())
        throw std::invalid_argument("standard_monomials: bound has wrong variable count");
    const int n = ideal.vars();
    std::vector<Monomial> out;
    std::vector<Exp> e(static_cast<std::size_t>(n), 0);
    // Odometer over the box, most significant digit first = lex order.
    while (true) {
        Monomial m{std::vector<Exp>(e)};
        if (!contains(ideal, m)) out.push_back(std::move(m));
        int s = n - 1;
        while (s >= 0 && e[static_cast<std::size_t>(s)] == bound[s]) {
            e[static_cast<std::size_t>(s)] = 0;
            --s;
        }
        if (s < 0) break;
        ++e[static_cast<std::size_t>(s)];
    }
    return out;
}

Exp default_artinian_exponent(const MonomialIdeal& ideal) {
    return checked_add(ideal.max_exponent(), 1);
}

MonomialIdeal artinianize(const MonomialIdeal& ideal, std::optional<Exp> D_opt) {
    const Exp D = D_opt.value_or(default_artinian_exponent(ideal));
    if (D <= ideal.max_exponent())
        throw std::invalid_argument("artinianize: D must exceed every generator exponent");
    const int n = ideal.vars();
    std::vector<Monomial> gens;
    for (int s = 0; s < n; ++s) {
        if (ideal.pure_power_index(s)) continue;
        std::vector<Exp> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(s)] = D;
        gens.emplace_back(std::move(e));
    }
    for (const Monomial& g : ideal.generators()) gens.push_back(g);
    return MonomialIdeal(ideal.var_names(), std::move(gens));
}

Subideal subideal_of_divisors(const MonomialIdeal& ideal, const Monomial& m) {
    std::vector<Monomial> gens;
    std::vector<int> idx;
    for (int i = 0; i < ideal.gen_count(); ++i) {
        if (ideal.gen(i).divides(m)) {
            gens.push_back(ideal.gen(i));
            idx.push_back(i);
        }
    }
    return Subideal{MonomialIdeal(ideal.var_names(), std::move(gens)), std::move(idx)};
}

}  // namespace monres
