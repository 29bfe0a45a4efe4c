#include "monres/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace monres {

Exp checked_add(Exp a, Exp b) {
    Exp r;
    if (__builtin_add_overflow(a, b, &r))
        throw ExponentOverflow("exponent addition overflow");
    return r;
}

Exp checked_mul(Exp a, Exp b) {
    Exp r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ExponentOverflow("exponent multiplication overflow");
    return r;
}

Monomial::Monomial(std::vector<Exp> exponents) : exps_(std::move(exponents)) {
    for (Exp e : exps_)
        if (e < 0)
            throw std::invalid_argument("monomial exponents must be non-negative");
}

Monomial Monomial::one(int n) {
    return Monomial(std::vector<Exp>(static_cast<std::size_t>(n), 0));
}

bool Monomial::is_one() const {
    return std::ranges::all_of(exps_, [](Exp e) { return e == 0; });
}

Exp Monomial::total_degree() const {
    Exp d = 0;
    for (Exp e : exps_) d = checked_add(d, e);
    return d;
}

Exp Monomial::max_exponent() const {
    Exp m = 0;
    for (Exp e : exps_) m = std::max(m, e);
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    if (vars() != other.vars())
        throw std::invalid_argument("divides: variable count mismatch");
    for (int s = 0; s < vars(); ++s)
        if (exps_[static_cast<std::size_t>(s)] > other[s]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    if (vars() != other.vars())
        throw std::invalid_argument("lcm: variable count mismatch");
    std::vector<Exp> r(exps_);
    for (int s = 0; s < vars(); ++s)
        r[static_cast<std::size_t>(s)] = std::max(r[static_cast<std::size_t>(s)], other[s]);
    return Monomial(std::move(r));
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (vars() != other.vars())
        throw std::invalid_argument("product: variable count mismatch");
    std::vector<Exp> r(exps_);
    for (int s = 0; s < vars(); ++s)
        r[static_cast<std::size_t>(s)] = checked_add(r[static_cast<std::size_t>(s)], other[s]);
    return Monomial(std::move(r));
}

Monomial Monomial::quotient(const Monomial& d) const {
    if (!d.divides(*this))
        throw std::invalid_argument("quotient: divisor does not divide");
    std::vector<Exp> r(exps_);
    for (int s = 0; s < vars(); ++s) r[static_cast<std::size_t>(s)] -= d[s];
    return Monomial(std::move(r));
}

std::string to_string(const Monomial& m, std::span<const std::string> var_names) {
    std::string out;
    for (int s = 0; s < m.vars(); ++s) {
        if (m[s] == 0) continue;
        if (!out.empty()) out += '*';
        out += var_names[static_cast<std::size_t>(s)];
        if (m[s] > 1) out += '^' + std::to_string(m[s]);
    }
    return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exp e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace monres
