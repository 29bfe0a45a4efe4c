#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monres/errors.hpp"

namespace monres {

using Exp = std::int64_t;

Exp checked_add(Exp a, Exp b);
Exp checked_mul(Exp a, Exp b);

/// A monomial in a fixed number of variables, stored as its exponent
/// vector.  Entries are non-negative; the variable count is the vector
/// length and must agree between operands.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Exp> exponents);

    /// The constant monomial 1 in n variables.
    static Monomial one(int n);

    int vars() const { return static_cast<int>(exps_.size()); }
    Exp operator[](int s) const { return exps_[static_cast<std::size_t>(s)]; }
    const std::vector<Exp>& exponents() const { return exps_; }

    bool is_one() const;
    Exp total_degree() const;
    Exp max_exponent() const;

    /// True iff this divides other, i.e. the exponents are componentwise <=.
    bool divides(const Monomial& other) const;

    Monomial lcm(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;

    /// Exact quotient this / d; requires d.divides(*this).
    Monomial quotient(const Monomial& d) const;

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;  // lexicographic

private:
    std::vector<Exp> exps_;
};

/// Renders e.g. (2,0,3) over {x,y,z} as "x^2*z^3"; the constant is "1".
std::string to_string(const Monomial& m, std::span<const std::string> var_names);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

}  // namespace monres
