#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monres/face.hpp"
#include "monres/monomial.hpp"

namespace monres {

/// A monomial ideal given by its minimal generating set.  Generators are
/// pairwise incomparable under divisibility and are kept in the order in
/// which they were supplied, so that generator indices in faces, facet
/// lists and printed resolutions match the input listing.  Equality and
/// hashing go through the canonically sorted generator list, so two
/// ideals are equal iff they have the same generators in any order.
///
/// An empty generator list is the zero ideal.  The unit ideal (1 among
/// the generators) is rejected.
class MonomialIdeal {
public:
    /// Builds the ideal from an arbitrary generating set: drops duplicates
    /// and divisibility-redundant monomials, keeping first occurrences in
    /// input order.  `dropped`, when non-null, receives the discarded
    /// generators.
    static MonomialIdeal minimalize(std::vector<std::string> var_names,
                                    const std::vector<Monomial>& monomials,
                                    std::vector<Monomial>* dropped = nullptr);

    /// Wraps a generating set that is already minimal; throws if it is not.
    MonomialIdeal(std::vector<std::string> var_names, std::vector<Monomial> minimal_gens);

    int vars() const { return static_cast<int>(var_names_.size()); }
    int gen_count() const { return static_cast<int>(gens_.size()); }
    bool is_zero() const { return gens_.empty(); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const Monomial& gen(int i) const { return gens_[static_cast<std::size_t>(i)]; }
    const std::vector<Monomial>& generators() const { return gens_; }

    /// Exponent of generator i in variable s.
    Exp exponent(int i, int s) const { return gens_[static_cast<std::size_t>(i)][s]; }

    /// Index of the generator that is a pure power of variable s, if any.
    std::optional<int> pure_power_index(int s) const;

    /// True iff every variable has a pure-power generator.
    bool is_artinian() const;

    Exp max_exponent() const;

    bool operator==(const MonomialIdeal& other) const;

private:
    std::vector<std::string> var_names_;
    std::vector<Monomial> gens_;
};

/// Label of face I: the componentwise maximum (lcm) of its generators.
/// The empty face is not accepted here; its label is the constant 1,
/// available as Monomial::one(n).
Monomial lcm_of(const MonomialIdeal& ideal, const Face& I);

bool divides(const Monomial& a, const Monomial& b);

/// No variable occurs with the same non-zero exponent in two generators.
bool is_generic(const MonomialIdeal& ideal);

/// Membership test: some generator divides m.
bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// All monomials within the box (componentwise <= bound) that are not in
/// the ideal, in lexicographic order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, const Monomial& bound);

/// Adds x_s^D for every variable s lacking a pure-power generator; added
/// generators come first, in variable order, followed by the original
/// ones.  D defaults to 1 + the largest exponent in any generator and
/// must exceed every exponent when supplied.
MonomialIdeal artinianize(const MonomialIdeal& ideal, std::optional<Exp> D = std::nullopt);

Exp default_artinian_exponent(const MonomialIdeal& ideal);

/// The subideal generated by the generators dividing m, together with
/// their indices in the original ideal.
struct Subideal {
    MonomialIdeal ideal;
    std::vector<int> original_indices;
};
Subideal subideal_of_divisors(const MonomialIdeal& ideal, const Monomial& m);

}  // namespace monres
