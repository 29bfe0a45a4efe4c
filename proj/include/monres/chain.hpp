#pragma once

#include <optional>
#include <vector>

#include "monres/simplicial.hpp"

namespace monres {

/// One non-zero differential entry: coefficient sign * mono, mapping the
/// basis element `col` of the source level to `row` of the target level.
struct Triplet {
    int row = 0;
    int col = 0;
    int sign = 1;  // +1 or -1
    Monomial mono;
};

/// Basis of one homological degree: faces in canonical order, each with
/// its multidegree label.
struct ChainLevel {
    std::vector<Face> faces;
    std::vector<Monomial> degrees;

    int rank() const { return static_cast<int>(faces.size()); }
};

/// A complex of free multigraded modules with monomial differentials.
/// Level 0 is the rank-one module spanned by the empty face; level j >= 1
/// holds the (j-1)-dimensional faces.  diff(j) maps level j to level j-1.
class FreeChainComplex {
public:
    FreeChainComplex(int vars, std::vector<ChainLevel> levels, std::vector<std::vector<Triplet>> diffs);

    int vars() const { return vars_; }
    int length() const { return static_cast<int>(levels_.size()) - 1; }
    const ChainLevel& level(int j) const { return levels_[static_cast<std::size_t>(j)]; }
    const std::vector<Triplet>& diff(int j) const { return diffs_[static_cast<std::size_t>(j)]; }

    /// Ranks per homological degree, (1, f_0, f_1, ...) for a labeled complex.
    std::vector<long> ranks() const;

    /// Checks d o d = 0 by symbolic composition: for every pair of basis
    /// elements two levels apart, the signed monomial contributions cancel.
    bool d_squared_is_zero() const;

    /// True iff some differential entry is a unit (monomial part 1).
    bool has_unit_entry() const;

    /// Column multidegree = row multidegree + entry multidegree, for every
    /// stored entry.
    bool degrees_consistent() const;

    /// Basis index of a face, searching all levels.
    std::optional<std::pair<int, int>> find_basis(const Face& f) const;  // (level, index)

private:
    int vars_;
    std::vector<ChainLevel> levels_;
    std::vector<std::vector<Triplet>> diffs_;  // diffs_[j] for j >= 1; diffs_[0] unused
};

/// The multigraded chain complex of a labeled simplicial complex: one
/// basis element per face, differential entry from face I to I\{i} equal
/// to sign(i, I) * label(I)/label(I\{i}), where sign(i, I) = (-1)^(j+1)
/// for i the j-th smallest element of I.
FreeChainComplex chain_complex(const LabeledComplex& lc);

/// The chain complex of the full simplex on all generators; has 2^r basis
/// elements, so r is capped.
FreeChainComplex taylor_complex(const MonomialIdeal& ideal, int cap = 20);

}  // namespace monres
