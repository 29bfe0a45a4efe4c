#include "monres/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "monres/errors.hpp"

namespace monres {

FreeChainComplex::FreeChainComplex(int vars, std::vector<ChainLevel> levels,
                                   std::vector<std::vector<Triplet>> diffs)
    : vars_(vars), levels_(std::move(levels)), diffs_(std::move(diffs)) {
    if (diffs_.size() != levels_.size())
        throw std::invalid_argument("chain complex: one differential per positive level");
}

std::vector<long> FreeChainComplex::ranks() const {
    std::vector<long> r;
    r.reserve(levels_.size());
    for (const ChainLevel& level : levels_) r.push_back(level.rank());
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool FreeChainComplex::d_squared_is_zero() const {
    for (int j = 2; j <= length(); ++j) {
        // Compose diff(j) with diff(j-1).  All contributions to a fixed
        // (row, col) share the multidegree deg(col) - deg(row), so the
        // monomial parts agree and only the signed coefficients must cancel.
        std::unordered_map<long, long> acc;  // (row, col) packed -> coefficient
        const long stride = levels_[static_cast<std::size_t>(j)].rank() + 1;
        std::unordered_map<int, std::vector<const Triplet*>> upper_by_col;
        for (const Triplet& t : diff(j)) upper_by_col[t.col].push_back(&t);
        for (const auto& [col, uppers] : upper_by_col) {
            for (const Triplet* u : uppers) {
                for (const Triplet& l : diff(j - 1)) {
                    if (l.col != u->row) continue;
                    acc[static_cast<long>(l.row) * stride + col] += u->sign * l.sign;
                }
            }
        }
        for (const auto& [key, coeff] : acc)
            if (coeff != 0) return false;
    }
    return true;
}

bool FreeChainComplex::has_unit_entry() const {
    for (int j = 1; j <= length(); ++j)
        for (const Triplet& t : diff(j))
            if (t.mono.is_one()) return true;
    return false;
}

bool FreeChainComplex::degrees_consistent() const {
    for (int j = 1; j <= length(); ++j) {
        const ChainLevel& src = level(j);
        const ChainLevel& dst = level(j - 1);
        for (const Triplet& t : diff(j)) {
            const Monomial& coldeg = src.degrees[static_cast<std::size_t>(t.col)];
            const Monomial& rowdeg = dst.degrees[static_cast<std::size_t>(t.row)];
            if (rowdeg * t.mono != coldeg) return false;
        }
    }
    return true;
}

std::optional<std::pair<int, int>> FreeChainComplex::find_basis(const Face& f) const {
    const int j = static_cast<int>(f.size());
    if (j > length()) return std::nullopt;
    const ChainLevel& lvl = level(j);
    const auto it = std::ranges::lower_bound(lvl.faces, f, FaceOrder{});
    if (it == lvl.faces.end() || *it != f) return std::nullopt;
    return std::make_pair(j, static_cast<int>(it - lvl.faces.begin()));
}

namespace {

FreeChainComplex complex_from_faces(const LabeledComplex& lc, const std::vector<Face>& all_faces) {
    const int n = lc.ideal().vars();
    int top = 0;
    for (const Face& f : all_faces) top = std::max(top, static_cast<int>(f.size()));

    std::vector<ChainLevel> levels(static_cast<std::size_t>(top) + 1);
    levels[0].faces.push_back(Face{});
    levels[0].degrees.push_back(Monomial::one(n));
    for (const Face& f : all_faces) {
        ChainLevel& lvl = levels[f.size()];
        lvl.faces.push_back(f);
    }
    for (ChainLevel& lvl : levels) {
        std::ranges::sort(lvl.faces, FaceOrder{});
        lvl.degrees.reserve(lvl.faces.size());
    }
    levels[0].degrees.resize(1, Monomial::one(n));
    for (std::size_t j = 1; j < levels.size(); ++j)
        for (const Face& f : levels[j].faces)
            levels[j].degrees.push_back(lc.label(f));

    std::vector<std::vector<Triplet>> diffs(levels.size());
    for (std::size_t j = 1; j < levels.size(); ++j) {
        std::unordered_map<Face, int, FaceHash> index_below;
        for (std::size_t i = 0; i < levels[j - 1].faces.size(); ++i)
            index_below[levels[j - 1].faces[i]] = static_cast<int>(i);
        for (std::size_t col = 0; col < levels[j].faces.size(); ++col) {
            const Face& f = levels[j].faces[col];
            const Monomial& label = levels[j].degrees[col];
            int sign = 1;  // (-1)^(pos+1) with pos the 1-based position in I
            for (int v : f) {
                const Face sub = face_minus(f, v);
                const auto it = index_below.find(sub);
                if (it == index_below.end())
                    throw std::logic_error("chain complex built from a non-closed face set");
                const Monomial& sublabel =
                    levels[j - 1].degrees[static_cast<std::size_t>(it->second)];
                diffs[j].push_back(Triplet{it->second, static_cast<int>(col), sign,
                                           label.quotient(sublabel)});
                sign = -sign;
            }
        }
    }
    return FreeChainComplex(n, std::move(levels), std::move(diffs));
}

}  // namespace

FreeChainComplex chain_complex(const LabeledComplex& lc) {
    return complex_from_faces(lc, lc.complex().faces());
}

FreeChainComplex taylor_complex(const MonomialIdeal& ideal, int cap) {
    const int r = ideal.gen_count();
    if (r > cap)
        throw CapExceeded("taylor complex needs 2^" + std::to_string(r) +
                          " basis elements, over the cap of r <= " + std::to_string(cap));
    std::vector<Face> facets;
    if (r > 0) {
        Face all(static_cast<std::size_t>(r));
        for (int v = 0; v < r; ++v) all[static_cast<std::size_t>(v)] = v;
        facets.push_back(std::move(all));
    }
    return chain_complex(LabeledComplex(SimplicialComplex::from_facets(r, facets), ideal));
}

}  // namespace monres
