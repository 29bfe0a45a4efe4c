#include "monres/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace monres {

namespace {

HilbertNumerator combine(std::map<Monomial, long> acc) {
    HilbertNumerator out;
    for (auto& [mono, coeff] : acc)
        if (coeff != 0)
            out.terms.push_back(HilbertNumerator::Term{static_cast<int>(coeff), mono});
    return out;
}

}  // namespace

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal) {
    if (!is_generic(ideal))
        throw std::invalid_argument(
            "hilbert numerator from the Scarf complex requires a generic ideal; "
            "deform first (like terms are then combined)");
    const ScarfComplex scarf = scarf_complex(ideal);
    std::map<Monomial, long> acc;
    acc[Monomial::one(ideal.vars())] += 1;  // empty face
    for (const Face& f : scarf.complex().faces()) {
        const Monomial m = scarf.base.label(f);
        if (acc.contains(m))
            throw std::logic_error("hilbert numerator of a generic ideal has repeated degrees");
        acc[m] = (f.size() % 2 == 0) ? 1 : -1;
    }
    return combine(std::move(acc));
}

HilbertNumerator hilbert_numerator(const Resolution& res) {
    std::map<Monomial, long> acc;
    for (int j = 0; j <= res.complex.length(); ++j) {
        const long sign = (j % 2 == 0) ? 1 : -1;
        for (const Monomial& degree : res.complex.level(j).degrees) acc[degree] += sign;
    }
    return combine(std::move(acc));
}

Monomial default_hilbert_box(const MonomialIdeal& ideal) {
    std::vector<Exp> bound(static_cast<std::size_t>(ideal.vars()), 2);
    for (int s = 0; s < ideal.vars(); ++s) {
        Exp mx = 0;
        for (int i = 0; i < ideal.gen_count(); ++i) mx = std::max(mx, ideal.exponent(i, s));
        bound[static_cast<std::size_t>(s)] = checked_add(mx, 2);
    }
    return Monomial(std::move(bound));
}

std::optional<Monomial> hilbert_series_mismatch(const HilbertNumerator& numerator,
                                                const MonomialIdeal& ideal,
                                                const Monomial& box) {
    const int n = ideal.vars();
    if (box.vars() != n) throw std::invalid_argument("box has wrong variable count");

    std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
    std::size_t volume = 1;
    for (int s = n - 1; s >= 0; --s) {
        stride[static_cast<std::size_t>(s)] = volume;
        volume *= static_cast<std::size_t>(box[s] + 1);
    }
    std::vector<long> coeff(volume, 0);
    for (const auto& term : numerator.terms) {
        std::size_t idx = 0;
        bool inside = true;
        for (int s = 0; s < n && inside; ++s) {
            if (term.mono[s] > box[s]) inside = false;
            else idx += static_cast<std::size_t>(term.mono[s]) * stride[static_cast<std::size_t>(s)];
        }
        if (inside) coeff[idx] += term.sign;
    }
    // Multiply by 1/(1-x_s) = cumulative sums along axis s.
    for (int s = 0; s < n; ++s) {
        const std::size_t st = stride[static_cast<std::size_t>(s)];
        const std::size_t extent = static_cast<std::size_t>(box[s] + 1);
        for (std::size_t base = 0; base < volume; ++base) {
            const std::size_t along = (base / st) % extent;
            if (along == 0) continue;
            coeff[base] += coeff[base - st];
        }
    }
    // The truncated series must be the indicator of the standard monomials.
    std::vector<Exp> e(static_cast<std::size_t>(n), 0);
    for (std::size_t idx = 0; idx < volume; ++idx) {
        std::size_t rest = idx;
        for (int s = 0; s < n; ++s) {
            e[static_cast<std::size_t>(s)] =
                static_cast<Exp>((rest / stride[static_cast<std::size_t>(s)]));
            rest %= stride[static_cast<std::size_t>(s)];
        }
        Monomial m{std::vector<Exp>(e)};
        const long want = contains(ideal, m) ? 0 : 1;
        if (coeff[idx] != want) return m;
    }
    return std::nullopt;
}

}  // namespace monres
