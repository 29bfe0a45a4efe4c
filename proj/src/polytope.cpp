#include "monres/polytope.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "monres/errors.hpp"
#include "monres/face.hpp"
#include "monres/scarf.hpp"

namespace monres {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

namespace {

/// Gale's evenness: an n-subset of {0..r-1} spans a facet of C_n(r) iff
/// every maximal run of consecutive members avoiding both endpoints has
/// even length.
bool gale_even(const Face& s, int r) {
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j + 1 < s.size() && s[j + 1] == s[j] + 1) ++j;
        const bool interior = s[i] != 0 && s[j] != r - 1;
        if (interior && (j - i + 1) % 2 != 0) return false;
        i = j + 1;
    }
    return true;
}

}  // namespace

std::vector<long> cyclic_face_numbers(int n, int r) {
    if (n < 2) throw std::invalid_argument("cyclic polytope needs dimension >= 2");
    if (r <= n) throw std::invalid_argument("cyclic polytope needs more vertices than dimension");
    if (r > 24) throw CapExceeded("cyclic polytope enumeration capped at 24 vertices");

    std::unordered_set<Face, FaceHash> faces;
    Face subset(static_cast<std::size_t>(n));
    auto choose = [&](auto&& self, int pos, int next) -> void {
        if (pos == n) {
            if (!gale_even(subset, r)) return;
            const std::uint32_t k = static_cast<std::uint32_t>(n);
            for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
                Face f;
                for (std::uint32_t b = 0; b < k; ++b)
                    if (mask & (1u << b)) f.push_back(subset[b]);
                faces.insert(std::move(f));
            }
            return;
        }
        for (int v = next; v < r; ++v) {
            subset[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v + 1);
        }
    };
    choose(choose, 0, 0);

    std::vector<long> c(static_cast<std::size_t>(n), 0);
    for (const Face& f : faces) ++c[f.size() - 1];
    return c;
}

UpperBoundReport check_upper_bound(const MonomialIdeal& ideal) {
    UpperBoundReport report;
    report.n = ideal.vars();
    report.r = ideal.gen_count();

    const MonomialIdeal* target = &ideal;
    DeformationMap map{ideal, ideal, identity_correspondence(report.r)};
    if (!is_generic(ideal)) {
        map = deform(ideal);
        target = &map.deformed;
        report.deformed = true;
    }
    const ScarfComplex scarf = scarf_complex(*target);
    report.face_counts.assign(static_cast<std::size_t>(report.n), 0);
    for (const Face& f : scarf.complex().faces()) {
        const std::size_t d = f.size() - 1;
        if (d < report.face_counts.size()) ++report.face_counts[d];
    }

    std::vector<long> bounds;
    if (report.r >= report.n + 1) {
        bounds = cyclic_face_numbers(report.n, report.r);
    } else {
        report.cyclic_bounds = false;
        for (int i = 0; i < report.n; ++i) bounds.push_back(binomial(report.r, i + 1));
    }
    for (int i = 1; i <= report.n - 1; ++i) {
        const bool top = (i == report.n - 1);
        long bound = bounds[static_cast<std::size_t>(i)];
        if (top && report.cyclic_bounds) bound -= 1;
        const long faces = report.face_counts[static_cast<std::size_t>(i)];
        const bool ok = faces <= bound;
        report.checks.push_back(BoundCheck{i, faces, bound, ok});
        if (!ok) report.all_ok = false;
    }
    return report;
}

}  // namespace monres
