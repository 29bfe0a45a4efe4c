#include "monres/betti.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "monres/errors.hpp"

namespace monres {

long BettiTable::max_rank_per_degree() const {
    long m = 0;
    for (const auto& [degree, ranks] : by_degree)
        for (long v : ranks) m = std::max(m, v);
    return m;
}

BettiTable betti_oracle(const MonomialIdeal& ideal, const Field& field, int cap) {
    const int r = ideal.gen_count();
    if (r > cap)
        throw CapExceeded("betti oracle enumerates 2^" + std::to_string(r) +
                          " subsets, over the cap of r <= " + std::to_string(cap));

    const std::uint64_t total = static_cast<std::uint64_t>(1) << r;
    std::vector<Monomial> lcms(total);
    lcms[0] = Monomial::one(ideal.vars());
    for (std::uint64_t mask = 1; mask < total; ++mask)
        lcms[mask] = lcms[mask & (mask - 1)].lcm(ideal.gen(std::countr_zero(mask)));

    std::map<Monomial, std::vector<std::uint64_t>> groups;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        groups[lcms[mask]].push_back(mask);

    BettiTable table;
    table.totals.assign(static_cast<std::size_t>(r) + 1, 0);
    for (const auto& [degree, masks] : groups) {
        // The strand of the reduced Taylor complex in this multidegree:
        // C_j is spanned by the member subsets of size j, and the
        // differential keeps only deletions staying inside the group.
        std::map<int, std::vector<std::uint64_t>> by_size;
        for (std::uint64_t mask : masks) by_size[std::popcount(mask)].push_back(mask);
        std::unordered_map<std::uint64_t, int> index;
        for (auto& [size, list] : by_size) {
            std::ranges::sort(list);
            for (std::size_t i = 0; i < list.size(); ++i)
                index[list[i]] = static_cast<int>(i);
        }
        auto strand_rank = [&](int size) -> int {  // rank of d: C_size -> C_{size-1}
            const auto src = by_size.find(size);
            const auto dst = by_size.find(size - 1);
            if (src == by_size.end() || dst == by_size.end()) return 0;
            IntMatrix m(static_cast<int>(dst->second.size()),
                        static_cast<int>(src->second.size()));
            bool any = false;
            for (std::size_t col = 0; col < src->second.size(); ++col) {
                const std::uint64_t mask = src->second[col];
                int sign = 1;
                for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
                    const std::uint64_t sub = mask & ~(bits & -bits);
                    if (lcms[sub] == degree) {
                        m.at(index.at(sub), static_cast<int>(col)) = sign;
                        any = true;
                    }
                    sign = -sign;
                }
            }
            return any ? rank(m, field) : 0;
        };
        std::map<int, int> ranks;
        for (const auto& [size, list] : by_size) ranks[size] = strand_rank(size);
        std::vector<long> per_degree(static_cast<std::size_t>(r) + 1, 0);
        bool nonzero = false;
        for (const auto& [size, list] : by_size) {
            const int above = ranks.count(size + 1) ? ranks.at(size + 1) : 0;
            const long h = static_cast<long>(list.size()) - ranks.at(size) - above;
            if (h != 0) {
                per_degree[static_cast<std::size_t>(size)] = h;
                table.totals[static_cast<std::size_t>(size)] += h;
                nonzero = true;
            }
        }
        if (nonzero) table.by_degree.emplace_back(degree, std::move(per_degree));
    }
    while (table.totals.size() > 1 && table.totals.back() == 0) table.totals.pop_back();
    return table;
}

}  // namespace monres
