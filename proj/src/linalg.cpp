#include "monres/linalg.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

namespace monres {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field Field::prime(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    return Field{Kind::prime, p};
}

int rank_over_rationals(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        a[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(cols));
        for (int c = 0; c < cols; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    }

    mpz_class prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        const auto& prow = a[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            for (int c = col + 1; c < cols; ++c) {
                mpz_class t = prow[static_cast<std::size_t>(col)] * row[static_cast<std::size_t>(c)]
                            - row[static_cast<std::size_t>(col)] * prow[static_cast<std::size_t>(c)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                row[static_cast<std::size_t>(c)] = std::move(t);
            }
            row[static_cast<std::size_t>(col)] = 0;
        }
        prev = prow[static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

int rank_mod_p(const IntMatrix& m, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        a[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(cols));
        for (int c = 0; c < cols; ++c) {
            std::int64_t v = m.at(r, c) % p;
            if (v < 0) v += p;
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        }
    }

    auto mulmod = [p](std::int64_t x, std::int64_t y) {
        return static_cast<std::int64_t>(
            static_cast<__int128>(x) * static_cast<__int128>(y) % p);
    };
    auto invmod = [p, &mulmod](std::int64_t x) {
        // Fermat: x^(p-2) mod p.
        std::int64_t result = 1, base = x, e = p - 2;
        while (e > 0) {
            if (e & 1) result = mulmod(result, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return result;
    };

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        auto& prow = a[static_cast<std::size_t>(rank)];
        const std::int64_t inv = invmod(prow[static_cast<std::size_t>(col)]);
        for (int c = col; c < cols; ++c)
            prow[static_cast<std::size_t>(c)] = mulmod(prow[static_cast<std::size_t>(c)], inv);
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            const std::int64_t f = row[static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = col; c < cols; ++c) {
                std::int64_t v = row[static_cast<std::size_t>(c)] - mulmod(f, prow[static_cast<std::size_t>(c)]);
                if (v < 0) v += p;
                row[static_cast<std::size_t>(c)] = v;
            }
        }
        ++rank;
    }
    return rank;
}

int rank(const IntMatrix& m, const Field& field) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return field.is_rationals() ? rank_over_rationals(m) : rank_mod_p(m, field.p);
}

}  // namespace monres
