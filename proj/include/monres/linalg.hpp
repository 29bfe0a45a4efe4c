#pragma once

#include <cstdint>
#include <vector>

namespace monres {

/// Coefficient field for homology: the rationals or a prime field.
struct Field {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::int64_t p = 0;

    static Field rationals() { return Field{}; }
    static Field prime(std::int64_t p);

    bool is_rationals() const { return kind == Kind::rationals; }
    bool operator==(const Field&) const = default;
};

bool is_prime(std::int64_t p);

/// Dense integer matrix in row-major order.  Boundary matrices have
/// entries in {-1, 0, 1}; rank computations are exact.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& at(int r, int c) {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
    }
    std::int64_t at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
    }

private:
    int rows_, cols_;
    std::vector<std::int64_t> data_;
};

/// Rank over the rationals, by fraction-free (Bareiss) elimination on
/// arbitrary-precision integers.
int rank_over_rationals(const IntMatrix& m);

/// Rank over GF(p).
int rank_mod_p(const IntMatrix& m, std::int64_t p);

int rank(const IntMatrix& m, const Field& field);

}  // namespace monres
