#pragma once

#include <cstdint>
#include <vector>

namespace monres {

/// A face of a simplicial complex on generator indices: a strictly
/// increasing list of 0-based vertex indices.  The empty vector is the
/// empty face.  All I/O converts to 1-based indices.
using Face = std::vector<int>;

bool face_contains(const Face& f, int v);
Face face_union(const Face& a, const Face& b);
Face face_minus(const Face& f, int v);
Face face_plus(const Face& f, int v);
bool face_subset(const Face& a, const Face& b);
int face_intersection_size(const Face& a, const Face& b);

/// Orders faces by dimension first, then lexicographically.  This is the
/// canonical basis order used everywhere faces are listed.
struct FaceOrder {
    bool operator()(const Face& a, const Face& b) const;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const;
};

}  // namespace monres
