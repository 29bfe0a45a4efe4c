#include "monres/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace monres {

bool face_contains(const Face& f, int v) {
    return std::ranges::binary_search(f, v);
}

Face face_union(const Face& a, const Face& b) {
    Face r;
    r.reserve(a.size() + b.size());
    std::ranges::set_union(a, b, std::back_inserter(r));
    return r;
}

Face face_minus(const Face& f, int v) {
    Face r;
    r.reserve(f.size() - 1);
    for (int w : f)
        if (w != v) r.push_back(w);
    return r;
}

Face face_plus(const Face& f, int v) {
    Face r = f;
    r.insert(std::ranges::upper_bound(r, v), v);
    return r;
}

bool face_subset(const Face& a, const Face& b) {
    return std::ranges::includes(b, a);
}

int face_intersection_size(const Face& a, const Face& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

bool FaceOrder::operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::size_t FaceHash::operator()(const Face& f) const {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (int v : f)
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

SimplicialComplex SimplicialComplex::from_faces(int vertex_count, std::vector<Face> faces) {
    SimplicialComplex c(vertex_count, std::move(faces));
    for (const Face& f : c.faces_) {
        if (f.size() >= 2) {
            for (int v : f)
                if (!c.face_set_.contains(face_minus(f, v)))
                    throw std::invalid_argument("face set is not downward closed");
        }
    }
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, const std::vector<Face>& facets) {
    std::unordered_set<Face, FaceHash> all;
    // Close each facet downward by enumerating vertex subsets.
    for (const Face& facet : facets) {
        const std::size_t k = facet.size();
        if (k > 30) throw std::invalid_argument("facet too large");
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Face f;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) f.push_back(facet[b]);
            all.insert(std::move(f));
        }
    }
    std::vector<Face> faces(all.begin(), all.end());
    return SimplicialComplex(vertex_count, std::move(faces));
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces)) {
    for (Face& f : faces_) {
        if (!std::ranges::is_sorted(f) || std::ranges::adjacent_find(f) != f.end())
            throw std::invalid_argument("face must be a strictly increasing index list");
        if (f.empty())
            throw std::invalid_argument("the empty face is implicit and must not be listed");
        if (f.front() < 0 || f.back() >= vertex_count_)
            throw std::invalid_argument("face vertex out of range");
    }
    std::ranges::sort(faces_, FaceOrder{});
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    face_set_.insert(faces_.begin(), faces_.end());
}

bool SimplicialComplex::has_face(const Face& f) const {
    return face_set_.contains(f);
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const Face& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<long> SimplicialComplex::f_vector() const {
    std::vector<long> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (const Face& face : faces_) ++f[face.size() - 1];
    return f;
}

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (const Face& f : faces_) {
        bool maximal = true;
        for (int v = 0; v < vertex_count_ && maximal; ++v)
            if (!face_contains(f, v) && face_set_.contains(face_plus(f, v))) maximal = false;
        if (maximal) out.push_back(f);
    }
    return out;
}

bool SimplicialComplex::is_pure(int expected_dim) const {
    for (const Face& f : facets())
        if (static_cast<int>(f.size()) - 1 != expected_dim) return false;
    return true;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
    std::vector<Face> out;
    for (const Face& f : faces_)
        if (static_cast<int>(f.size()) == d + 1) out.push_back(f);
    return out;
}

LabeledComplex::LabeledComplex(SimplicialComplex complex, MonomialIdeal ideal)
    : complex_(std::move(complex)), ideal_(std::move(ideal)) {
    if (complex_.vertex_count() != ideal_.gen_count())
        throw std::invalid_argument("labeled complex: vertex count differs from generator count");
}

Monomial LabeledComplex::label(const Face& f) const {
    if (f.empty()) return Monomial::one(ideal_.vars());
    return lcm_of(ideal_, f);
}

SimplicialComplex restrict(const LabeledComplex& lc, const Monomial& m) {
    // A face's label (an lcm of vertex labels) divides m exactly when every
    // vertex label does, so the restriction is the induced subcomplex on
    // the vertices whose generator divides m.
    const MonomialIdeal& ideal = lc.ideal();
    std::vector<bool> in(static_cast<std::size_t>(ideal.gen_count()), false);
    for (int i = 0; i < ideal.gen_count(); ++i)
        in[static_cast<std::size_t>(i)] = ideal.gen(i).divides(m);
    std::vector<Face> faces;
    for (const Face& f : lc.complex().faces()) {
        bool keep = true;
        for (int v : f)
            if (!in[static_cast<std::size_t>(v)]) { keep = false; break; }
        if (keep) faces.push_back(f);
    }
    return SimplicialComplex::from_faces(lc.complex().vertex_count(), std::move(faces));
}

}  // namespace monres
