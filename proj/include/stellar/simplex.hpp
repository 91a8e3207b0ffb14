#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace stellar {

/// An abstract simplex: a strictly increasing sequence of integer vertex
/// labels. The empty simplex (no vertices, dimension -1) is a legal value;
/// it is the identity for the join and the boundary of a vertex.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<int> verts);
    Simplex(std::initializer_list<int> verts);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    bool empty() const { return verts_.empty(); }
    std::size_t size() const { return verts_.size(); }
    const std::vector<int>& vertices() const { return verts_; }
    int operator[](std::size_t i) const { return verts_[i]; }

    bool contains(int v) const;
    /// s is a (not necessarily proper) face of this simplex.
    bool contains_all(const Simplex& s) const;
    bool disjoint(const Simplex& s) const;

    /// Disjoint union; throws input_error naming the shared label otherwise.
    Simplex join(const Simplex& other) const;
    Simplex without(int v) const;
    Simplex with(int v) const;
    Simplex intersect(const Simplex& other) const;

    /// Codimension-1 faces. For a vertex this is {empty}; for the empty
    /// simplex the list is empty.
    std::vector<Simplex> facets() const;
    /// All faces of every dimension, optionally including the empty simplex.
    std::vector<Simplex> all_faces(bool include_empty = false) const;
    /// Faces of one fixed dimension d (d = -1 yields the empty simplex).
    std::vector<Simplex> faces_of_dim(int d) const;

    std::string str() const;

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<int> verts_;
};

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 1469598103934665603ULL);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        const auto& v = s.vertices();
        return static_cast<std::size_t>(fnv1a(v.data(), v.size() * sizeof(int)));
    }
};

} // namespace stellar
