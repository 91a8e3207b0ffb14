#include "stellar/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "stellar/errors.hpp"

namespace stellar {

Simplex::Simplex(std::vector<int> verts) : verts_(std::move(verts)) {
    std::sort(verts_.begin(), verts_.end());
    auto dup = std::adjacent_find(verts_.begin(), verts_.end());
    if (dup != verts_.end())
        throw input_error("duplicate vertex " + std::to_string(*dup) + " in simplex");
}

Simplex::Simplex(std::initializer_list<int> verts) : Simplex(std::vector<int>(verts)) {}

bool Simplex::contains(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::contains_all(const Simplex& s) const {
    return std::includes(verts_.begin(), verts_.end(), s.verts_.begin(), s.verts_.end());
}

bool Simplex::disjoint(const Simplex& s) const {
    return intersect(s).empty();
}

Simplex Simplex::join(const Simplex& other) const {
    std::vector<int> merged;
    merged.reserve(verts_.size() + other.verts_.size());
    std::merge(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
               std::back_inserter(merged));
    auto dup = std::adjacent_find(merged.begin(), merged.end());
    if (dup != merged.end())
        throw input_error("join of simplexes sharing vertex " + std::to_string(*dup));
    Simplex out;
    out.verts_ = std::move(merged);
    return out;
}

Simplex Simplex::without(int v) const {
    Simplex out;
    out.verts_.reserve(verts_.size());
    for (int w : verts_)
        if (w != v) out.verts_.push_back(w);
    return out;
}

Simplex Simplex::with(int v) const {
    if (contains(v)) throw input_error("simplex already contains vertex " + std::to_string(v));
    Simplex out = *this;
    out.verts_.insert(std::upper_bound(out.verts_.begin(), out.verts_.end(), v), v);
    return out;
}

Simplex Simplex::intersect(const Simplex& other) const {
    Simplex out;
    std::set_intersection(verts_.begin(), verts_.end(),
                          other.verts_.begin(), other.verts_.end(),
                          std::back_inserter(out.verts_));
    return out;
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    out.reserve(verts_.size());
    for (int v : verts_) out.push_back(without(v));
    return out;
}

std::vector<Simplex> Simplex::all_faces(bool include_empty) const {
    std::vector<Simplex> out;
    const std::size_t n = verts_.size();
    for (std::size_t mask = include_empty ? 0 : 1; mask < (std::size_t{1} << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) f.verts_.push_back(verts_[i]);
        out.push_back(std::move(f));
    }
    if (include_empty && n == 0) out.push_back(Simplex());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Simplex> Simplex::faces_of_dim(int d) const {
    std::vector<Simplex> out;
    if (d < -1 || d > dim()) return out;
    for (auto& f : all_faces(d == -1))
        if (f.dim() == d) out.push_back(f);
    return out;
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ' ';
        os << verts_[i];
    }
    os << ')';
    return os.str();
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace stellar
