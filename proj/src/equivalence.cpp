#include "stellar/equivalence.hpp"

#include <algorithm>
#include <set>

#include "stellar/errors.hpp"

namespace stellar {

void VertexPartition::merge(int a, int b) {
    int ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    if (ra > rb) std::swap(ra, rb); // keep the least label as representative
    parent_[rb] = ra;
}

int VertexPartition::rep(int v) const {
    auto it = parent_.find(v);
    if (it == parent_.end()) return v;
    int r = rep(it->second);
    parent_[v] = r;
    return r;
}

bool VertexPartition::trivial() const {
    std::vector<int> keys;
    keys.reserve(parent_.size());
    for (const auto& [v, p] : parent_) keys.push_back(v);
    for (int v : keys)
        if (rep(v) != v) return false;
    return true;
}

std::vector<std::vector<int>> VertexPartition::classes(const std::vector<int>& universe) const {
    std::map<int, std::vector<int>> by_rep;
    for (int v : universe) by_rep[rep(v)].push_back(v);
    std::vector<std::vector<int>> out;
    out.reserve(by_rep.size());
    for (auto& [r, members] : by_rep) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::pair<int, int>> VertexPartition::merges(const std::vector<int>& universe) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& cls : classes(universe))
        for (std::size_t i = 1; i < cls.size(); ++i) out.emplace_back(cls[0], cls[i]);
    return out;
}

void RegularEquivalence::add_pair(const Simplex& g, const Simplex& p) {
    require(g != p, "a facet cannot be paired with itself");
    auto pr = g < p ? std::make_pair(g, p) : std::make_pair(p, g);
    auto it = std::lower_bound(facet_pairs.begin(), facet_pairs.end(), pr);
    if (it != facet_pairs.end() && *it == pr) return;
    facet_pairs.insert(it, std::move(pr));
}

std::optional<Simplex> RegularEquivalence::partner(const Simplex& g) const {
    for (const auto& [a, b] : facet_pairs) {
        if (a == g) return b;
        if (b == g) return a;
    }
    return std::nullopt;
}

std::map<int, int> pair_vertex_map(const Simplex& g, const Simplex& p, const VertexPartition& vp) {
    require(g.size() == p.size(),
            "paired facets " + g.str() + " and " + p.str() + " have different dimension");
    std::map<int, int> map;
    for (int v : g.vertices()) {
        int image = 0, count = 0;
        for (int u : p.vertices())
            if (u == v || vp.same(u, v)) {
                image = u;
                ++count;
            }
        require(count == 1, "vertex " + std::to_string(v) + " of " + g.str() + " has " +
                                std::to_string(count) + " counterparts in " + p.str());
        map[v] = image;
    }
    std::set<int> images;
    for (auto [v, u] : map) images.insert(u);
    require(images.size() == g.size(), "vertex correspondence " + g.str() + " -> " + p.str() +
                                           " is not a bijection");
    return map;
}

std::vector<std::string> validate_regular(const Complex& s, const RegularEquivalence& e) {
    std::vector<std::string> bad;
    for (const auto& g : s.generators()) {
        const auto& vs = g.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (e.vertices.same(vs[i], vs[j]))
                    bad.push_back("generator " + g.str() + " contains equivalent vertices " +
                                  std::to_string(vs[i]) + " and " + std::to_string(vs[j]));
    }
    std::map<Simplex, int> paired_count;
    for (const auto& [g, p] : e.facet_pairs) {
        ++paired_count[g];
        ++paired_count[p];
        if (!s.has_generator(g)) bad.push_back("paired facet " + g.str() + " is not a generator");
        if (!s.has_generator(p)) bad.push_back("paired facet " + p.str() + " is not a generator");
        if (s.has_generator(g) && s.has_generator(p)) {
            try {
                pair_vertex_map(g, p, e.vertices);
                pair_vertex_map(p, g, e.vertices);
            } catch (const input_error& err) {
                bad.emplace_back(err.what());
            }
        }
    }
    for (const auto& [g, n] : paired_count)
        if (n > 1) bad.push_back("facet " + g.str() + " appears in " + std::to_string(n) + " pairs");
    return bad;
}

SimplexClasses induced_equivalence(const Complex& s, const RegularEquivalence& e, int d) {
    require(!s.empty(), "induced equivalence of the zero complex");
    require(d >= 0 && d <= s.dim(),
            "induced equivalence dimension " + std::to_string(d) + " out of range");

    if (d == 0) {
        SimplexClasses out;
        for (const auto& cls : e.vertices.classes(s.vertices())) {
            std::vector<Simplex> members;
            members.reserve(cls.size());
            for (int v : cls) members.push_back(Simplex{v});
            out.push_back(std::move(members));
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return out;
    }
    return correspondence_classes(s, e, d);
}

SimplexClasses correspondence_classes(const Complex& s, const RegularEquivalence& e, int d) {
    require(!s.empty(), "correspondence classes of the zero complex");
    require(d >= 0 && d <= s.dim(),
            "correspondence class dimension " + std::to_string(d) + " out of range");

    // collect the d-faces and close the pairwise correspondences
    std::vector<Simplex> faces;
    for (const auto& f : s.face_closure())
        if (f.dim() == d) faces.push_back(f);
    std::map<Simplex, int> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = static_cast<int>(i);

    std::vector<int> uf(faces.size());
    for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    auto find = [&uf](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto unite = [&](int a, int b) { uf[std::max(find(a), find(b))] = std::min(find(a), find(b)); };

    for (const auto& [g, p] : e.facet_pairs) {
        auto vmap = pair_vertex_map(g, p, e.vertices);
        for (const auto& sigma : g.faces_of_dim(d)) {
            std::vector<int> image;
            image.reserve(sigma.size());
            for (int v : sigma.vertices()) image.push_back(vmap.at(v));
            Simplex tau(std::move(image));
            unite(index.at(sigma), index.at(tau));
        }
    }

    std::map<int, std::vector<Simplex>> by_rep;
    for (std::size_t i = 0; i < faces.size(); ++i)
        by_rep[find(static_cast<int>(i))].push_back(faces[i]);
    SimplexClasses out;
    out.reserve(by_rep.size());
    for (auto& [r, members] : by_rep) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::vector<long> QuotientCells::h() const {
    std::vector<long> out;
    out.reserve(classes.size());
    for (const auto& cls : classes) out.push_back(static_cast<long>(cls.size()));
    return out;
}

QuotientCells quotient_cells(const Complex& s, const RegularEquivalence& e) {
    QuotientCells out;
    out.dim = s.dim();
    out.classes.resize(out.dim + 1);
    out.class_of.resize(out.dim + 1);
    for (int d = 0; d <= out.dim; ++d) {
        out.classes[d] = induced_equivalence(s, e, d);
        for (std::size_t ci = 0; ci < out.classes[d].size(); ++ci)
            for (const auto& member : out.classes[d][ci])
                out.class_of[d][member] = static_cast<int>(ci);
    }
    return out;
}

std::optional<Complex> quotient_as_complex(const Complex& s, const RegularEquivalence& e) {
    QuotientCells cells = quotient_cells(s, e);
    std::map<int, int> to_rep;
    for (int v : s.vertices()) to_rep[v] = e.vertices.rep(v);
    std::vector<Simplex> gens;
    for (const auto& g : s.generators()) {
        std::vector<int> vs;
        vs.reserve(g.size());
        for (int v : g.vertices()) vs.push_back(to_rep.at(v));
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return std::nullopt;
        gens.push_back(Simplex(std::move(vs)));
    }
    Complex q = Complex::from_set(std::move(gens));
    // faithful only if class counts survive the renaming in every dimension
    std::vector<long> qcounts = q.face_vector();
    std::vector<long> h = cells.h();
    if (qcounts.size() != h.size()) return std::nullopt;
    for (std::size_t d = 0; d < h.size(); ++d)
        if (qcounts[d] != h[d]) return std::nullopt;
    return q;
}

} // namespace stellar
