#include "stellar/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stellar/errors.hpp"

namespace stellar {

Complex Complex::z2(std::vector<Simplex> gens) {
    std::sort(gens.begin(), gens.end());
    Complex out;
    for (std::size_t i = 0; i < gens.size();) {
        std::size_t j = i;
        while (j < gens.size() && gens[j] == gens[i]) ++j;
        if ((j - i) % 2 == 1) out.gens_.push_back(gens[i]);
        i = j;
    }
    return out;
}

Complex Complex::from_set(std::vector<Simplex> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Complex out;
    out.gens_ = std::move(gens);
    return out;
}

bool Complex::uniform() const {
    for (const auto& g : gens_)
        if (g.dim() != gens_.front().dim()) return false;
    return true;
}

int Complex::dim() const {
    if (empty()) throw input_error("dimension of the zero complex is undefined");
    int d = -1;
    for (const auto& g : gens_) d = std::max(d, g.dim());
    return d;
}

std::vector<int> Complex::vertices() const {
    std::set<int> vs;
    for (const auto& g : gens_) vs.insert(g.vertices().begin(), g.vertices().end());
    return {vs.begin(), vs.end()};
}

int Complex::fresh_label() const {
    int mx = -1;
    bool any = false;
    for (const auto& g : gens_)
        for (int v : g.vertices()) {
            mx = any ? std::max(mx, v) : v;
            any = true;
        }
    return any ? mx + 1 : 0;
}

bool Complex::has_generator(const Simplex& s) const {
    return std::binary_search(gens_.begin(), gens_.end(), s);
}

bool Complex::has_simplex(const Simplex& s) const {
    for (const auto& g : gens_)
        if (g.contains_all(s)) return true;
    return false;
}

Complex Complex::operator+(const Complex& other) const {
    Complex out;
    std::set_symmetric_difference(gens_.begin(), gens_.end(),
                                  other.gens_.begin(), other.gens_.end(),
                                  std::back_inserter(out.gens_));
    return out;
}

std::vector<Simplex> Complex::face_closure() const {
    std::set<Simplex> faces;
    for (const auto& g : gens_)
        for (auto& f : g.all_faces(false)) faces.insert(std::move(f));
    return {faces.begin(), faces.end()};
}

std::vector<long> Complex::face_vector() const {
    std::vector<long> counts;
    for (const auto& f : face_closure()) {
        if (static_cast<std::size_t>(f.dim()) >= counts.size())
            counts.resize(f.dim() + 1, 0);
        ++counts[f.dim()];
    }
    return counts;
}

std::string Complex::str() const {
    if (gens_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << '+';
        os << gens_[i].str();
    }
    return os.str();
}

Complex boundary(const Simplex& s) {
    return Complex::z2(s.facets());
}

Complex boundary(const Complex& k) {
    require(k.empty() || k.uniform(), "boundary of a non-uniform complex is undefined");
    std::vector<Simplex> faces;
    for (const auto& g : k.generators())
        for (auto& f : g.facets()) faces.push_back(std::move(f));
    return Complex::z2(std::move(faces));
}

bool is_closed(const Complex& k) {
    return boundary(k).empty();
}

Complex join(const Complex& k, const Complex& l) {
    if (k.empty() || l.empty()) return {};
    for (int v : k.vertices()) {
        Simplex probe{v};
        if (l.has_simplex(probe))
            throw input_error("join of complexes sharing vertex " + std::to_string(v));
    }
    std::vector<Simplex> gens;
    gens.reserve(k.size() * l.size());
    for (const auto& q : k.generators())
        for (const auto& p : l.generators()) gens.push_back(q.join(p));
    return Complex::z2(std::move(gens));
}

Complex link(const Simplex& a, const Complex& k) {
    std::vector<Simplex> bs;
    for (const auto& g : k.generators()) {
        if (!g.contains_all(a)) continue;
        Simplex b = g;
        for (int v : a.vertices()) b = b.without(v);
        bs.push_back(std::move(b));
    }
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    // keep only the maximal candidates (relevant when generators nest)
    std::vector<Simplex> maximal;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < bs.size() && !dominated; ++j)
            if (i != j && bs[j].contains_all(bs[i]) && bs[j] != bs[i]) dominated = true;
        if (!dominated) maximal.push_back(bs[i]);
    }
    return Complex::from_set(std::move(maximal));
}

StarRest star_rest(const Simplex& a, const Complex& k) {
    StarRest out;
    std::vector<Simplex> star, rest;
    for (const auto& g : k.generators())
        (g.contains_all(a) ? star : rest).push_back(g);
    out.star = Complex::from_set(std::move(star));
    out.rest = Complex::from_set(std::move(rest));
    return out;
}

long euler(const Complex& k) {
    long chi = 0;
    for (const auto& f : k.face_closure()) chi += (f.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

Complex relabel(const Complex& k, const std::map<int, int>& map) {
    auto image = [&map](int v) {
        auto it = map.find(v);
        return it == map.end() ? v : it->second;
    };
    std::set<int> seen;
    for (int v : k.vertices()) {
        int w = image(v);
        if (!seen.insert(w).second)
            throw input_error("relabeling collides at label " + std::to_string(w));
    }
    std::vector<Simplex> gens;
    gens.reserve(k.size());
    for (const auto& g : k.generators()) {
        std::vector<int> vs;
        vs.reserve(g.size());
        for (int v : g.vertices()) vs.push_back(image(v));
        gens.push_back(Simplex(std::move(vs)));
    }
    return Complex::z2(std::move(gens));
}

std::vector<Complex> connected_components(const Complex& k) {
    const auto& gens = k.generators();
    const std::size_t n = gens.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (comp[j] >= 0) continue;
                if (!gens[cur].intersect(gens[j]).empty() ||
                    (gens[cur].empty() && gens[j].empty())) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<Simplex>> parts(ncomp);
    for (std::size_t i = 0; i < n; ++i) parts[comp[i]].push_back(gens[i]);
    std::vector<Complex> out;
    out.reserve(ncomp);
    for (auto& p : parts) out.push_back(Complex::from_set(std::move(p)));
    return out;
}

Complex cone(int apex, const Complex& k) {
    return join(Complex::from_set({Simplex{apex}}), k);
}

} // namespace stellar
