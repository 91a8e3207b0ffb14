#include "stellar/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stellar/errors.hpp"
#include "stellar/parallel.hpp"

namespace stellar {
namespace {

struct Enumerator {
    const std::vector<Simplex>& facets;
    std::size_t limit;
    std::vector<std::pair<int, int>> matching; // facet index pairs
    std::vector<std::pair<int, int>> merges;   // vertex merges from bijections
    std::vector<RegularEquivalence> found;

    Enumerator(const std::vector<Simplex>& facets, std::size_t limit)
        : facets(facets), limit(limit) {}

    bool full() const { return limit > 0 && found.size() >= limit; }

    void recurse(std::vector<bool>& used) {
        if (full()) return;
        int first = -1;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (!used[i]) {
                first = static_cast<int>(i);
                break;
            }
        if (first < 0) {
            emit();
            return;
        }
        used[first] = true;
        for (std::size_t j = first + 1; j < used.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            pair_bijections(first, static_cast<int>(j), used);
            used[j] = false;
        }
        used[first] = false;
    }

    void pair_bijections(int gi, int pi, std::vector<bool>& used) {
        const auto& g = facets[gi].vertices();
        std::vector<int> image = facets[pi].vertices();
        std::sort(image.begin(), image.end());
        do {
            if (full()) return;
            std::size_t base = merges.size();
            for (std::size_t k = 0; k < g.size(); ++k)
                if (g[k] != image[k]) merges.emplace_back(g[k], image[k]);
            matching.emplace_back(gi, pi);
            recurse(used);
            matching.pop_back();
            merges.resize(base);
        } while (std::next_permutation(image.begin(), image.end()));
    }

    void emit() {
        RegularEquivalence e;
        for (auto [a, b] : merges) e.vertices.merge(a, b);
        // condition: no facet carries two equivalent vertices
        for (const auto& f : facets) {
            const auto& vs = f.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (e.vertices.same(vs[i], vs[j])) return;
        }
        for (auto [gi, pi] : matching) e.add_pair(facets[gi], facets[pi]);
        found.push_back(std::move(e));
    }
};

std::string equivalence_key(const RegularEquivalence& e, const std::vector<int>& universe) {
    std::ostringstream os;
    for (auto [a, b] : e.vertices.merges(universe)) os << a << '~' << b << ';';
    os << '|';
    for (const auto& [g, p] : e.facet_pairs) os << g.str() << p.str();
    return os.str();
}

std::vector<RegularEquivalence> dedupe(std::vector<RegularEquivalence> all,
                                       const std::vector<int>& universe, std::size_t limit) {
    std::set<std::string> seen;
    std::vector<RegularEquivalence> out;
    for (auto& e : all) {
        if (limit > 0 && out.size() >= limit) break;
        if (seen.insert(equivalence_key(e, universe)).second) out.push_back(std::move(e));
    }
    return out;
}

} // namespace

std::vector<RegularEquivalence> enumerate_regular_equivalences_serial(const Complex& sphere,
                                                                      std::size_t limit) {
    require(!sphere.empty() && sphere.uniform(), "enumeration needs a uniform nonempty complex");
    require(sphere.size() % 2 == 0, "a perfect facet pairing needs an even facet count");
    Enumerator en(sphere.generators(), 0);
    std::vector<bool> used(sphere.size(), false);
    en.recurse(used);
    return dedupe(std::move(en.found), sphere.vertices(), limit);
}

std::vector<RegularEquivalence> enumerate_regular_equivalences(const Complex& sphere,
                                                               const EnumOptions& opts) {
    require(!sphere.empty() && sphere.uniform(), "enumeration needs a uniform nonempty complex");
    require(sphere.size() % 2 == 0, "a perfect facet pairing needs an even facet count");
    if (!opts.parallel || !par::available() || sphere.size() < 4)
        return enumerate_regular_equivalences_serial(sphere, opts.limit);

    // split on the partner of facet 0; branch results are concatenated in
    // branch order, so the outcome matches the serial enumeration
    const auto& facets = sphere.generators();
    const int n = static_cast<int>(facets.size());
    std::vector<std::vector<RegularEquivalence>> branches(n);
#pragma omp parallel for schedule(dynamic)
    for (int j = 1; j < n; ++j) {
        Enumerator en(facets, 0);
        std::vector<bool> used(facets.size(), false);
        used[0] = true;
        used[j] = true;
        en.pair_bijections(0, j, used);
        branches[j] = std::move(en.found);
    }
    std::vector<RegularEquivalence> all;
    for (auto& b : branches)
        for (auto& e : b) all.push_back(std::move(e));
    return dedupe(std::move(all), sphere.vertices(), opts.limit);
}

} // namespace stellar
