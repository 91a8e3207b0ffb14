#include "stellar/canonical.hpp"

#include <algorithm>
#include <sstream>

#include "stellar/errors.hpp"

namespace stellar {
namespace {

// Individualization-refinement canonical labeling. Colors are content
// hashes, so color order is invariant under relabeling; backtracking over
// the first non-singleton color class makes the minimum leaf canonical.
// Worst case is exponential, which is acceptable at the scale this
// library targets (a few hundred facets).
struct Canonizer {
    const std::vector<Simplex>& gens;
    std::vector<int> verts;                  // sorted labels
    std::map<int, int> index_of;             // label -> index
    std::vector<std::vector<int>> membership; // vertex index -> generator ids

    std::string best_key;
    std::vector<int> best_order; // canonical rank -> vertex index
    bool has_best = false;
    long leaves = 0;

    explicit Canonizer(const Complex& k) : gens(k.generators()) {
        for (int v : k.vertices()) {
            index_of[v] = static_cast<int>(verts.size());
            verts.push_back(v);
        }
        membership.resize(verts.size());
        for (std::size_t gi = 0; gi < gens.size(); ++gi)
            for (int v : gens[gi].vertices())
                membership[index_of[v]].push_back(static_cast<int>(gi));
    }

    std::vector<std::uint64_t> refine(std::vector<std::uint64_t> colors) const {
        const std::size_t n = verts.size();
        for (std::size_t round = 0; round <= n; ++round) {
            std::vector<std::uint64_t> next(n);
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::uint64_t> sigs;
                sigs.reserve(membership[i].size());
                for (int gi : membership[i]) {
                    std::vector<std::uint64_t> gc;
                    gc.reserve(gens[gi].size());
                    for (int v : gens[gi].vertices())
                        gc.push_back(colors[index_of.at(v)]);
                    std::sort(gc.begin(), gc.end());
                    gc.push_back(static_cast<std::uint64_t>(gens[gi].dim()) + 3);
                    sigs.push_back(fnv1a(gc.data(), gc.size() * sizeof(std::uint64_t)));
                }
                std::sort(sigs.begin(), sigs.end());
                sigs.push_back(colors[i]);
                next[i] = fnv1a(sigs.data(), sigs.size() * sizeof(std::uint64_t));
            }
            if (count_classes(next) == count_classes(colors) && round > 0) {
                colors = std::move(next);
                break;
            }
            colors = std::move(next);
        }
        return colors;
    }

    static std::size_t count_classes(const std::vector<std::uint64_t>& colors) {
        auto sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        return std::unique(sorted.begin(), sorted.end()) - sorted.begin();
    }

    void search(const std::vector<std::uint64_t>& colors) {
        const std::size_t n = verts.size();
        // pick the smallest-color class with more than one vertex
        std::map<std::uint64_t, std::vector<int>> classes;
        for (std::size_t i = 0; i < n; ++i) classes[colors[i]].push_back(static_cast<int>(i));
        const std::vector<int>* target = nullptr;
        for (const auto& [c, members] : classes)
            if (members.size() > 1) {
                target = &members;
                break;
            }
        if (target == nullptr) {
            leaf(colors, classes);
            return;
        }
        ensure(++leaves < 2000000, "canonical labeling search exploded");
        for (int i : *target) {
            auto branched = colors;
            branched[i] = fnv1a(&branched[i], sizeof(branched[i]), 77);
            search(refine(std::move(branched)));
        }
    }

    void leaf(const std::vector<std::uint64_t>& colors,
              const std::map<std::uint64_t, std::vector<int>>& classes) {
        std::vector<int> order; // canonical rank -> vertex index
        order.reserve(verts.size());
        for (const auto& [c, members] : classes) order.push_back(members.front());
        std::vector<int> rank(verts.size());
        for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);

        std::vector<std::vector<int>> rels;
        rels.reserve(gens.size());
        for (const auto& g : gens) {
            std::vector<int> rg;
            rg.reserve(g.size());
            for (int v : g.vertices()) rg.push_back(rank[index_of.at(v)]);
            std::sort(rg.begin(), rg.end());
            rels.push_back(std::move(rg));
        }
        std::sort(rels.begin(), rels.end());
        std::ostringstream os;
        for (const auto& rg : rels) {
            for (std::size_t i = 0; i < rg.size(); ++i) os << (i ? " " : "") << rg[i];
            os << ';';
        }
        std::string key = os.str();
        if (!has_best || key < best_key) {
            best_key = std::move(key);
            best_order = std::move(order);
            has_best = true;
        }
        (void)colors;
    }
};

} // namespace

CanonicalForm canonical_form(const Complex& k) {
    CanonicalForm out;
    bool has_empty_gen = !k.empty() && k.generators().front().empty();
    if (k.empty() || (k.size() == 1 && has_empty_gen)) {
        out.key = k.empty() ? "zero" : "empty-simplex";
        return out;
    }
    Canonizer cz(k);
    cz.search(cz.refine(std::vector<std::uint64_t>(cz.verts.size(), 1)));
    ensure(cz.has_best, "canonical labeling produced no leaf");
    out.key = std::move(cz.best_key);
    if (has_empty_gen) out.key = "~;" + out.key;
    for (std::size_t r = 0; r < cz.best_order.size(); ++r)
        out.to_canonical[cz.verts[cz.best_order[r]]] = static_cast<int>(r);
    return out;
}

} // namespace stellar
