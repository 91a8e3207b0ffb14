#include "stellar/prism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stellar/errors.hpp"

namespace stellar {

std::vector<std::pair<int, int>> prism_copy_labels(const Complex& k) {
    std::vector<std::pair<int, int>> out;
    const int fresh = k.fresh_label();
    int rank = 0;
    for (int v : k.vertices()) out.emplace_back(v, fresh + rank++);
    return out;
}

Complex prism(const Complex& k) {
    require(!k.empty() && k.uniform(), "prism needs a uniform nonempty complex");
    require(k.dim() >= 0, "prism needs vertices");
    std::map<int, int> copy;
    for (auto [v, j] : prism_copy_labels(k)) copy[v] = j;
    std::vector<Simplex> gens;
    for (const auto& g : k.generators()) {
        const auto& vs = g.vertices();
        const std::size_t r = vs.size();
        for (std::size_t cut = 1; cut <= r; ++cut) {
            std::vector<int> stair;
            for (std::size_t i = 0; i < cut; ++i) stair.push_back(vs[i]);
            for (std::size_t i = cut - 1; i < r; ++i) stair.push_back(copy.at(vs[i]));
            gens.push_back(Simplex(std::move(stair)));
        }
    }
    return Complex::from_set(std::move(gens));
}

// ---------------------------------------------------------------------------
// Greedy collapse on the class-level face poset. The trivial equivalence
// reduces to the ordinary complex case, which free_face_collapse wraps.

namespace {

struct Cell {
    int dim;
    int index;       // class index within its dimension
    Simplex rep;     // least member
    bool alive = true;
};

struct PosetCollapse {
    QuotientCells cells;
    std::vector<Cell> all;                 // sorted by rep
    std::vector<std::vector<int>> by_dim;  // dim -> cell ids

    explicit PosetCollapse(QuotientCells qc) : cells(std::move(qc)) {
        for (int d = 0; d <= cells.dim; ++d) {
            for (std::size_t ci = 0; ci < cells.classes[d].size(); ++ci)
                all.push_back(Cell{d, static_cast<int>(ci), cells.classes[d][ci].front(), true});
        }
        std::sort(all.begin(), all.end(),
                  [](const Cell& a, const Cell& b) { return a.rep < b.rep; });
        by_dim.resize(cells.dim + 1);
        for (std::size_t id = 0; id < all.size(); ++id)
            by_dim[all[id].dim].push_back(static_cast<int>(id));
    }

    // members of lo contained in the representative of hi
    int multiplicity(const Cell& lo, const Cell& hi) const {
        int count = 0;
        for (const auto& member : cells.classes[lo.dim][lo.index])
            if (hi.rep.contains_all(member)) ++count;
        return count;
    }

    bool is_maximal(const Cell& c) const {
        for (const auto& other : all) {
            if (!other.alive || other.dim <= c.dim) continue;
            if (multiplicity(c, other) > 0) return false;
        }
        return true;
    }

    // (free cell id, its unique maximal) or (-1, -1)
    std::pair<int, int> next_free() {
        std::vector<int> maximal_ids;
        for (std::size_t id = 0; id < all.size(); ++id)
            if (all[id].alive && is_maximal(all[id])) maximal_ids.push_back(static_cast<int>(id));
        std::set<int> maximal_set(maximal_ids.begin(), maximal_ids.end());
        for (std::size_t id = 0; id < all.size(); ++id) {
            const Cell& c = all[id];
            if (!c.alive || maximal_set.contains(static_cast<int>(id))) continue;
            int total = 0, host = -1;
            for (int mid : maximal_ids) {
                int mult = multiplicity(c, all[mid]);
                total += mult;
                if (mult > 0) host = mid;
                if (total > 1) break;
            }
            if (total == 1 && all[host].dim == c.dim + 1)
                return {static_cast<int>(id), host};
        }
        return {-1, -1};
    }
};

} // namespace

QuotientCollapseResult collapse_quotient(const Complex& s, const RegularEquivalence& e) {
    PosetCollapse pc(quotient_cells(s, e));
    QuotientCollapseResult out;
    for (;;) {
        auto [free_id, host_id] = pc.next_free();
        if (free_id < 0) break;
        pc.all[free_id].alive = false;
        pc.all[host_id].alive = false;
        out.steps.emplace_back(pc.all[free_id].rep.str(), pc.all[host_id].rep.str());
    }
    out.residue_cells.assign(pc.cells.dim + 1, 0);
    long alive_total = 0;
    for (const auto& c : pc.all)
        if (c.alive) {
            ++out.residue_cells[c.dim];
            ++alive_total;
        }
    out.collapsible = alive_total == 1 && out.residue_cells[0] == 1;
    return out;
}

CollapseResult free_face_collapse(const Complex& k) {
    require(!k.empty(), "collapse needs a nonempty complex");
    PosetCollapse pc(quotient_cells(k, RegularEquivalence{}));
    CollapseResult out;
    for (;;) {
        auto [free_id, host_id] = pc.next_free();
        if (free_id < 0) break;
        pc.all[free_id].alive = false;
        pc.all[host_id].alive = false;
        out.steps.push_back(CollapseStep{pc.all[free_id].rep, pc.all[host_id].rep});
    }
    std::vector<Simplex> alive;
    for (const auto& c : pc.all)
        if (c.alive) alive.push_back(c.rep);
    // residue generators: alive faces maximal among the alive set
    std::vector<Simplex> maximal;
    for (const auto& f : alive) {
        bool dominated = false;
        for (const auto& g : alive)
            if (f != g && g.contains_all(f)) dominated = true;
        if (!dominated) maximal.push_back(f);
    }
    out.residue = Complex::from_set(std::move(maximal));
    out.collapsible = alive.size() == 1 && alive.front().dim() == 0;
    return out;
}

} // namespace stellar
