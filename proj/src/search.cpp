#include "stellar/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace stellar {
namespace {

struct Node {
    Complex complex;
    MoveScript script; // from the side's origin
    CanonicalForm canon;
};

using Visited = std::unordered_map<std::string, std::size_t>; // key -> node id

// Relabeling that carries x onto y; both must have equal canonical keys.
Move matching_relabel(const CanonicalForm& cx, const CanonicalForm& cy) {
    std::map<int, int> from_rank;
    for (auto [v, r] : cy.to_canonical) from_rank[r] = v;
    std::map<int, int> map;
    for (auto [v, r] : cx.to_canonical) map[v] = from_rank.at(r);
    return Move::relabeling(std::move(map));
}

MoveScript splice(const std::vector<Node>& k_nodes, std::size_t k_id,
                  const std::vector<Node>& l_nodes, std::size_t l_id) {
    const Node& a = k_nodes[k_id];
    const Node& b = l_nodes[l_id];
    MoveScript script = a.script;
    Move rel = matching_relabel(a.canon, b.canon);
    bool identity = true;
    for (auto [from, to] : rel.mapping)
        if (from != to) identity = false;
    if (!identity) script.push_back(rel);
    for (auto it = b.script.rbegin(); it != b.script.rend(); ++it)
        script.push_back(it->inverse());
    return script;
}

} // namespace

SearchResult bounded_equivalence_search(const Complex& k, const Complex& l, SearchBudget budget) {
    require(!k.empty() && !l.empty(), "equivalence search needs nonempty complexes");
    require(k.uniform() && l.uniform(), "equivalence search needs uniform complexes");
    require(k.dim() == l.dim(), "complexes of different dimension are never equivalent");
    if (budget.max_vertices <= 0) {
        budget.max_vertices =
            static_cast<int>(std::max(k.vertices().size(), l.vertices().size())) + 4;
    }

    SearchResult result;
    std::vector<Node> nodes[2]; // 0: from K, 1: from L
    Visited visited[2];
    std::deque<std::size_t> frontier[2];

    auto finish = [&](std::size_t k_id, std::size_t l_id) {
        MoveScript script = splice(nodes[0], k_id, nodes[1], l_id);
        ensure(apply_script(k, script) == l, "search produced a script that does not replay");
        result.equivalent = true;
        result.script = std::move(script);
        return result;
    };

    for (int side = 0; side < 2; ++side) {
        Node origin{side == 0 ? k : l, {}, canonical_form(side == 0 ? k : l)};
        visited[side][origin.canon.key] = 0;
        frontier[side].push_back(0);
        nodes[side].push_back(std::move(origin));
    }
    if (nodes[0][0].canon == nodes[1][0].canon) return finish(0, 0);

    while (!frontier[0].empty() || !frontier[1].empty()) {
        int side;
        if (frontier[0].empty()) side = 1;
        else if (frontier[1].empty()) side = 0;
        else side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        const int other = 1 - side;

        std::deque<std::size_t> layer;
        std::swap(layer, frontier[side]);
        while (!layer.empty()) {
            std::size_t id = layer.front();
            layer.pop_front();
            if (result.nodes_expanded >= budget.max_nodes) return result; // unknown
            ++result.nodes_expanded;

            Complex current = nodes[side][id].complex; // copy: nodes[] may reallocate
            std::vector<Move> moves = legal_welds(current);
            for (auto& m : legal_subdivisions(current)) moves.push_back(std::move(m));
            for (const auto& m : moves) {
                if (m.kind == Move::Kind::Subdivide &&
                    static_cast<int>(current.vertices().size()) + 1 > budget.max_vertices)
                    continue;
                Complex child = apply_move(current, m);
                CanonicalForm canon = canonical_form(child);
                if (visited[side].contains(canon.key)) continue;
                MoveScript script = nodes[side][id].script;
                script.push_back(m);
                nodes[side].push_back(Node{std::move(child), std::move(script), std::move(canon)});
                std::size_t child_id = nodes[side].size() - 1;
                visited[side][nodes[side][child_id].canon.key] = child_id;
                frontier[side].push_back(child_id);
                auto hit = visited[other].find(nodes[side][child_id].canon.key);
                if (hit != visited[other].end()) {
                    return side == 0 ? finish(child_id, hit->second)
                                     : finish(hit->second, child_id);
                }
            }
        }
    }
    return result; // both sides exhausted: unknown (never claims inequivalence)
}

} // namespace stellar
