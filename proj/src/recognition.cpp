#include "stellar/recognition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stellar/errors.hpp"
#include "stellar/parallel.hpp"

namespace stellar {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(SurfaceType t) {
    switch (t) {
    case SurfaceType::Sphere: return "sphere";
    case SurfaceType::Disk: return "disk";
    case SurfaceType::ProjectivePlane: return "projective_plane";
    case SurfaceType::Torus: return "torus";
    case SurfaceType::Klein: return "klein";
    case SurfaceType::Other: return "other";
    }
    return "?";
}

namespace {

std::map<int, int> vertex_degrees(const Complex& k) {
    std::map<int, int> deg;
    for (const auto& g : k.generators())
        for (int v : g.vertices()) ++deg[v];
    return deg;
}

bool connected(const Complex& k) {
    return connected_components(k).size() == 1;
}

// edge -> incident facet indices, for a uniform 2-complex
std::map<Simplex, std::vector<int>> edge_incidence(const Complex& k) {
    std::map<Simplex, std::vector<int>> inc;
    const auto& gens = k.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (const auto& e : gens[i].facets()) inc[e].push_back(static_cast<int>(i));
    return inc;
}

bool boundary_is_single_cycle(const std::vector<Simplex>& boundary_edges) {
    if (boundary_edges.size() < 3) return false;
    Complex b = Complex::from_set(boundary_edges);
    return is_single_cycle(b);
}

Verdict sphere_dim2(const Complex& k) {
    auto inc = edge_incidence(k);
    for (const auto& [e, fs] : inc)
        if (fs.size() != 2) return Verdict::No; // boundary or branching edge
    if (!connected(k)) return Verdict::No;
    for (int v : k.vertices())
        if (!is_single_cycle(link(Simplex{v}, k))) return Verdict::No;
    return euler(k) == 2 ? Verdict::Yes : Verdict::No;
}

Verdict ball_dim2(const Complex& k) {
    auto inc = edge_incidence(k);
    std::vector<Simplex> boundary_edges;
    for (const auto& [e, fs] : inc) {
        if (fs.size() > 2) return Verdict::No;
        if (fs.size() == 1) boundary_edges.push_back(e);
    }
    if (boundary_edges.empty()) return Verdict::No;
    if (!connected(k)) return Verdict::No;
    for (int v : k.vertices()) {
        Complex lk = link(Simplex{v}, k);
        if (!is_single_cycle(lk) && !is_single_path(lk)) return Verdict::No;
    }
    if (!boundary_is_single_cycle(boundary_edges)) return Verdict::No;
    return euler(k) == 1 ? Verdict::Yes : Verdict::No;
}

Simplex standard_simplex(int nverts) {
    std::vector<int> vs(nverts);
    for (int i = 0; i < nverts; ++i) vs[i] = i + 1;
    return Simplex(std::move(vs));
}

Verdict high_dim_search(const Complex& k, const Complex& target, SearchBudget budget) {
    SearchResult r = bounded_equivalence_search(k, target, budget);
    return r.equivalent ? Verdict::Yes : Verdict::Unknown;
}

} // namespace

bool is_single_cycle(const Complex& k) {
    if (k.empty() || !k.uniform() || k.dim() != 1) return false;
    auto deg = vertex_degrees(k);
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    return deg.size() == k.size() && connected(k);
}

bool is_single_path(const Complex& k) {
    if (k.empty() || !k.uniform() || k.dim() != 1) return false;
    auto deg = vertex_degrees(k);
    int ones = 0;
    for (const auto& [v, d] : deg) {
        if (d == 1) ++ones;
        else if (d != 2) return false;
    }
    return ones == 2 && k.size() + 1 == deg.size() && connected(k);
}

Verdict recognize_sphere(const Complex& k, SearchBudget budget) {
    require(!k.empty(), "sphere recognition needs a nonempty complex");
    require(k.uniform(), "sphere recognition needs a uniform complex");
    const int d = k.dim();
    switch (d) {
    case 0: return k.size() == 2 ? Verdict::Yes : Verdict::No;
    case 1: return is_single_cycle(k) ? Verdict::Yes : Verdict::No;
    case 2: return sphere_dim2(k);
    default: return high_dim_search(k, boundary(standard_simplex(d + 2)), budget);
    }
}

Verdict recognize_ball(const Complex& k, SearchBudget budget) {
    require(!k.empty(), "ball recognition needs a nonempty complex");
    require(k.uniform(), "ball recognition needs a uniform complex");
    const int d = k.dim();
    switch (d) {
    case 0: return k.size() == 1 ? Verdict::Yes : Verdict::No;
    case 1: return is_single_path(k) ? Verdict::Yes : Verdict::No;
    case 2: return ball_dim2(k);
    default:
        return high_dim_search(k, Complex::from_set({standard_simplex(d + 1)}), budget);
    }
}

namespace {

LinkVerdict link_verdict(const Complex& m, int v, int n) {
    LinkVerdict out{v, Verdict::No, Verdict::No, Verdict::Unknown};
    Complex lk = link(Simplex{v}, m);
    if (lk.empty() || !lk.uniform() || lk.dim() != n - 1) {
        out.ok = Verdict::No;
        return out;
    }
    out.ball = recognize_ball(lk);
    out.sphere = recognize_sphere(lk);
    if (out.ball == Verdict::Yes || out.sphere == Verdict::Yes) out.ok = Verdict::Yes;
    else if (out.ball == Verdict::No && out.sphere == Verdict::No) out.ok = Verdict::No;
    else out.ok = Verdict::Unknown;
    return out;
}

ManifoldReport aggregate(std::vector<LinkVerdict> links) {
    ManifoldReport rep;
    rep.links = std::move(links);
    rep.verdict = Verdict::Yes;
    for (const auto& l : rep.links) {
        if (l.ok == Verdict::No) return ManifoldReport{Verdict::No, std::move(rep.links)};
        if (l.ok == Verdict::Unknown) rep.verdict = Verdict::Unknown;
    }
    return rep;
}

} // namespace

ManifoldReport is_stellar_manifold_serial(const Complex& m) {
    require(!m.empty(), "manifold test needs a nonempty complex");
    require(m.uniform(), "manifold test needs a uniform complex");
    const int n = m.dim();
    if (n == 0) return ManifoldReport{Verdict::Yes, {}};
    std::vector<int> verts = m.vertices();
    std::vector<LinkVerdict> links(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) links[i] = link_verdict(m, verts[i], n);
    return aggregate(std::move(links));
}

ManifoldReport is_stellar_manifold(const Complex& m) {
    require(!m.empty(), "manifold test needs a nonempty complex");
    require(m.uniform(), "manifold test needs a uniform complex");
    const int n = m.dim();
    if (n == 0) return ManifoldReport{Verdict::Yes, {}};
    if (!par::available()) return is_stellar_manifold_serial(m);
    std::vector<int> verts = m.vertices();
    std::vector<LinkVerdict> links(verts.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(verts.size()); ++i)
        links[i] = link_verdict(m, verts[i], n);
    return aggregate(std::move(links));
}

// ---------------------------------------------------------------------------
// Surface classification on the quotient cell structure. A plain complex is
// the special case of the trivial equivalence. Facet classes are the
// 2-cells; each (facet, edge) flag is glued to its image under the facet
// pairing, and the resulting flag orbits ("slots") are the triangle sides
// incident to an edge class: two for an interior edge, one on the boundary.

namespace {

struct SlotSide {
    int cell;      // facet class index
    Simplex edge;  // corresponding edge of the class representative facet
};

struct QuotientSurface {
    QuotientCells cells;
    std::vector<long> h;
    std::vector<std::vector<SlotSide>> edge_slots; // per edge class
    bool genuine = true;
    long chi = 0;
};

int corner_class(const QuotientCells& cells, const Simplex& rep_facet, int corner) {
    return cells.class_of[0].at(Simplex{rep_facet[corner]});
}

QuotientSurface build_quotient_surface(const Complex& s, const RegularEquivalence& e) {
    require(!s.empty() && s.uniform() && s.dim() == 2,
            "surface classification needs a uniform 2-dimensional complex");
    require(connected(s), "surface classification needs a connected complex");
    {
        auto bad = validate_regular(s, e);
        if (!bad.empty()) throw input_error("invalid equivalence: " + bad.front());
    }

    for (const auto& [edge, fs] : edge_incidence(s))
        if (fs.size() > 2)
            throw input_error("not a surface: edge " + edge.str() + " lies in " +
                              std::to_string(fs.size()) + " triangles");

    QuotientSurface qs;
    qs.cells = quotient_cells(s, e);
    qs.h = qs.cells.h();
    qs.chi = qs.h[0] - qs.h[1] + qs.h[2];

    const auto& gens = s.generators();
    std::map<Simplex, int> gen_idx;
    for (std::size_t i = 0; i < gens.size(); ++i) gen_idx[gens[i]] = static_cast<int>(i);

    std::vector<int> pair_of(gens.size(), -1);
    std::vector<std::map<int, int>> vmap(gens.size());
    for (const auto& [g, p] : e.facet_pairs) {
        int gi = gen_idx.at(g), pi = gen_idx.at(p);
        pair_of[gi] = pi;
        pair_of[pi] = gi;
        vmap[gi] = pair_vertex_map(g, p, e.vertices);
        vmap[pi] = pair_vertex_map(p, g, e.vertices);
    }
    auto map_edge = [&](int from, const Simplex& edge) {
        std::vector<int> vs;
        vs.reserve(edge.size());
        for (int v : edge.vertices()) vs.push_back(vmap[from].at(v));
        return Simplex(std::move(vs));
    };

    // flags grouped by edge class, glued along the facet pairing
    const auto& edge_classes = qs.cells.classes[1];
    qs.edge_slots.resize(edge_classes.size());
    for (std::size_t ci = 0; ci < edge_classes.size(); ++ci) {
        std::vector<std::pair<int, Simplex>> flags;
        for (const auto& edge : edge_classes[ci])
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                if (gens[gi].contains_all(edge)) flags.emplace_back(static_cast<int>(gi), edge);
        std::sort(flags.begin(), flags.end());
        std::set<std::pair<int, Simplex>> seen;
        for (const auto& flag : flags) {
            if (seen.contains(flag)) continue;
            seen.insert(flag);
            if (pair_of[flag.first] >= 0) {
                std::pair<int, Simplex> mate{pair_of[flag.first],
                                             map_edge(flag.first, flag.second)};
                ensure(qs.cells.class_of[1].at(mate.second) == static_cast<int>(ci),
                       "flag gluing left its edge class");
                seen.insert(mate);
            }
            // translate the slot to the representative facet of its 2-cell
            int cell = qs.cells.class_of[2].at(gens[flag.first]);
            const Simplex& rep = qs.cells.classes[2][cell][0];
            Simplex edge_in_rep =
                gens[flag.first] == rep ? flag.second : map_edge(flag.first, flag.second);
            qs.edge_slots[ci].push_back(SlotSide{cell, edge_in_rep});
        }
        if (qs.edge_slots[ci].size() > 2) {
            const Simplex& least = edge_classes[ci].front();
            throw input_error("not a surface: edge " + least.str() + " lies in " +
                              std::to_string(qs.edge_slots[ci].size()) + " triangle sides");
        }
    }
    return qs;
}

// +1 when the reference orientation of the representative triangle induces
// the direction lo -> hi on the given edge, ordering endpoints by vertex
// class index.
int edge_sign(const QuotientCells& cells, const Simplex& rep, const Simplex& edge) {
    int u = edge[0], v = edge[1];
    if (cells.class_of[0].at(Simplex{u}) > cells.class_of[0].at(Simplex{v})) std::swap(u, v);
    int a = rep[0], b = rep[1], c = rep[2];
    if (!edge.contains(c)) return u == a && v == b ? +1 : -1;          // edge {a,b}: a->b
    if (!edge.contains(a)) return u == b && v == c ? +1 : -1;          // edge {b,c}: b->c
    return u == c && v == a ? +1 : -1;                                 // edge {a,c}: c->a
}

bool orientable_surface(const QuotientSurface& qs) {
    const std::size_t n = qs.cells.classes[2].size();
    std::vector<int> eps(n, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (other, required product)
    for (std::size_t ci = 0; ci < qs.edge_slots.size(); ++ci) {
        if (qs.edge_slots[ci].size() != 2) continue;
        const auto& s1 = qs.edge_slots[ci][0];
        const auto& s2 = qs.edge_slots[ci][1];
        int d1 = edge_sign(qs.cells, qs.cells.classes[2][s1.cell][0], s1.edge);
        int d2 = edge_sign(qs.cells, qs.cells.classes[2][s2.cell][0], s2.edge);
        int product = -d1 * d2;
        if (s1.cell == s2.cell) {
            if (product != 1) return false;
            continue;
        }
        adj[s1.cell].emplace_back(s2.cell, product);
        adj[s2.cell].emplace_back(s1.cell, product);
    }
    for (std::size_t start = 0; start < n; ++start) {
        if (eps[start] != 0) continue;
        eps[start] = 1;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (auto [other, product] : adj[cur]) {
                int want = eps[cur] * product;
                if (eps[other] == 0) {
                    eps[other] = want;
                    stack.push_back(other);
                } else if (eps[other] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Every vertex class must have a single fan of triangle corners around it.
bool vertex_links_single(const QuotientSurface& qs) {
    const auto& cells = qs.cells;
    const std::size_t ncells = cells.classes[2].size();
    // corner id = 3*cell + k
    std::vector<int> uf(3 * ncells);
    for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    auto find = [&uf](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto corner_at = [&](int cell, int vclass) -> int {
        const Simplex& rep = cells.classes[2][cell][0];
        for (int k = 0; k < 3; ++k)
            if (corner_class(cells, rep, k) == vclass) return 3 * cell + k;
        return -1;
    };
    for (const auto& slots : qs.edge_slots) {
        if (slots.size() != 2) continue;
        for (int endpoint : {0, 1}) {
            int vclass = cells.class_of[0].at(Simplex{slots[0].edge[endpoint]});
            int c1 = corner_at(slots[0].cell, vclass);
            int c2 = corner_at(slots[1].cell, vclass);
            ensure(c1 >= 0 && c2 >= 0, "slot endpoint missing from its cell");
            int r1 = find(c1), r2 = find(c2);
            if (r1 != r2) uf[std::max(r1, r2)] = std::min(r1, r2);
        }
    }
    std::map<int, std::set<int>> components_per_class;
    for (std::size_t cell = 0; cell < ncells; ++cell) {
        const Simplex& rep = cells.classes[2][cell][0];
        for (int k = 0; k < 3; ++k)
            components_per_class[corner_class(cells, rep, k)].insert(
                find(static_cast<int>(3 * cell + k)));
    }
    for (const auto& [vclass, comps] : components_per_class)
        if (comps.size() > 1) return false;
    return true;
}

int boundary_component_count(const QuotientSurface& qs, bool& degrees_ok) {
    std::map<int, int> degree;      // vertex class -> boundary degree
    std::map<int, int> uf_map;      // vertex class union-find
    auto find = [&uf_map](int x) {
        while (uf_map.contains(x) && uf_map[x] != x) x = uf_map[x] = uf_map[uf_map[x]];
        return x;
    };
    int edges = 0;
    for (const auto& slots : qs.edge_slots) {
        if (slots.size() != 1) continue;
        ++edges;
        int a = qs.cells.class_of[0].at(Simplex{slots[0].edge[0]});
        int b = qs.cells.class_of[0].at(Simplex{slots[0].edge[1]});
        ++degree[a];
        ++degree[b];
        if (!uf_map.contains(a)) uf_map[a] = a;
        if (!uf_map.contains(b)) uf_map[b] = b;
        int ra = find(a), rb = find(b);
        if (ra != rb) uf_map[std::max(ra, rb)] = std::min(ra, rb);
    }
    degrees_ok = true;
    for (const auto& [vc, d] : degree)
        if (d != 2) degrees_ok = false;
    std::set<int> roots;
    for (const auto& [vc, d] : degree) roots.insert(find(vc));
    (void)edges;
    return static_cast<int>(roots.size());
}

SurfaceClass classify_cells(const QuotientSurface& qs) {
    SurfaceClass out;
    out.chi = qs.chi;
    out.orientable = orientable_surface(qs);
    bool degrees_ok = true;
    out.boundary_components = boundary_component_count(qs, degrees_ok);
    out.genuine_surface = degrees_ok && vertex_links_single(qs);
    if (!out.genuine_surface) {
        out.type = SurfaceType::Other;
        return out;
    }
    if (out.boundary_components == 0) {
        if (out.chi == 2 && out.orientable) out.type = SurfaceType::Sphere;
        else if (out.chi == 1 && !out.orientable) out.type = SurfaceType::ProjectivePlane;
        else if (out.chi == 0 && out.orientable) out.type = SurfaceType::Torus;
        else if (out.chi == 0 && !out.orientable) out.type = SurfaceType::Klein;
        else out.type = SurfaceType::Other;
    } else {
        out.type = (out.chi == 1 && out.boundary_components == 1) ? SurfaceType::Disk
                                                                  : SurfaceType::Other;
    }
    return out;
}

} // namespace

SurfaceClass classify_quotient_surface(const Complex& s, const RegularEquivalence& e) {
    return classify_cells(build_quotient_surface(s, e));
}

SurfaceClass classify_surface(const Complex& k) {
    return classify_quotient_surface(k, RegularEquivalence{});
}

} // namespace stellar
