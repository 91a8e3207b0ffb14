#include "stellar/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "stellar/errors.hpp"
#include "stellar/parallel.hpp"

namespace stellar {

FacetPermutation FacetPermutation::identity(std::size_t n) {
    FacetPermutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool FacetPermutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img[i] != i) return false;
    return true;
}

FacetPermutation compose(const FacetPermutation& p, const FacetPermutation& q) {
    ensure(p.degree() == q.degree(), "composition of permutations of different degree");
    FacetPermutation out;
    out.img.resize(p.img.size());
    for (int i = 0; i < p.degree(); ++i) out.img[i] = p.img[q.img[i]];
    return out;
}

std::vector<std::vector<int>> cycles(const FacetPermutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.img.size(), false);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int cur = i;
        while (!seen[cur]) {
            seen[cur] = true;
            cyc.push_back(cur);
            cur = p.img[cur];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

long perm_order(const FacetPermutation& p) {
    long order = 1;
    for (const auto& cyc : cycles(p)) order = std::lcm(order, static_cast<long>(cyc.size()));
    return order;
}

Parity perm_parity(const FacetPermutation& p) {
    std::size_t transpositions = 0;
    for (const auto& cyc : cycles(p)) transpositions += cyc.size() - 1;
    return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

FacetPermutation pairing_permutation(const StellarStructure& st) {
    require(st.closed, "the pairing permutation needs a perfect facet pairing");
    const auto& gens = st.sphere.generators();
    std::map<Simplex, int> idx;
    for (std::size_t i = 0; i < gens.size(); ++i) idx[gens[i]] = static_cast<int>(i);
    FacetPermutation p = FacetPermutation::identity(gens.size());
    for (const auto& g : gens) {
        auto partner = st.equiv.partner(g);
        require(partner.has_value(), "facet " + g.str() + " is unpaired");
        p.img[idx.at(g)] = idx.at(*partner);
    }
    ensure(compose(p, p).is_identity(), "pairing permutation is not an involution");
    return p;
}

FacetPermutation class_permutation(const StellarStructure& st, const std::vector<Simplex>& cls) {
    const auto& gens = st.sphere.generators();
    std::map<Simplex, int> idx;
    for (std::size_t i = 0; i < gens.size(); ++i) idx[gens[i]] = static_cast<int>(i);
    FacetPermutation p = FacetPermutation::identity(gens.size());
    for (const auto& member : cls) {
        std::vector<int> carriers;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].contains_all(member)) carriers.push_back(static_cast<int>(i));
        require(carriers.size() == 2, "class member " + member.str() + " lies in " +
                                          std::to_string(carriers.size()) +
                                          " facets, expected 2");
        ensure(p.img[carriers[0]] == carriers[0] && p.img[carriers[1]] == carriers[1],
               "facet carries two members of one class");
        p.img[carriers[0]] = carriers[1];
        p.img[carriers[1]] = carriers[0];
    }
    return p;
}

CoxeterContext coxeter_context(const StellarStructure& st) {
    require(st.closed, "the permutation analysis needs a closed structure");
    require(st.sphere.dim() >= 1, "the sphere must have dimension at least 1");
    CoxeterContext cx;
    cx.st = st;
    cx.facets = st.sphere.generators();
    cx.classes = correspondence_classes(st.sphere, st.equiv, st.sphere.dim() - 1);
    cx.p0 = pairing_permutation(st);
    cx.p_alpha.reserve(cx.classes.size());
    for (const auto& cls : cx.classes) cx.p_alpha.push_back(class_permutation(st, cls));
    return cx;
}

namespace {

const FacetPermutation& generator(const CoxeterContext& cx, int i) {
    return i == 0 ? cx.p0 : cx.p_alpha.at(i - 1);
}

} // namespace

FacetOrder order_of_facet(const CoxeterContext& cx, int a, int b, int facet) {
    require(a != b, "facet order needs two different classes");
    const FacetPermutation& pa = cx.p_alpha.at(a);
    const FacetPermutation& pb = cx.p_alpha.at(b);
    FacetOrder out;
    int cur = facet;
    do {
        cur = pa(pb(cur));
        ++out.order;
    } while (cur != facet);

    // least return exponents, scanning one full orbit each
    const int pb_g = pb(facet);
    const int pa_g = pa(facet);
    cur = facet;
    for (long r = 1;; ++r) {
        cur = pa(pb(cur));
        if (cur == pb_g) {
            out.r_ab = r;
            break;
        }
        if (cur == facet) break;
    }
    cur = facet;
    for (long r = 1;; ++r) {
        cur = pb(pa(cur));
        if (cur == pa_g) {
            out.r_ba = r;
            break;
        }
        if (cur == facet) break;
    }
    return out;
}

long m_ab(const CoxeterContext& cx, int a, int b) {
    require(a != b, "m needs two different classes");
    long l = 1;
    for (std::size_t g = 0; g < cx.facets.size(); ++g)
        l = std::lcm(l, order_of_facet(cx, a, b, static_cast<int>(g)).order);
    long direct = perm_order(compose(cx.p_alpha.at(a), cx.p_alpha.at(b)));
    ensure(l == direct, "lcm of facet orders disagrees with the permutation order");
    return l;
}

namespace {

CoxeterMatrix matrix_common(const CoxeterContext& cx, bool parallel) {
    CoxeterMatrix mx;
    const int n = static_cast<int>(cx.classes.size()) + 1;
    mx.labels.push_back("p0");
    mx.class_sizes.push_back(0);
    for (const auto& cls : cx.classes) {
        mx.labels.push_back("a" + cls.front().str());
        mx.class_sizes.push_back(static_cast<long>(cls.size()));
    }
    mx.m.assign(n, std::vector<long>(n, 1));

    std::vector<std::pair<int, int>> todo;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) todo.emplace_back(i, j);

    std::vector<long> orders(todo.size());
    auto entry = [&](std::size_t t) {
        auto [i, j] = todo[t];
        orders[t] = perm_order(compose(generator(cx, i), generator(cx, j)));
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long t = 0; t < static_cast<long>(todo.size()); ++t) entry(t);
    } else {
        for (std::size_t t = 0; t < todo.size(); ++t) entry(t);
    }
    for (std::size_t t = 0; t < todo.size(); ++t) {
        auto [i, j] = todo[t];
        mx.m[i][j] = mx.m[j][i] = orders[t];
        if (orders[t] == 1) mx.degenerate.emplace_back(i, j);
    }
    return mx;
}

} // namespace

CoxeterMatrix coxeter_matrix_serial(const CoxeterContext& cx) { return matrix_common(cx, false); }

CoxeterMatrix coxeter_matrix(const CoxeterContext& cx) {
    return matrix_common(cx, par::available());
}

FlatReport is_flat(const CoxeterContext& cx) {
    FlatReport out;
    for (std::size_t i = 0; i < cx.p_alpha.size(); ++i) {
        if (compose(cx.p0, cx.p_alpha[i]) != compose(cx.p_alpha[i], cx.p0)) {
            out.flat = false;
            out.witness = static_cast<int>(i);
            return out;
        }
    }
    return out;
}

bool flat_at(const CoxeterContext& cx, int cls) {
    FacetPermutation prod = compose(cx.p0, cx.p_alpha.at(cls));
    bool square_id = compose(prod, prod).is_identity();
    ensure(square_id == (cx.classes.at(cls).size() <= 2),
           "flatness at a class must match class size <= 2");
    return square_id;
}

std::vector<SingularClass> singular_classes(const CoxeterContext& cx) {
    std::vector<SingularClass> out;
    for (std::size_t ci = 0; ci < cx.classes.size(); ++ci) {
        const auto& cls = cx.classes[ci];
        if (cls.size() < 3) continue;
        SingularClass sc;
        sc.cls = static_cast<int>(ci);
        sc.size = static_cast<long>(cls.size());
        FacetPermutation prod = compose(cx.p0, cx.p_alpha[ci]);
        sc.order_global = perm_order(prod);
        // facets carrying a class member form their own cycles
        std::set<int> support;
        for (std::size_t g = 0; g < cx.facets.size(); ++g)
            for (const auto& member : cls)
                if (cx.facets[g].contains_all(member)) support.insert(static_cast<int>(g));
        long on_support = 1;
        for (const auto& cyc : cycles(prod))
            if (support.contains(cyc.front()))
                on_support = std::lcm(on_support, static_cast<long>(cyc.size()));
        sc.order_on_support = on_support;
        ensure(sc.order_on_support == sc.size,
               "product order on the class support must equal the class size");
        out.push_back(sc);
    }
    return out;
}

LinkCycleResult link_cycle_check(const CoxeterContext& cx, int a, int b, int facet) {
    LinkCycleResult out{LinkCycleResult::Kind::NotApplicable, 0, {}, 0, 0, 0};
    FacetOrder fo = order_of_facet(cx, a, b, facet);
    if (fo.order <= 2) return out;

    const Simplex& g = cx.facets.at(facet);
    auto member_in = [&](int cls) -> std::optional<Simplex> {
        for (const auto& member : cx.classes.at(cls))
            if (g.contains_all(member)) return member;
        return std::nullopt;
    };
    auto ma = member_in(a), mb = member_in(b);
    ensure(ma.has_value() && mb.has_value(),
           "facet of order > 2 must carry members of both classes");
    Simplex ell = ma->intersect(*mb);
    Complex lk = link(ell, cx.st.sphere);

    auto in_class = [&](int cls, const Simplex& s) {
        for (const auto& member : cx.classes.at(cls))
            if (member == s) return true;
        return false;
    };
    std::vector<int> outside;
    for (int v : lk.vertices()) {
        Simplex vs = ell.with(v);
        if (!in_class(a, vs) && !in_class(b, vs)) outside.push_back(v);
    }

    if (!outside.empty()) {
        out.kind = LinkCycleResult::Kind::CaseExcludedVertex;
        out.excluded_vertex = outside.front();
        ensure(fo.r_ab.has_value() && fo.r_ba.has_value(),
               "excluded-vertex case must admit both return exponents");
        out.r_ab = *fo.r_ab;
        out.r_ba = *fo.r_ba;
        ensure(fo.order == out.r_ab + out.r_ba + 1,
               "facet order must be r_ab + r_ba + 1 in the excluded-vertex case");
        return out;
    }

    // all link vertices belong to the two classes: the link must be an
    // alternating cycle of length 2 * order
    ensure(is_single_cycle(lk), "covered link must be a single cycle");
    std::map<int, std::vector<int>> adj;
    for (const auto& edge : lk.generators()) {
        adj[edge[0]].push_back(edge[1]);
        adj[edge[1]].push_back(edge[0]);
    }
    std::vector<int> cycle;
    int start = lk.vertices().front();
    int prev = -1, cur = start;
    do {
        cycle.push_back(cur);
        int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = next;
    } while (cur != start);
    ensure(static_cast<long>(cycle.size()) == 2 * fo.order,
           "covered link must have exactly twice the order many vertices");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        bool in_a = in_class(a, ell.with(cycle[i]));
        bool prev_in_a = in_class(a, ell.with(cycle[(i + cycle.size() - 1) % cycle.size()]));
        ensure(in_a != prev_in_a, "covered link must alternate between the two classes");
    }
    out.kind = LinkCycleResult::Kind::CaseCycle;
    out.m = fo.order;
    out.cycle = std::move(cycle);
    return out;
}

AlternatingReport alternating_check(const CoxeterContext& cx) {
    AlternatingReport out;
    out.applicable = true;
    for (const auto& pa : cx.p_alpha) {
        if (perm_order(compose(cx.p0, pa)) % 2 != 0) {
            out.applicable = false;
            return out;
        }
    }
    out.all_alpha_even = true;
    std::string odd_witness;
    for (std::size_t i = 0; i < cx.p_alpha.size(); ++i) {
        if (perm_parity(cx.p_alpha[i]) == Parity::Odd) {
            out.all_alpha_even = false;
            odd_witness = "a" + cx.classes[i].front().str();
            break;
        }
    }
    for (const auto& [g, p] : cx.st.equiv.facet_pairs) {
        if (g.intersect(p).dim() == g.dim() - 1) {
            out.collapsible_facet = true;
            out.witness = "pair " + g.str() + " ~ " + p.str() + " shares " +
                          g.intersect(p).str();
            break;
        }
    }
    if (!out.collapsible_facet && !out.all_alpha_even) out.witness = odd_witness;
    out.consistent = (!out.collapsible_facet) == out.all_alpha_even;
    return out;
}

ClosureResult group_closure(const CoxeterContext& cx, long cap) {
    ClosureResult out;
    std::vector<FacetPermutation> gens{cx.p0};
    for (const auto& pa : cx.p_alpha) gens.push_back(pa);
    std::set<std::vector<int>> seen;
    std::vector<FacetPermutation> frontier{FacetPermutation::identity(cx.facets.size())};
    seen.insert(frontier.front().img);
    while (!frontier.empty()) {
        std::vector<FacetPermutation> next;
        for (const auto& x : frontier) {
            for (const auto& gperm : gens) {
                FacetPermutation y = compose(gperm, x);
                if (seen.contains(y.img)) continue;
                if (static_cast<long>(seen.size()) >= cap) {
                    out.overflow = true;
                    return out;
                }
                seen.insert(y.img);
                next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    out.order = static_cast<long>(seen.size());
    return out;
}

std::optional<bool> closure_confirms_flat(const CoxeterContext& cx, long cap) {
    std::vector<FacetPermutation> gens{cx.p0};
    for (const auto& pa : cx.p_alpha) gens.push_back(pa);
    std::set<std::vector<int>> seen;
    std::vector<FacetPermutation> frontier{FacetPermutation::identity(cx.facets.size())};
    seen.insert(frontier.front().img);
    std::vector<FacetPermutation> all{frontier.front()};
    while (!frontier.empty()) {
        std::vector<FacetPermutation> next;
        for (const auto& x : frontier) {
            for (const auto& gperm : gens) {
                FacetPermutation y = compose(gperm, x);
                if (seen.contains(y.img)) continue;
                if (static_cast<long>(seen.size()) >= cap) return std::nullopt;
                seen.insert(y.img);
                all.push_back(y);
                next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    // normality of {1, p0}: every conjugate of p0 is p0 itself
    for (const auto& x : all) {
        FacetPermutation inv;
        inv.img.resize(x.img.size());
        for (int i = 0; i < x.degree(); ++i) inv.img[x.img[i]] = i;
        FacetPermutation conj = compose(compose(x, cx.p0), inv);
        if (!(conj == cx.p0) && !conj.is_identity()) return false;
    }
    return true;
}

std::vector<std::vector<int>> diagram_components(const CoxeterMatrix& mx) {
    const int n = static_cast<int>(mx.labels.size());
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j)
                if (comp[j] < 0 && mx.m[cur][j] >= 3) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> out(ncomp);
    for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
    return out;
}

std::string diagram_dot(const CoxeterMatrix& mx) {
    std::ostringstream os;
    os << "graph coxeter {\n";
    for (std::size_t i = 0; i < mx.labels.size(); ++i)
        os << "  n" << i << " [label=\"" << mx.labels[i] << "\"];\n";
    for (std::size_t i = 0; i < mx.labels.size(); ++i)
        for (std::size_t j = i + 1; j < mx.labels.size(); ++j) {
            if (mx.m[i][j] < 3) continue;
            os << "  n" << i << " -- n" << j;
            if (mx.m[i][j] > 3) os << " [label=\"" << mx.m[i][j] << "\"]";
            os << ";\n";
        }
    auto comps = diagram_components(mx);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        os << "  // component " << c << ":";
        for (int i : comps[c]) os << ' ' << mx.labels[i];
        os << '\n';
    }
    os << "}\n";
    return os.str();
}

} // namespace stellar
