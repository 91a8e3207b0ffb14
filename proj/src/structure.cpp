#include "stellar/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stellar/errors.hpp"
#include "stellar/moves.hpp"

namespace stellar {

StellarStructure make_structure(const Complex& sphere, RegularEquivalence e,
                                std::optional<Complex> original) {
    require(!sphere.empty() && sphere.uniform(), "structure needs a uniform nonempty sphere");
    auto bad = validate_regular(sphere, e);
    if (!bad.empty()) throw input_error("invalid equivalence: " + bad.front());

    StellarStructure st;
    st.apex = sphere.fresh_label();
    st.sphere = sphere;
    st.equiv = std::move(e);
    st.original = std::move(original);
    st.closed = 2 * st.equiv.facet_pairs.size() == sphere.size();
    st.sphere_verdict = recognize_sphere(sphere);
    return st;
}

namespace {

// Absorb generator p' (with free vertex w' off the shared facet f) into the
// apex star by subdividing at f and welding the edge (apex, w') away.
Complex absorb(const Complex& n, int apex, const Simplex& f, int w_prime) {
    const int b = n.fresh_label();
    Complex n1 = subdivide(n, f, b);
    return weld(n1, Simplex{apex, w_prime}, b);
}

} // namespace

StellarStructure build_structure(const Complex& m) {
    require(!m.empty() && m.uniform(), "structure construction needs a uniform nonempty complex");
    const int n = m.dim();
    require(n >= 1, "structure construction needs dimension at least 1");
    require(connected_components(m).size() == 1, "structure construction needs a connected complex");
    {
        ManifoldReport mr = is_stellar_manifold(m);
        require(mr.verdict != Verdict::No, "input fails the vertex-link manifold test");
    }

    const int apex = m.fresh_label();
    const Simplex g0 = m.generators().front(); // lexicographically least
    Complex current = subdivide(m, g0, apex);

    std::map<int, int> ghost_of; // ghost vertex -> the original vertex it stands for
    int next_fresh = current.fresh_label();
    auto unghost = [&ghost_of](const Simplex& s) {
        std::vector<int> vs;
        vs.reserve(s.size());
        for (int v : s.vertices()) {
            auto it = ghost_of.find(v);
            vs.push_back(it == ghost_of.end() ? v : it->second);
        }
        return Simplex(std::move(vs));
    };

    while (true) {
        Complex lk = link(Simplex{apex}, current);
        Complex q = star_rest(Simplex{apex}, current).rest;
        if (q.empty()) break;

        std::set<int> lk_vertices;
        for (int v : lk.vertices()) lk_vertices.insert(v);

        // star-boundary faces by the manifold simplex they stand for; a
        // name owned by two boundary faces means both sides are already
        // absorbed, so it can never match a facet of an unabsorbed generator
        std::map<Simplex, std::vector<Simplex>> named; // unghosted -> link faces
        for (const auto& f : lk.generators()) named[unghost(f)].push_back(f);

        // least generator of Q sharing a codimension-1 face with the star
        // boundary (up to ghost renaming), then the least shared face
        const Simplex* pick = nullptr;
        Simplex shared;      // facet of p, original labels
        Simplex shared_link; // its ghost-renamed twin on the star boundary
        for (const auto& p : q.generators()) {
            std::vector<Simplex> fs = p.facets();
            std::sort(fs.begin(), fs.end());
            for (const auto& f : fs) {
                auto it = named.find(f);
                if (it != named.end()) {
                    ensure(it->second.size() == 1,
                           "facet " + f.str() + " of an unabsorbed generator is already "
                           "doubly covered by the star boundary");
                    pick = &p;
                    shared = f;
                    shared_link = it->second.front();
                    break;
                }
            }
            if (pick) break;
        }
        require(pick != nullptr,
                "no generator adjacent to the apex star: input is not strongly connected");

        const Simplex p = *pick;
        int w = 0;
        for (int v : p.vertices())
            if (!shared.contains(v)) w = v;
        ensure(!ghost_of.contains(w), "absorbed generator names a ghost vertex");

        // the absorbed copy lives in the star's coordinates: the shared face
        // keeps its link labels, and the off-face vertex gets a ghost when
        // it already borders the star
        int w_prime = w;
        if (lk_vertices.contains(w)) {
            const int d = next_fresh++;
            ghost_of[d] = w;
            w_prime = d;
        }
        Simplex p_prime = shared_link.with(w_prime);

        Complex before = current;
        if (p_prime != p)
            current = current + Complex::from_set({p}) + Complex::from_set({p_prime});
        current = absorb(current, apex, shared_link, w_prime);
        next_fresh = std::max(next_fresh, current.fresh_label());

        // cross-check against the closed-form absorption
        {
            Complex lk_expected = link(Simplex{apex}, before) + boundary(p_prime);
            Complex expected = cone(apex, lk_expected) +
                               (star_rest(Simplex{apex}, before).rest + Complex::from_set({p}));
            ensure(current == expected, "absorption disagrees with its closed form");
        }

        // the growing identification must stay regular at every step
        {
            RegularEquivalence partial;
            for (auto [d, orig] : ghost_of) partial.vertices.merge(d, orig);
            Complex lk_now = link(Simplex{apex}, current);
            auto bad = validate_regular(lk_now, partial);
            ensure(bad.empty(), "absorption broke regularity: " + (bad.empty() ? "" : bad.front()));
        }
    }

    Complex sphere = link(Simplex{apex}, current);
    ensure(cone(apex, sphere) == current, "apex star does not exhaust the final complex");

    // vertices and facets of S are identified by their name in M
    RegularEquivalence equiv;
    for (auto [d, orig] : ghost_of) equiv.vertices.merge(d, orig);
    std::map<Simplex, std::vector<Simplex>> fibers;
    for (const auto& g : sphere.generators()) fibers[unghost(g)].push_back(g);
    const bool m_closed = is_closed(m);
    for (const auto& [name, members] : fibers) {
        ensure(members.size() <= 2, "three sphere facets name the same manifold simplex " +
                                        name.str());
        if (members.size() == 2) equiv.add_pair(members[0], members[1]);
        else
            ensure(!m_closed, "closed input left facet " + members[0].str() + " unpaired");
    }

    StellarStructure st = make_structure(sphere, std::move(equiv), m);
    st.apex = apex;
    ensure(!m_closed || st.closed, "closed input must yield a perfect pairing");
    ensure(st.sphere_verdict != Verdict::No, "final link fails sphere recognition");
    return st;
}

QuotientCounts quotient_counts(const StellarStructure& st) {
    QuotientCounts out;
    QuotientCells cells = quotient_cells(st.sphere, st.equiv);
    out.h = cells.h();
    out.s = st.sphere.face_vector();
    for (std::size_t d = 0; d < out.h.size(); ++d)
        out.chi_quotient += (d % 2 == 0) ? out.h[d] : -out.h[d];
    if (st.closed) {
        const int n = st.manifold_dim();
        out.q.assign(n + 1, 0);
        out.q[0] = out.h[0] + 1;
        for (int i = 1; i <= n - 1; ++i) out.q[i] = out.h[i] + out.s[i - 1];
        out.q[n] = out.s[n - 1];
        ensure(out.q[n] == 2 * out.h[n - 1], "top cells must be twice the facet classes");
    }
    return out;
}

EulerRelation verify_euler_relation(const Complex& m, const StellarStructure& st) {
    require(is_closed(m), "the euler relation applies to closed manifolds");
    require(st.closed, "the euler relation needs a perfect facet pairing");
    EulerRelation out;
    out.chi_manifold = euler(m);
    QuotientCounts counts = quotient_counts(st);
    out.chi_quotient = counts.chi_quotient;
    const int n = st.manifold_dim();
    out.expected_quotient = out.chi_manifold + ((n + 1) % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < counts.q.size(); ++i)
        out.chi_structure += (i % 2 == 0) ? counts.q[i] : -counts.q[i];
    out.ok = out.chi_quotient == out.expected_quotient && out.chi_structure == out.chi_manifold;
    return out;
}

} // namespace stellar
