#pragma once

#include <map>
#include <random>
#include <set>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/equivalence.hpp"

namespace fx {

using stellar::Complex;
using stellar::RegularEquivalence;
using stellar::Simplex;

inline Simplex range_simplex(int count) {
    std::vector<int> vs(count);
    for (int i = 0; i < count; ++i) vs[i] = i + 1;
    return Simplex(std::move(vs));
}

inline Complex solid_simplex(int count) { return Complex::from_set({range_simplex(count)}); }

inline Complex boundary_simplex(int count) { return stellar::boundary(solid_simplex(count)); }

/// Double cone over the triangle 1-2-3 with apexes 4 and 5.
inline Complex bipyramid() {
    return Complex::from_set({Simplex{1, 2, 4}, Simplex{1, 3, 4}, Simplex{2, 3, 4},
                              Simplex{1, 2, 5}, Simplex{1, 3, 5}, Simplex{2, 3, 5}});
}

inline RegularEquivalence bipyramid_equiv() {
    RegularEquivalence e;
    e.vertices.merge(4, 5);
    e.add_pair(Simplex{1, 2, 4}, Simplex{1, 2, 5});
    e.add_pair(Simplex{1, 3, 4}, Simplex{1, 3, 5});
    e.add_pair(Simplex{2, 3, 4}, Simplex{2, 3, 5});
    return e;
}

inline Complex octahedron() {
    std::vector<Simplex> gens;
    for (int a : {1, 2})
        for (int b : {3, 4})
            for (int c : {5, 6}) gens.push_back(Simplex{a, b, c});
    return Complex::from_set(std::move(gens));
}

/// Standard 7-vertex 14-triangle torus.
inline Complex torus7() {
    auto wrap = [](int v) { return (v - 1) % 7 + 1; };
    std::vector<Simplex> gens;
    for (int i = 1; i <= 7; ++i) {
        gens.push_back(Simplex{i, wrap(i + 1), wrap(i + 3)});
        gens.push_back(Simplex{i, wrap(i + 2), wrap(i + 3)});
    }
    return Complex::from_set(std::move(gens));
}

inline Complex cycle_complex(int n) {
    std::vector<Simplex> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(Simplex{i, i % n + 1});
    return Complex::from_set(std::move(gens));
}

inline Complex path_complex(int edges) {
    std::vector<Simplex> gens;
    for (int i = 1; i <= edges; ++i) gens.push_back(Simplex{i, i + 1});
    return Complex::from_set(std::move(gens));
}

/// Triangulated annulus: outer triangle 1-2-3, inner 4-5-6.
inline Complex annulus6() {
    return Complex::from_set({Simplex{1, 2, 4}, Simplex{2, 4, 5}, Simplex{2, 3, 5},
                              Simplex{3, 5, 6}, Simplex{1, 3, 6}, Simplex{1, 4, 6}});
}

/// 5-vertex Moebius band.
inline Complex moebius5() {
    return Complex::from_set({Simplex{1, 2, 3}, Simplex{2, 3, 4}, Simplex{3, 4, 5},
                              Simplex{1, 4, 5}, Simplex{1, 2, 5}});
}

/// 16-triangle 2-sphere with north pole 3 and south pole 10.
inline Complex example2_sphere() {
    return Complex::from_set(
        {Simplex{3, 7, 8}, Simplex{1, 5, 10}, Simplex{1, 3, 5}, Simplex{7, 8, 10},
         Simplex{3, 4, 5}, Simplex{8, 9, 10}, Simplex{3, 4, 7}, Simplex{1, 9, 10},
         Simplex{4, 5, 7}, Simplex{1, 8, 9}, Simplex{5, 6, 7}, Simplex{1, 2, 8},
         Simplex{1, 2, 3}, Simplex{6, 7, 10}, Simplex{2, 3, 8}, Simplex{5, 6, 10}});
}

inline RegularEquivalence example2_equiv() {
    RegularEquivalence e;
    e.vertices.merge(2, 6);
    e.vertices.merge(4, 9);
    e.vertices.merge(3, 10);
    e.vertices.merge(5, 8);
    e.vertices.merge(1, 7);
    e.add_pair(Simplex{3, 7, 8}, Simplex{1, 5, 10});
    e.add_pair(Simplex{1, 3, 5}, Simplex{7, 8, 10});
    e.add_pair(Simplex{3, 4, 5}, Simplex{8, 9, 10});
    e.add_pair(Simplex{3, 4, 7}, Simplex{1, 9, 10});
    e.add_pair(Simplex{4, 5, 7}, Simplex{1, 8, 9});
    e.add_pair(Simplex{5, 6, 7}, Simplex{1, 2, 8});
    e.add_pair(Simplex{1, 2, 3}, Simplex{6, 7, 10});
    e.add_pair(Simplex{2, 3, 8}, Simplex{5, 6, 10});
    return e;
}

inline Complex hexagon() { return cycle_complex(6); }

/// Rotation-style pairing. The vertex partition {1,3,5},{2,4,6} is coarser
/// than what the pair correspondences generate: 6 only maps to itself, so
/// the correspondence classes are {1,3,5}, {2,4} and {6}.
inline RegularEquivalence hexagon_rotation_equiv() {
    RegularEquivalence e;
    e.vertices.merge(1, 3);
    e.vertices.merge(3, 5);
    e.vertices.merge(2, 4);
    e.vertices.merge(4, 6);
    e.add_pair(Simplex{1, 2}, Simplex{3, 4});
    e.add_pair(Simplex{2, 3}, Simplex{4, 5});
    e.add_pair(Simplex{5, 6}, Simplex{1, 6});
    return e;
}

/// Opposite edges glued with a flip: both correspondence classes have
/// three members and together cover every vertex.
inline RegularEquivalence hexagon_antipodal_equiv() {
    RegularEquivalence e;
    e.vertices.merge(1, 3);
    e.vertices.merge(3, 5);
    e.vertices.merge(2, 4);
    e.vertices.merge(4, 6);
    e.add_pair(Simplex{1, 2}, Simplex{4, 5});
    e.add_pair(Simplex{2, 3}, Simplex{5, 6});
    e.add_pair(Simplex{3, 4}, Simplex{1, 6});
    return e;
}

/// Random uniform complex: facets drawn from a small label pool.
inline Complex random_complex(std::mt19937& rng, int dim, int max_facets, int pool = 0) {
    if (pool == 0) pool = 2 * dim + 6;
    std::uniform_int_distribution<int> label(1, pool);
    std::uniform_int_distribution<int> count(1, max_facets);
    const int want = count(rng);
    std::set<Simplex> gens;
    int guard = 0;
    while (static_cast<int>(gens.size()) < want && ++guard < 50 * max_facets) {
        std::set<int> vs;
        while (static_cast<int>(vs.size()) < dim + 1) vs.insert(label(rng));
        gens.insert(Simplex(std::vector<int>(vs.begin(), vs.end())));
    }
    return Complex::from_set({gens.begin(), gens.end()});
}

/// Independent euler oracle: enumerate every subset of the vertex set and
/// count those spanned by some generator.
inline long euler_by_subsets(const Complex& k) {
    auto verts = k.vertices();
    const std::size_t n = verts.size();
    long chi = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> vs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) vs.push_back(verts[i]);
        if (k.has_simplex(Simplex(std::vector<int>(vs))))
            chi += (vs.size() % 2 == 1) ? 1 : -1;
    }
    return chi;
}

/// Independent boundary-parity oracle: count codimension-1 face incidences.
inline bool closed_by_parity(const Complex& k) {
    std::map<Simplex, int> count;
    for (const auto& g : k.generators())
        for (const auto& f : g.facets()) ++count[f];
    for (const auto& [f, c] : count)
        if (c % 2 != 0) return false;
    return true;
}

} // namespace fx
