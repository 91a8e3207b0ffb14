#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "stellar/canonical.hpp"
#include "stellar/moves.hpp"
#include "stellar/prism.hpp"

using namespace stellar;

TEST_CASE("prism over an edge is the split square") {
    Complex p = prism(Complex::from_set({Simplex{1, 2}}));
    CHECK(p == Complex::from_set({Simplex{1, 3, 4}, Simplex{1, 2, 4}}));
    CHECK(euler(p) == 1);
}

TEST_CASE("prism over a vertex is an edge") {
    CHECK(prism(Complex::from_set({Simplex{1}})) == Complex::from_set({Simplex{1, 2}}));
}

TEST_CASE("prism contains both vertex copies") {
    Complex k = fx::bipyramid();
    Complex p = prism(k);
    std::map<int, int> copy;
    for (auto [v, j] : prism_copy_labels(k)) copy[v] = j;
    for (const auto& g : k.generators()) {
        CHECK(p.has_simplex(g));
        std::vector<int> shifted;
        for (int v : g.vertices()) shifted.push_back(copy.at(v));
        CHECK(p.has_simplex(Simplex(std::move(shifted))));
    }
}

TEST_CASE("prism preserves the euler characteristic") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        Complex k = fx::random_complex(rng, 1 + trial % 3, 8);
        CHECK(euler(prism(k)) == euler(k));
    }
    CHECK(euler(prism(fx::torus7())) == 0);
}

TEST_CASE("the prism agrees with the subdivision construction on an edge") {
    // subdivide the cone 3 * (1 2) at its cone edges, larger base vertex
    // first, and drop the apex star: the remainder is the prism with the
    // fresh labels standing for the vertex copies
    Complex coned = Complex::from_set({Simplex{1, 2, 3}});
    Complex l = subdivide(coned, Simplex{2, 3}, 4);
    l = subdivide(l, Simplex{1, 3}, 5);
    Complex q = star_rest(Simplex{3}, l).rest;
    Complex p = prism(Complex::from_set({Simplex{1, 2}}));
    CHECK(relabel(q, {{5, 3}}) == p);
    CHECK(canonical_form(q) == canonical_form(p));
}

TEST_CASE("solid triangle collapses to a vertex") {
    CollapseResult r = free_face_collapse(fx::solid_simplex(3));
    CHECK(r.collapsible);
    CHECK(r.residue == Complex::from_set({Simplex{3}}));
    REQUIRE(!r.steps.empty());
    CHECK(r.steps.front().free_face == Simplex{1, 2});
    CHECK(r.steps.front().removed_with == Simplex{1, 2, 3});
}

TEST_CASE("the circle does not collapse") {
    CollapseResult r = free_face_collapse(fx::boundary_simplex(3));
    CHECK(!r.collapsible);
    CHECK(r.steps.empty());
    CHECK(r.residue == fx::boundary_simplex(3));
}

TEST_CASE("collapse is deterministic") {
    auto a = free_face_collapse(fx::solid_simplex(4));
    auto b = free_face_collapse(fx::solid_simplex(4));
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].free_face == b.steps[i].free_face);
        CHECK(a.steps[i].removed_with == b.steps[i].removed_with);
    }
}

TEST_CASE("collapsible complexes stay collapsible after prisming") {
    std::vector<Complex> fixtures{
        fx::solid_simplex(3),
        Complex::from_set({Simplex{1, 2, 4}, Simplex{1, 3, 4}, Simplex{2, 3, 4}}),
        cone(9, fx::cycle_complex(4)),
    };
    for (const Complex& k : fixtures) {
        REQUIRE(free_face_collapse(k).collapsible);
        CHECK(free_face_collapse(prism(k)).collapsible);
    }
}

TEST_CASE("the quotient disk collapses to a point") {
    QuotientCollapseResult r = collapse_quotient(fx::bipyramid(), fx::bipyramid_equiv());
    CHECK(r.collapsible);
    CHECK(r.residue_cells == std::vector<long>{1, 0, 0});
    CHECK(!r.steps.empty());
}

TEST_CASE("the projective-plane quotient does not collapse") {
    QuotientCollapseResult r = collapse_quotient(fx::example2_sphere(), fx::example2_equiv());
    CHECK(!r.collapsible);
}

TEST_CASE("plain collapse agrees with the trivial quotient") {
    QuotientCollapseResult q = collapse_quotient(fx::solid_simplex(3), RegularEquivalence{});
    CHECK(q.collapsible);
    CHECK(q.steps.size() == free_face_collapse(fx::solid_simplex(3)).steps.size());
}
