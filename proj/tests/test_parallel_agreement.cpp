#include "doctest.h"

#include "fixtures.hpp"
#include "stellar/coxeter.hpp"
#include "stellar/enumerate.hpp"
#include "stellar/moves.hpp"
#include "stellar/parallel.hpp"
#include "stellar/recognition.hpp"
#include "stellar/structure.hpp"

using namespace stellar;

namespace {

// a 3-sphere refined until it has a few hundred facets
Complex refined_sphere(int rounds) {
    Complex m = fx::boundary_simplex(5);
    for (int i = 0; i < rounds; ++i) {
        std::vector<Simplex> edges;
        for (const auto& f : m.face_closure())
            if (f.dim() == 1) edges.push_back(f);
        m = subdivide(m, edges[edges.size() / 2], m.fresh_label());
    }
    return m;
}

} // namespace

TEST_CASE("parallel and serial manifold scans agree") {
    Complex m = refined_sphere(12);
    ManifoldReport par = is_stellar_manifold(m);
    ManifoldReport ser = is_stellar_manifold_serial(m);
    CHECK(par.verdict == ser.verdict);
    REQUIRE(par.links.size() == ser.links.size());
    for (std::size_t i = 0; i < par.links.size(); ++i) {
        CHECK(par.links[i].vertex == ser.links[i].vertex);
        CHECK(par.links[i].ok == ser.links[i].ok);
    }
}

TEST_CASE("parallel and serial coxeter matrices agree") {
    for (const Complex& m : {fx::boundary_simplex(4), fx::torus7()}) {
        StellarStructure st = build_structure(m);
        CoxeterContext cx = coxeter_context(st);
        CoxeterMatrix par = coxeter_matrix(cx);
        CoxeterMatrix ser = coxeter_matrix_serial(cx);
        CHECK(par.labels == ser.labels);
        CHECK(par.m == ser.m);
        CHECK(par.degenerate == ser.degenerate);
    }
}

TEST_CASE("parallel and serial enumerations agree on the octahedron") {
    auto ser = enumerate_regular_equivalences_serial(fx::octahedron());
    auto par = enumerate_regular_equivalences(fx::octahedron(), {true, 0});
    REQUIRE(ser.size() == par.size());
    auto universe = fx::octahedron().vertices();
    for (std::size_t i = 0; i < ser.size(); ++i) {
        CHECK(ser[i].facet_pairs == par[i].facet_pairs);
        CHECK(ser[i].vertices.merges(universe) == par[i].vertices.merges(universe));
    }
}
