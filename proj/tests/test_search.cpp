#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "stellar/canonical.hpp"
#include "stellar/search.hpp"

using namespace stellar;

TEST_CASE("identical complexes need no moves") {
    Complex k = fx::boundary_simplex(3);
    SearchResult r = bounded_equivalence_search(k, k);
    REQUIRE(r.equivalent);
    CHECK(r.script.empty());
}

TEST_CASE("isomorphic complexes need one relabeling") {
    Complex k = fx::boundary_simplex(4);
    Complex l = relabel(k, {{1, 8}, {2, 9}});
    SearchResult r = bounded_equivalence_search(k, l);
    REQUIRE(r.equivalent);
    CHECK(r.script.size() == 1);
    CHECK(r.script.front().kind == Move::Kind::Relabel);
    CHECK(apply_script(k, r.script) == l);
}

TEST_CASE("one-edge subdivision is found in one move") {
    Complex k = fx::boundary_simplex(3);
    Complex l = subdivide(k, Simplex{1, 2}, 4);
    SearchResult r = bounded_equivalence_search(k, l);
    REQUIRE(r.equivalent);
    CHECK(r.script.size() == 1);
    CHECK(apply_script(k, r.script) == l);
}

TEST_CASE("tetrahedron boundary is equivalent to the octahedron") {
    SearchResult r =
        bounded_equivalence_search(fx::boundary_simplex(4), fx::octahedron(), {10000, 0});
    REQUIRE(r.equivalent);
    CHECK(apply_script(fx::boundary_simplex(4), r.script) == fx::octahedron());
    CHECK(r.nodes_expanded < 10000);
}

TEST_CASE("search is deterministic") {
    auto run = [] {
        return bounded_equivalence_search(fx::boundary_simplex(4), fx::octahedron(), {10000, 0});
    };
    SearchResult a = run(), b = run();
    CHECK(a.nodes_expanded == b.nodes_expanded);
    CHECK(emit_script(a.script) == emit_script(b.script));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(bounded_equivalence_search(fx::boundary_simplex(3), fx::boundary_simplex(4)),
                    input_error);
}

TEST_CASE("exhausted budget reports unknown, never a false claim") {
    SearchResult r = bounded_equivalence_search(fx::boundary_simplex(4), fx::octahedron(), {1, 0});
    CHECK(!r.equivalent);
    CHECK(r.nodes_expanded <= 1);
}

TEST_CASE("scripts found for randomly perturbed complexes replay exactly") {
    std::mt19937 rng(41);
    int found = 0;
    for (int trial = 0; trial < 12; ++trial) {
        Complex k = trial % 2 == 0 ? fx::boundary_simplex(3 + trial % 3) : fx::bipyramid();
        Complex l = k;
        for (int step = 0; step < 1 + trial % 2; ++step) {
            auto faces = l.face_closure();
            std::vector<Simplex> eligible;
            for (const auto& f : faces)
                if (f.dim() >= 1) eligible.push_back(f);
            l = subdivide(l, eligible[rng() % eligible.size()], l.fresh_label());
        }
        SearchResult r = bounded_equivalence_search(k, l, {5000, 0});
        REQUIRE(r.equivalent);
        Complex replay = apply_script(k, r.script);
        CHECK(replay == l);
        CHECK(canonical_form(replay) == canonical_form(l));
        ++found;
    }
    CHECK(found == 12);
}
