#include "doctest.h"

#include "fixtures.hpp"
#include "stellar/coxeter.hpp"
#include "stellar/enumerate.hpp"

using namespace stellar;

TEST_CASE("the tetrahedron boundary admits no perfect identification") {
    CHECK(enumerate_regular_equivalences_serial(fx::boundary_simplex(4)).empty());
}

TEST_CASE("the bipyramid admits exactly the apex identification") {
    auto found = enumerate_regular_equivalences_serial(fx::bipyramid());
    REQUIRE(found.size() == 1);
    CHECK(found.front().facet_pairs == fx::bipyramid_equiv().facet_pairs);
    CHECK(found.front().vertices.same(4, 5));
    CHECK(!found.front().vertices.same(1, 2));
}

TEST_CASE("every enumerated equivalence is regular and closed") {
    for (const Complex& s :
         {fx::cycle_complex(4), fx::cycle_complex(6), fx::bipyramid(), fx::octahedron()}) {
        auto found = enumerate_regular_equivalences_serial(s);
        for (const auto& e : found) {
            CHECK(validate_regular(s, e).empty());
            CHECK(2 * e.facet_pairs.size() == s.size());
        }
    }
}

TEST_CASE("hexagon identifications include a three-member class") {
    auto found = enumerate_regular_equivalences_serial(fx::hexagon());
    CHECK(!found.empty());
    bool saw_three = false;
    bool saw_three_with_order_three = false;
    for (const auto& e : found) {
        StellarStructure st = make_structure(fx::hexagon(), e);
        CoxeterContext cx = coxeter_context(st);
        for (const auto& sc : singular_classes(cx)) {
            if (sc.size == 3) {
                saw_three = true;
                if (sc.order_on_support == 3) saw_three_with_order_three = true;
                CHECK(!is_flat(cx).flat);
            }
        }
    }
    CHECK(saw_three);
    CHECK(saw_three_with_order_three);
}

TEST_CASE("octahedron identifications reach class size four") {
    auto found = enumerate_regular_equivalences_serial(fx::octahedron());
    CHECK(!found.empty());
    long max_class = 0;
    for (const auto& e : found) {
        StellarStructure st = make_structure(fx::octahedron(), e);
        CoxeterContext cx = coxeter_context(st);
        for (const auto& cls : cx.classes) max_class = std::max(max_class, (long)cls.size());
    }
    CHECK(max_class >= 4);
}

TEST_CASE("parallel enumeration matches the serial order") {
    for (const Complex& s : {fx::cycle_complex(6), fx::bipyramid()}) {
        auto serial = enumerate_regular_equivalences_serial(s);
        auto parallel = enumerate_regular_equivalences(s, {true, 0});
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].facet_pairs == parallel[i].facet_pairs);
            CHECK(serial[i].vertices.merges(s.vertices()) ==
                  parallel[i].vertices.merges(s.vertices()));
        }
    }
}

TEST_CASE("odd facet counts are rejected") {
    CHECK_THROWS_AS(enumerate_regular_equivalences_serial(fx::cycle_complex(5)), input_error);
}
