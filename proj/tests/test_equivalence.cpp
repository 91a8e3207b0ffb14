#include "doctest.h"

#include "fixtures.hpp"
#include "stellar/equivalence.hpp"
#include "stellar/errors.hpp"

using namespace stellar;

TEST_CASE("the bipyramid apex identification is regular") {
    CHECK(validate_regular(fx::bipyramid(), fx::bipyramid_equiv()).empty());
}

TEST_CASE("merging two vertices of one facet is rejected") {
    RegularEquivalence e;
    e.vertices.merge(3, 4);
    auto bad = validate_regular(fx::boundary_simplex(4), e);
    REQUIRE(!bad.empty());
    CHECK(bad.front().find("(1 3 4)") != std::string::npos);
}

TEST_CASE("the empty equivalence is regular") {
    CHECK(validate_regular(fx::boundary_simplex(4), RegularEquivalence{}).empty());
}

TEST_CASE("pairs must admit a vertex bijection") {
    RegularEquivalence e;
    e.add_pair(Simplex{1, 2, 4}, Simplex{1, 3, 5}); // 2 has no counterpart
    CHECK(!validate_regular(fx::bipyramid(), e).empty());
}

TEST_CASE("the projective-plane identification is regular") {
    CHECK(validate_regular(fx::example2_sphere(), fx::example2_equiv()).empty());
    CHECK(validate_regular(fx::hexagon(), fx::hexagon_rotation_equiv()).empty());
    CHECK(validate_regular(fx::hexagon(), fx::hexagon_antipodal_equiv()).empty());
}

TEST_CASE("pair vertex map") {
    auto vmap = pair_vertex_map(Simplex{1, 2, 4}, Simplex{1, 2, 5}, fx::bipyramid_equiv().vertices);
    CHECK(vmap == std::map<int, int>{{1, 1}, {2, 2}, {4, 5}});
    auto e2 = fx::example2_equiv();
    auto m2 = pair_vertex_map(Simplex{3, 7, 8}, Simplex{1, 5, 10}, e2.vertices);
    CHECK(m2 == std::map<int, int>{{3, 10}, {7, 1}, {8, 5}});
}

TEST_CASE("induced classes of the bipyramid") {
    auto d1 = induced_equivalence(fx::bipyramid(), fx::bipyramid_equiv(), 1);
    REQUIRE(d1.size() == 6);
    std::vector<std::vector<Simplex>> expected{
        {Simplex{1, 2}},
        {Simplex{1, 3}},
        {Simplex{1, 4}, Simplex{1, 5}},
        {Simplex{2, 3}},
        {Simplex{2, 4}, Simplex{2, 5}},
        {Simplex{3, 4}, Simplex{3, 5}},
    };
    CHECK(d1 == expected);

    auto d0 = induced_equivalence(fx::bipyramid(), fx::bipyramid_equiv(), 0);
    REQUIRE(d0.size() == 4);
    CHECK(d0.back() == std::vector<Simplex>{Simplex{4}, Simplex{5}});

    auto d2 = induced_equivalence(fx::bipyramid(), fx::bipyramid_equiv(), 2);
    CHECK(d2.size() == 3);
    for (const auto& cls : d2) CHECK(cls.size() == 2);
}

TEST_CASE("induced classes of the empty equivalence are singletons") {
    auto d1 = induced_equivalence(fx::bipyramid(), RegularEquivalence{}, 1);
    CHECK(d1.size() == 9);
    for (const auto& cls : d1) CHECK(cls.size() == 1);
}

TEST_CASE("induced vertex classes of the projective-plane sphere") {
    auto d0 = induced_equivalence(fx::example2_sphere(), fx::example2_equiv(), 0);
    REQUIRE(d0.size() == 5);
    CHECK(d0[0] == std::vector<Simplex>{Simplex{1}, Simplex{7}});
    CHECK(d0[1] == std::vector<Simplex>{Simplex{2}, Simplex{6}});
    CHECK(d0[2] == std::vector<Simplex>{Simplex{3}, Simplex{10}});
    CHECK(d0[3] == std::vector<Simplex>{Simplex{4}, Simplex{9}});
    CHECK(d0[4] == std::vector<Simplex>{Simplex{5}, Simplex{8}});
    // every edge class of this identification has exactly two members
    auto d1 = induced_equivalence(fx::example2_sphere(), fx::example2_equiv(), 1);
    CHECK(d1.size() == 12);
    for (const auto& cls : d1) CHECK(cls.size() == 2);
}

TEST_CASE("induced equivalence rejects out-of-range dimensions") {
    CHECK_THROWS_AS(induced_equivalence(fx::bipyramid(), fx::bipyramid_equiv(), 3), input_error);
    CHECK_THROWS_AS(induced_equivalence(fx::bipyramid(), fx::bipyramid_equiv(), -1), input_error);
}

TEST_CASE("quotient of the bipyramid embeds as a complex") {
    auto q = quotient_as_complex(fx::bipyramid(), fx::bipyramid_equiv());
    REQUIRE(q.has_value());
    CHECK(*q == Complex::from_set({Simplex{1, 2, 4}, Simplex{1, 3, 4}, Simplex{2, 3, 4}}));
}

TEST_CASE("quotient of the projective-plane sphere does not embed") {
    CHECK(!quotient_as_complex(fx::example2_sphere(), fx::example2_equiv()).has_value());
}

TEST_CASE("hexagon class sizes") {
    auto d0 = induced_equivalence(fx::hexagon(), fx::hexagon_rotation_equiv(), 0);
    REQUIRE(d0.size() == 2);
    CHECK(d0[0].size() == 3);
    CHECK(d0[1].size() == 3);
}

TEST_CASE("correspondence classes can be finer than the vertex partition") {
    auto rot = correspondence_classes(fx::hexagon(), fx::hexagon_rotation_equiv(), 0);
    REQUIRE(rot.size() == 3);
    CHECK(rot[0] == std::vector<Simplex>{Simplex{1}, Simplex{3}, Simplex{5}});
    CHECK(rot[1] == std::vector<Simplex>{Simplex{2}, Simplex{4}});
    CHECK(rot[2] == std::vector<Simplex>{Simplex{6}});

    auto anti = correspondence_classes(fx::hexagon(), fx::hexagon_antipodal_equiv(), 0);
    REQUIRE(anti.size() == 2);
    CHECK(anti[0].size() == 3);
    CHECK(anti[1].size() == 3);

    // in dimension >= 1 the two notions coincide
    CHECK(correspondence_classes(fx::bipyramid(), fx::bipyramid_equiv(), 1) ==
          induced_equivalence(fx::bipyramid(), fx::bipyramid_equiv(), 1));
}
