#include "doctest.h"

#include "fixtures.hpp"
#include "stellar/coxeter.hpp"

using namespace stellar;

namespace {

StellarStructure example1() { return make_structure(fx::bipyramid(), fx::bipyramid_equiv()); }
StellarStructure example2() {
    return make_structure(fx::example2_sphere(), fx::example2_equiv());
}
StellarStructure hexagon_rotation() {
    return make_structure(fx::hexagon(), fx::hexagon_rotation_equiv());
}
StellarStructure hexagon_antipodal() {
    return make_structure(fx::hexagon(), fx::hexagon_antipodal_equiv());
}

int class_index(const CoxeterContext& cx, const std::vector<Simplex>& cls) {
    for (std::size_t i = 0; i < cx.classes.size(); ++i)
        if (cx.classes[i] == cls) return static_cast<int>(i);
    FAIL("class not found");
    return -1;
}

// independent oracle: iterate the composite until the facet returns
long brute_orbit_order(const FacetPermutation& pa, const FacetPermutation& pb, int g) {
    long n = 0;
    int cur = g;
    do {
        cur = pa(pb(cur));
        ++n;
    } while (cur != g);
    return n;
}

} // namespace

TEST_CASE("permutation utilities") {
    FacetPermutation id = FacetPermutation::identity(6);
    CHECK(perm_order(id) == 1);
    CHECK(perm_parity(id) == Parity::Even);
    FacetPermutation rot{{1, 2, 0, 3, 4, 5}};
    CHECK(perm_order(rot) == 3);
    CHECK(perm_parity(rot) == Parity::Even);
    CHECK(compose(rot, rot).img == std::vector<int>{2, 0, 1, 3, 4, 5});
}

TEST_CASE("the pairing involution of the worked disk") {
    StellarStructure st = example1();
    FacetPermutation p0 = pairing_permutation(st);
    // facets sorted: (124) (125) (134) (135) (234) (235)
    CHECK(p0.img == std::vector<int>{1, 0, 3, 2, 5, 4});
    CHECK(perm_order(p0) == 2);
    CHECK(perm_parity(p0) == Parity::Odd);
    CHECK(compose(p0, p0).is_identity());
}

TEST_CASE("class involutions of the worked disk") {
    CoxeterContext cx = coxeter_context(example1());
    REQUIRE(cx.classes.size() == 6);

    int a12 = class_index(cx, {Simplex{1, 2}});
    CHECK(cx.p_alpha[a12].img == std::vector<int>{1, 0, 2, 3, 4, 5});

    int beta = class_index(cx, {Simplex{2, 4}, Simplex{2, 5}});
    CHECK(cx.p_alpha[beta].img == std::vector<int>{4, 5, 2, 3, 0, 1});

    for (const auto& pa : cx.p_alpha) CHECK(compose(pa, pa).is_identity());
    CHECK(perm_order(compose(cx.p0, cx.p_alpha[a12])) == 2);
}

TEST_CASE("facet orders and return exponents") {
    CoxeterContext cx = coxeter_context(example1());
    int a12 = class_index(cx, {Simplex{1, 2}});
    int beta = class_index(cx, {Simplex{2, 4}, Simplex{2, 5}});
    const int g124 = 0; // facets sorted: (124) first

    FacetOrder fo = order_of_facet(cx, a12, beta, g124);
    CHECK(fo.order == 4);
    CHECK(fo.order == brute_orbit_order(cx.p_alpha[a12], cx.p_alpha[beta], g124));
    REQUIRE(fo.r_ab.has_value());
    REQUIRE(fo.r_ba.has_value());
    CHECK(*fo.r_ab == 1);
    CHECK(*fo.r_ba == 2);

    const int g134 = 2;
    CHECK(order_of_facet(cx, a12, beta, g134).order == 1);

    CHECK(m_ab(cx, a12, beta) == 4);
    int gamma = class_index(cx, {Simplex{3, 4}, Simplex{3, 5}});
    // (1 2) and the gamma class never meet a common facet
    CHECK(m_ab(cx, a12, gamma) <= 2);
}

TEST_CASE("coxeter matrix of the worked disk") {
    CoxeterContext cx = coxeter_context(example1());
    CoxeterMatrix mx = coxeter_matrix(cx);
    REQUIRE(mx.labels.size() == 7);
    CHECK(mx.labels.front() == "p0");
    for (std::size_t i = 0; i < mx.labels.size(); ++i) CHECK(mx.m[i][i] == 1);
    for (std::size_t j = 1; j < mx.labels.size(); ++j) CHECK(mx.m[0][j] == 2);
    CHECK(mx.degenerate.empty());

    // the named sub-system: p0, the (1 2) class, beta, gamma
    int a12 = class_index(cx, {Simplex{1, 2}});
    int beta = class_index(cx, {Simplex{2, 4}, Simplex{2, 5}});
    int gamma = class_index(cx, {Simplex{3, 4}, Simplex{3, 5}});
    for (int j : {a12 + 1, beta + 1, gamma + 1}) CHECK(mx.m[0][j] == 2);
    CHECK(mx.m[a12 + 1][beta + 1] == 4);
    CHECK(mx.m[a12 + 1][gamma + 1] == 2); // no facet meets both classes
    CHECK(mx.m[beta + 1][gamma + 1] == 3);
}

TEST_CASE("flatness of the worked examples") {
    CoxeterContext ex1 = coxeter_context(example1());
    CHECK(is_flat(ex1).flat);
    for (std::size_t c = 0; c < ex1.classes.size(); ++c) CHECK(flat_at(ex1, static_cast<int>(c)));
    CHECK(singular_classes(ex1).empty());

    CoxeterContext ex2 = coxeter_context(example2());
    CHECK(is_flat(ex2).flat);
    CHECK(singular_classes(ex2).empty());
}

TEST_CASE("the rotated hexagon is singular and not flat") {
    CoxeterContext cx = coxeter_context(hexagon_rotation());
    // the involutions act on the correspondence classes, which are finer
    // here than the vertex partition: {1,3,5}, {2,4}, {6}
    REQUIRE(cx.classes.size() == 3);
    CHECK(cx.classes[0].size() == 3);
    CHECK(cx.classes[1].size() == 2);
    CHECK(cx.classes[2].size() == 1);

    FlatReport fr = is_flat(cx);
    CHECK(!fr.flat);
    REQUIRE(fr.witness.has_value());
    CHECK(!flat_at(cx, *fr.witness));
    CHECK(flat_at(cx, 1));
    CHECK(flat_at(cx, 2));

    auto sing = singular_classes(cx);
    REQUIRE(sing.size() == 1);
    CHECK(sing[0].size == 3);
    CHECK(sing[0].order_on_support == 3);
    CHECK(sing[0].order_global == 3); // every edge meets an odd vertex
}

TEST_CASE("the antipodal hexagon has two singular classes") {
    CoxeterContext cx = coxeter_context(hexagon_antipodal());
    REQUIRE(cx.classes.size() == 2);
    CHECK(cx.classes[0].size() == 3);
    CHECK(cx.classes[1].size() == 3);
    CHECK(!is_flat(cx).flat);
    auto sing = singular_classes(cx);
    REQUIRE(sing.size() == 2);
    for (const auto& sc : sing) {
        CHECK(sc.size == 3);
        CHECK(sc.order_on_support == 3);
        CHECK(sc.order_global == 3);
    }
}

TEST_CASE("link cycle analysis") {
    CoxeterContext ex1 = coxeter_context(example1());
    int a12 = class_index(ex1, {Simplex{1, 2}});
    int beta = class_index(ex1, {Simplex{2, 4}, Simplex{2, 5}});
    LinkCycleResult r = link_cycle_check(ex1, a12, beta, 0);
    CHECK(r.kind == LinkCycleResult::Kind::CaseExcludedVertex);
    CHECK(r.excluded_vertex == 3);
    CHECK(r.r_ab == 1);
    CHECK(r.r_ba == 2);

    // order <= 2 is out of scope
    int gamma = class_index(ex1, {Simplex{3, 4}, Simplex{3, 5}});
    CHECK(link_cycle_check(ex1, a12, gamma, 0).kind == LinkCycleResult::Kind::NotApplicable);

    // on the antipodal hexagon the two classes cover the whole link
    CoxeterContext hx = coxeter_context(hexagon_antipodal());
    bool saw_cycle = false;
    for (int g = 0; g < static_cast<int>(hx.facets.size()); ++g) {
        LinkCycleResult hr = link_cycle_check(hx, 0, 1, g);
        if (hr.kind == LinkCycleResult::Kind::CaseCycle) {
            saw_cycle = true;
            CHECK(hr.m == 3);
            CHECK(hr.cycle.size() == 6);
        }
    }
    CHECK(saw_cycle);

    // the rotation pairing leaves vertex 6 outside both classes
    CoxeterContext hr_ctx = coxeter_context(hexagon_rotation());
    LinkCycleResult rot = link_cycle_check(hr_ctx, 0, 1, 0);
    if (rot.kind != LinkCycleResult::Kind::NotApplicable) {
        CHECK(rot.kind == LinkCycleResult::Kind::CaseExcludedVertex);
        CHECK(rot.excluded_vertex == 6);
    }
}

TEST_CASE("alternating-group criterion") {
    AlternatingReport ex1 = alternating_check(coxeter_context(example1()));
    CHECK(ex1.applicable);
    CHECK(ex1.collapsible_facet); // (1 2 4) ~ (1 2 5) share (1 2)
    CHECK(!ex1.all_alpha_even);   // the (1 2) involution is a transposition
    CHECK(ex1.consistent);

    AlternatingReport ex2 = alternating_check(coxeter_context(example2()));
    CHECK(ex2.applicable);
    CHECK(!ex2.collapsible_facet);
    CHECK(ex2.all_alpha_even);
    CHECK(ex2.consistent);
}

TEST_CASE("group closure and the normality oracle") {
    CoxeterContext ex1 = coxeter_context(example1());
    ClosureResult cr = group_closure(ex1, 100000);
    CHECK(!cr.overflow);
    CHECK(cr.order <= 48);
    auto normal = closure_confirms_flat(ex1, 100000);
    REQUIRE(normal.has_value());
    CHECK(*normal == is_flat(ex1).flat);

    for (const auto& st : {hexagon_rotation(), hexagon_antipodal()}) {
        CoxeterContext hx = coxeter_context(st);
        auto hx_normal = closure_confirms_flat(hx, 100000);
        REQUIRE(hx_normal.has_value());
        CHECK(*hx_normal == is_flat(hx).flat);
    }

    CHECK(group_closure(ex1, 1).overflow);
}

TEST_CASE("diagram output") {
    CoxeterMatrix mx = coxeter_matrix(coxeter_context(example1()));
    std::string dot = diagram_dot(mx);
    CHECK(dot.find("graph coxeter") != std::string::npos);
    CHECK(dot.find("label=\"4\"") != std::string::npos); // the order-4 arcs
    CHECK(dot.find("p0") != std::string::npos);

    CoxeterMatrix all2;
    all2.labels = {"p0", "x", "y"};
    all2.class_sizes = {0, 1, 1};
    all2.m = {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
    std::string edgeless = diagram_dot(all2);
    CHECK(edgeless.find("--") == std::string::npos);
    CHECK(diagram_components(all2).size() == 3);
}

TEST_CASE("analysis requires a closed structure") {
    StellarStructure open = make_structure(fx::bipyramid(), RegularEquivalence{});
    CHECK_THROWS_AS(coxeter_context(open), input_error);
}
