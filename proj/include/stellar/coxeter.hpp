#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stellar/structure.hpp"

namespace stellar {

/// Bijection on the indexed facet set of the sphere.
struct FacetPermutation {
    std::vector<int> img;

    static FacetPermutation identity(std::size_t n);
    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }
    bool is_identity() const;
    bool operator==(const FacetPermutation&) const = default;
    auto operator<=>(const FacetPermutation&) const = default;
};

/// Function composition: (p * q)(x) = p(q(x)).
FacetPermutation compose(const FacetPermutation& p, const FacetPermutation& q);
std::vector<std::vector<int>> cycles(const FacetPermutation& p);
long perm_order(const FacetPermutation& p);
enum class Parity { Even, Odd };
Parity perm_parity(const FacetPermutation& p);

/// The permutation side of a closed stellar structure: indexed facets,
/// the pairing involution p0, and one involution per class of
/// codimension-1 simplexes of the sphere.
struct CoxeterContext {
    StellarStructure st;
    std::vector<Simplex> facets;     // sorted generators of the sphere
    SimplexClasses classes;          // classes one dimension below the facets
    FacetPermutation p0;
    std::vector<FacetPermutation> p_alpha; // indexed like classes
};

CoxeterContext coxeter_context(const StellarStructure& st);

/// p0 alone; requires a perfect pairing.
FacetPermutation pairing_permutation(const StellarStructure& st);
/// The involution swapping the two facets through each member of the class.
FacetPermutation class_permutation(const StellarStructure& st, const std::vector<Simplex>& cls);

struct FacetOrder {
    long order = 0;
    std::optional<long> r_ab; // least r with (pa*pb)^r(g) = pb(g)
    std::optional<long> r_ba; // least r with (pb*pa)^r(g) = pa(g)
};
FacetOrder order_of_facet(const CoxeterContext& cx, int a, int b, int facet);

/// lcm over facets of order_of_facet; checked against the order of the
/// composite permutation.
long m_ab(const CoxeterContext& cx, int a, int b);

struct CoxeterMatrix {
    std::vector<std::string> labels;        // "p0", then class labels
    std::vector<long> class_sizes;          // aligned with labels ("p0" -> 0)
    std::vector<std::vector<long>> m;       // orders of pairwise products
    std::vector<std::pair<int, int>> degenerate; // product was the identity
};
CoxeterMatrix coxeter_matrix(const CoxeterContext& cx);
CoxeterMatrix coxeter_matrix_serial(const CoxeterContext& cx);

struct FlatReport {
    bool flat = true;
    std::optional<int> witness; // first class whose involution misses p0
};
/// Flat = p0 commutes with every class involution (equivalently {1, p0}
/// is normal in the generated group).
FlatReport is_flat(const CoxeterContext& cx);
/// (p0 * p_alpha)^2 == 1; checked to coincide with class size <= 2.
bool flat_at(const CoxeterContext& cx, int cls);

struct SingularClass {
    int cls = 0;
    long size = 0;
    long order_on_support = 0; // orbit length on facets meeting the class
    long order_global = 0;     // order of the full permutation p0 * p_alpha
};
/// Classes with three or more members. On the facets meeting the class
/// the product p0 * p_alpha cycles with length exactly the class size;
/// untouched facets only contribute 2-cycles to the global order.
std::vector<SingularClass> singular_classes(const CoxeterContext& cx);

struct LinkCycleResult {
    enum class Kind { CaseCycle, CaseExcludedVertex, NotApplicable } kind;
    long m = 0;                // CaseCycle: order, link is a 2m-cycle
    std::vector<int> cycle;    // CaseCycle: vertices in cyclic order
    int excluded_vertex = 0;   // CaseExcludedVertex
    long r_ab = 0, r_ba = 0;   // CaseExcludedVertex: order = r_ab + r_ba + 1
};
/// For order > 2 the facet splits as i * j * l with its class members
/// through l; the link of l is either an alternating 2m-cycle or carries
/// a vertex outside both classes.
LinkCycleResult link_cycle_check(const CoxeterContext& cx, int a, int b, int facet);

struct AlternatingReport {
    bool applicable = false;      // every order(p0 * p_alpha) is even
    bool collapsible_facet = false; // some pair shares a literal codim-1 face
    bool all_alpha_even = false;
    bool consistent = false;      // no collapsible facet <=> all even
    std::string witness;
};
AlternatingReport alternating_check(const CoxeterContext& cx);

struct ClosureResult {
    bool overflow = false;
    long order = 0;
};
/// Breadth-first closure of the generated permutation group, capped.
ClosureResult group_closure(const CoxeterContext& cx, long cap);
/// Literal normality of {1, p0} inside the enumerated closure; nullopt on
/// overflow.
std::optional<bool> closure_confirms_flat(const CoxeterContext& cx, long cap);

std::string diagram_dot(const CoxeterMatrix& mx);
std::vector<std::vector<int>> diagram_components(const CoxeterMatrix& mx);

} // namespace stellar
