#pragma once

#include <optional>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/equivalence.hpp"
#include "stellar/recognition.hpp"

namespace stellar {

/// The cone form a ⋆ (S/~): an apex, a sphere one dimension below the
/// represented manifold, and a regular equivalence gluing the sphere's
/// facets. Cone simplexes stay distinct; only the base is identified.
struct StellarStructure {
    int apex = 0;
    Complex sphere;
    RegularEquivalence equiv;
    std::optional<Complex> original; // the manifold this was built from
    bool closed = false;             // perfect facet pairing
    Verdict sphere_verdict = Verdict::Unknown;

    int manifold_dim() const { return sphere.dim() + 1; }
};

/// Wrap a given sphere and equivalence (fixture-style input). Validates
/// regularity and records the sphere verdict.
StellarStructure make_structure(const Complex& sphere, RegularEquivalence e,
                                std::optional<Complex> original = std::nullopt);

/// The constructive cone algorithm: star one generator from a fresh apex,
/// then absorb the remaining generators into the apex star one at a time.
/// When an absorbed generator would re-use a vertex already in the star's
/// link, a fresh ghost vertex stands in for it and the two become
/// equivalent. Facets of the final link are paired when they name the same
/// simplex of the input manifold.
StellarStructure build_structure(const Complex& m);

/// Face counts of the quotient and of the cone structure. h = classes of
/// S/~ per dimension, s = simplexes of S per dimension, q = cells of
/// a ⋆ (S/~) per dimension (q is only defined for closed structures).
struct QuotientCounts {
    std::vector<long> h;
    std::vector<long> s;
    std::vector<long> q; // empty when the structure is not closed
    long chi_quotient = 0;
};
QuotientCounts quotient_counts(const StellarStructure& st);

struct EulerRelation {
    bool ok = false;
    long chi_manifold = 0;
    long chi_quotient = 0;
    long expected_quotient = 0; // chi(M) + (-1)^(n+1)
    long chi_structure = 0;     // alternating sum of q, must equal chi(M)
};

/// Both sides computed independently: chi(M) by direct face count, the
/// quotient side from the induced class counts.
EulerRelation verify_euler_relation(const Complex& m, const StellarStructure& st);

} // namespace stellar
