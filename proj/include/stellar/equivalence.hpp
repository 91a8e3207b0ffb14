#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

/// Union-find partition of integer vertex labels; unmentioned labels are
/// singletons.
class VertexPartition {
public:
    void merge(int a, int b);
    int rep(int v) const;
    bool same(int a, int b) const { return rep(a) == rep(b); }
    bool trivial() const;

    /// Classes restricted to the given universe, sorted by least member;
    /// singletons included.
    std::vector<std::vector<int>> classes(const std::vector<int>& universe) const;
    /// Minimal merge list (rep, other) reproducing the partition on the
    /// universe.
    std::vector<std::pair<int, int>> merges(const std::vector<int>& universe) const;

private:
    mutable std::map<int, int> parent_;
};

/// A vertex partition plus a partial pairing of facets, as used to glue
/// the boundary sphere of a stellar structure.
struct RegularEquivalence {
    VertexPartition vertices;
    std::vector<std::pair<Simplex, Simplex>> facet_pairs; // normalized, sorted

    void add_pair(const Simplex& g, const Simplex& p);
    std::optional<Simplex> partner(const Simplex& g) const;
    bool empty() const { return facet_pairs.empty() && vertices.trivial(); }
};

/// Checks the two regularity conditions: no generator carries two
/// equivalent vertices, and every pair admits the vertex bijection.
/// Returns human-readable violations; empty means ok.
std::vector<std::string> validate_regular(const Complex& s, const RegularEquivalence& e);

/// The vertex bijection g -> p induced by the partition: each vertex maps
/// to the unique equal-or-equivalent vertex of p. Throws input_error when
/// ill-defined.
std::map<int, int> pair_vertex_map(const Simplex& g, const Simplex& p, const VertexPartition& vp);

/// Classes of one fixed dimension, each sorted, classes ordered by least
/// member.
using SimplexClasses = std::vector<std::vector<Simplex>>;

/// Partition of the d-simplexes of S induced by the equivalence: d = 0
/// returns the vertex classes; for d >= 1 it is the transitive closure of
/// the correspondences carried by the facet pairs.
SimplexClasses induced_equivalence(const Complex& s, const RegularEquivalence& e, int d);

/// Classes of d-simplexes under the closure of the facet-pair
/// correspondences alone. For d >= 1 this equals induced_equivalence; at
/// d = 0 it can be finer than the vertex partition, and it is the class
/// set the facet involutions act on.
SimplexClasses correspondence_classes(const Complex& s, const RegularEquivalence& e, int d);

/// All induced partitions of S, one per dimension 0..dim(S), with lookup.
struct QuotientCells {
    int dim = -1;
    std::vector<SimplexClasses> classes;           // [d][class] members
    std::vector<std::map<Simplex, int>> class_of;  // [d]
    std::vector<long> h() const;                   // class counts per dimension
};
QuotientCells quotient_cells(const Complex& s, const RegularEquivalence& e);

/// When the quotient embeds as an honest complex (distinct cells receive
/// distinct vertex-class sets in every dimension), return it with vertices
/// renamed to class representatives; otherwise nullopt.
std::optional<Complex> quotient_as_complex(const Complex& s, const RegularEquivalence& e);

} // namespace stellar
