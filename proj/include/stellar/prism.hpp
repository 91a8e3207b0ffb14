#pragma once

#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/equivalence.hpp"

namespace stellar {

/// The combinatorial cylinder over K: for every generator i1..ir and every
/// 1 <= k <= r the staircase simplex i1..ik jk..jr, where jv is the fresh
/// copy of v. Both vertex copies of K appear as subcomplexes.
Complex prism(const Complex& k);
/// The fresh copy labels chosen by prism, in vertex order.
std::vector<std::pair<int, int>> prism_copy_labels(const Complex& k);

struct CollapseStep {
    Simplex free_face;
    Simplex removed_with; // the unique maximal simplex through the free face
};

struct CollapseResult {
    Complex residue;
    std::vector<CollapseStep> steps;
    bool collapsible = false; // residue is a single vertex
};

/// Greedy free-face collapse, smallest pair first: repeatedly remove a
/// codimension-1 face lying in exactly one maximal simplex together with
/// that simplex. "collapsible" is trusted; a stuck residue proves nothing.
CollapseResult free_face_collapse(const Complex& k);

struct QuotientCollapseResult {
    bool collapsible = false;
    std::vector<std::pair<std::string, std::string>> steps;
    std::vector<long> residue_cells; // alive classes per dimension
};

/// The same greedy collapse on the class-level face poset of S/~: cells
/// are induced-equivalence classes, incidence counted with multiplicity
/// through class representatives.
QuotientCollapseResult collapse_quotient(const Complex& s, const RegularEquivalence& e);

} // namespace stellar
