#pragma once

#include "stellar/canonical.hpp"
#include "stellar/moves.hpp"

namespace stellar {

struct SearchBudget {
    long max_nodes = 10000;
    int max_vertices = 0; // 0: max vertex count of the inputs plus 4
};

struct SearchResult {
    bool equivalent = false;
    MoveScript script; // verified replay K -> L when equivalent
    long nodes_expanded = 0;
};

/// Bidirectional bounded search for a stellar-move script connecting K
/// and L, deduplicating states by canonical form. Welds are tried before
/// subdivisions, so shrinking moves are preferred. A returned script is
/// always replay-verified; "not equivalent" is never claimed, only
/// "unknown" (equivalent == false) when the budget runs out.
SearchResult bounded_equivalence_search(const Complex& k, const Complex& l, SearchBudget budget = {});

} // namespace stellar
