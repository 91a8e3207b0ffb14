#pragma once

#include <cstddef>

#include "stellar/equivalence.hpp"

namespace stellar {

struct EnumOptions {
    bool parallel = true;
    std::size_t limit = 0; // 0: no limit
};

/// Exhaustively enumerate the regular equivalences on a sphere that pair
/// every facet: all perfect matchings of the facet set, all vertex
/// bijections per pair, vertex classes closed over the chosen bijections,
/// keeping exactly those where no facet carries two equivalent vertices.
/// Output order is deterministic and independent of the thread count.
std::vector<RegularEquivalence> enumerate_regular_equivalences(const Complex& sphere,
                                                               const EnumOptions& opts = {});
std::vector<RegularEquivalence> enumerate_regular_equivalences_serial(const Complex& sphere,
                                                                      std::size_t limit = 0);

} // namespace stellar
