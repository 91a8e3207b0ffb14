#pragma once

#include <compare>
#include <map>
#include <string>

#include "stellar/complex.hpp"

namespace stellar {

/// Label-independent fingerprint of a complex. Two complexes have equal
/// keys exactly when some vertex relabeling maps one generator set onto
/// the other. to_canonical records one witness labeling (vertex -> rank).
struct CanonicalForm {
    std::string key;
    std::map<int, int> to_canonical;

    bool operator==(const CanonicalForm& o) const { return key == o.key; }
    auto operator<=>(const CanonicalForm& o) const { return key <=> o.key; }
};

CanonicalForm canonical_form(const Complex& k);

} // namespace stellar
