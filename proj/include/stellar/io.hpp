#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/equivalence.hpp"
#include "stellar/structure.hpp"

namespace stellar {

/// Line-oriented complex file: '#' comments, optional `dim d`, one
/// `simplex v1 ... vk` per generator, `vequiv a b` vertex merges and
/// `gequiv v.. | w..` facet pairs.
struct ParsedComplex {
    Complex complex;
    RegularEquivalence equiv;
    bool has_equiv = false;
    std::optional<int> declared_dim;
    std::vector<std::string> warnings;
};

ParsedComplex parse_complex_text(const std::string& text);
std::string emit_complex_text(const Complex& k, const RegularEquivalence* e = nullptr);

/// Structure files embed the original manifold (msimplex lines), the apex,
/// the sphere and the equivalence, so downstream commands recompute nothing.
std::string emit_structure_text(const StellarStructure& st);
StellarStructure parse_structure_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace stellar
