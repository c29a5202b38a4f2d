#pragma once

#include <cstdint>
#include <string>

#include "dtk/group.hpp"

namespace dtk {

/// Parses 1-based cycle notation such as "(1,2,3)(4,5)"; "()" is the
/// identity. Errors carry the offending position.
Permutation parse_cycles(const std::string& text, std::size_t degree);

/// Builds a group from a specification string:
///   - named builders: "sym:n", "cyclic:n", "dihedral:n" (order 2n),
///     "paper:ex1", "paper:ex2", "paper:ex3";
///   - an inline JSON object {"degree": n, "generators": ["(1,2)", ...]};
///   - a path to a JSON file with the same schema.
/// The paper builders verify their defining relations at build time.
PermGroup build_group(const std::string& spec, std::uint64_t order_cap = kDefaultOrderCap);

}  // namespace dtk
