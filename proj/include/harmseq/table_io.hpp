#pragma once

#include <iosfwd>
#include <string>

#include "harmseq/group.hpp"

namespace harmseq {

// Cayley-table text format: line 1 holds n, line 2 the n element names,
// then n lines of n whitespace-separated indices (row a lists products a*b).
// The identity must be index 0; the loader validates the full group invariant
// set and throws InputError otherwise.
GroupPtr load_cayley_table(std::istream& in);
GroupPtr load_cayley_table_file(const std::string& path);
void write_cayley_table(std::ostream& out, const FiniteGroup& g);

}  // namespace harmseq
