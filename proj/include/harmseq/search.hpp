#pragma once

#include <vector>

#include "harmseq/group.hpp"

namespace harmseq {

enum class SearchStatus { Found, NotExists, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::NotExists;
    std::vector<int> sequence;    // present iff Found
    std::vector<int> sequence_r;  // companion sequence for matched searches
    unsigned long long nodes_explored = 0;
    unsigned long long budget = 0;
};

inline constexpr unsigned long long kDefaultBudget = 10'000'000ULL;
inline constexpr int kMaxSearchOrder = 128;

// Depth-first backtracking searches over element bitsets. Deterministic for a
// fixed budget and worker count: children are tried in ascending element
// order; with several workers the top-level branches are split round-robin and
// a Found from the lowest branch wins. NotExists is reported only when the
// whole pruned tree was exhausted strictly under budget. Groups of order
// > kMaxSearchOrder are rejected.
SearchOutcome search_harmonious(const GroupPtr& g,
                                unsigned long long budget = kDefaultBudget, int workers = 1);
SearchOutcome search_r_harmonious(const GroupPtr& g,
                                  unsigned long long budget = kDefaultBudget, int workers = 1);
SearchOutcome search_symmetric_harmonious(const GroupPtr& g,
                                          unsigned long long budget = kDefaultBudget,
                                          int workers = 1);
// Two-phase search: a harmonious sequence with full product 1, then an
// R-harmonious companion with shared endpoints and full product 1.
SearchOutcome search_matched(const GroupPtr& g,
                             unsigned long long budget = kDefaultBudget, int workers = 1);

const char* to_string(SearchStatus s);

}  // namespace harmseq
