#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harmseq/group.hpp"
#include "harmseq/search.hpp"
#include "harmseq/verify.hpp"

namespace harmseq {

struct StrategyReport {
    std::string strategy;  // golden | main1 | main2 | search
    std::map<std::string, std::string> witnesses;
    std::vector<std::string> attempts;  // per-strategy failure reasons, in cascade order
    bool certified = false;
};

enum class ConstructStatus { Found, Impossible, NotConstructed };

struct MatchedPairResult {
    ConstructStatus status = ConstructStatus::NotConstructed;
    std::optional<MatchedGroupPair> pair;
    StrategyReport report;
};

struct RHarmoniousResult {
    ConstructStatus status = ConstructStatus::NotConstructed;
    std::optional<GroupSequence> seq;
    StrategyReport report;
};

// Symmetric harmonious sequence of an odd-order group: natural generator order
// for cyclic groups, mirror-constrained backtracking otherwise. Throws
// BudgetExceededError when the search cap is hit.
GroupSequence symmetric_harmonious(const GroupPtr& h,
                                   unsigned long long budget = kDefaultBudget);

// Cyclic-extension construction: H normal odd-order, G/H cyclic of order n
// (odd, >= 5, n != 3 mod 12). x (or the lowest-index choice) generates G/H.
// Output is certified before returning.
MatchedGroupPair mext(const GroupPtr& g, const Subgroup& h,
                      std::optional<int> x = std::nullopt,
                      unsigned long long budget = kDefaultBudget);

// Split-extension construction: K a complement of the normal odd-order H,
// k_pair a certified matched pair inside K (as parent-group indices).
MatchedGroupPair brh(const GroupPtr& g, const Subgroup& k, const Subgroup& h,
                     const MatchedGroupPair& k_pair,
                     unsigned long long budget = kDefaultBudget);

// Decision cascade: built-in pairs, cyclic-extension via the abelianization,
// split-extension via factor metadata, then bounded exhaustive search.
MatchedPairResult matched_pair(const GroupPtr& g, unsigned long long budget = kDefaultBudget);

// R-harmonious driver on top of matched_pair, with a built-in order-21
// sequence and an exhaustive-search fallback.
RHarmoniousResult r_harmonious(const GroupPtr& g, unsigned long long budget = kDefaultBudget);

const char* to_string(ConstructStatus s);

}  // namespace harmseq
