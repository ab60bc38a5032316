#pragma once

#include <string>
#include <vector>

#include "harmseq/group.hpp"

namespace harmseq {

struct GroupSequence {
    GroupPtr group;
    std::vector<int> items;
};

// A harmonious sequence and an R-harmonious sequence sharing first and last
// terms, each with full ordered product equal to the identity.
struct MatchedGroupPair {
    GroupPtr group;
    std::vector<int> h_seq;  // length |G|
    std::vector<int> r_seq;  // length |G|-1
};

// Cyclic consecutive products seq[i]*seq[i+1], wrap seq[last]*seq[first].
std::vector<int> consecutive_products(const FiniteGroup& g, const std::vector<int>& seq);

// Each predicate reports the first violated condition through `why` when given.
bool is_harmonious(const FiniteGroup& g, const std::vector<int>& seq, std::string* why = nullptr);
bool is_r_harmonious(const FiniteGroup& g, const std::vector<int>& seq, std::string* why = nullptr);
bool is_symmetric_harmonious(const FiniteGroup& g, const std::vector<int>& seq,
                             std::string* why = nullptr);
bool is_matched_pair(const FiniteGroup& g, const std::vector<int>& h_seq,
                     const std::vector<int>& r_seq, std::string* why = nullptr);

}  // namespace harmseq
