#include "harmseq/verify.hpp"

#include <stdexcept>

namespace harmseq {

namespace {

bool set_why(std::string* why, const std::string& reason) {
    if (why) *why = reason;
    return false;
}

bool check_indices(const FiniteGroup& g, const std::vector<int>& seq, std::string* why) {
    for (int a : seq)
        if (a < 0 || a >= g.order()) {
            set_why(why, "element index " + std::to_string(a) + " out of range");
            return false;
        }
    return true;
}

// seq covers `universe` (0 included iff with_identity) exactly once.
bool is_perm_of(const FiniteGroup& g, const std::vector<int>& seq, bool with_identity,
                std::string* why, const char* what) {
    const int n = g.order();
    const std::size_t expect = static_cast<std::size_t>(with_identity ? n : n - 1);
    if (seq.size() != expect)
        return set_why(why, std::string(what) + ": length " + std::to_string(seq.size()) +
                                ", expected " + std::to_string(expect));
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int a = seq[i];
        if (!with_identity && a == 0)
            return set_why(why, std::string(what) + ": identity at position " + std::to_string(i));
        if (seen[a])
            return set_why(why, std::string(what) + ": '" + g.name(a) + "' repeated at position " +
                                    std::to_string(i));
        seen[a] = 1;
    }
    return true;
}

}  // namespace

std::vector<int> consecutive_products(const FiniteGroup& g, const std::vector<int>& seq) {
    if (seq.empty()) throw std::invalid_argument("consecutive_products of an empty sequence");
    const std::size_t m = seq.size();
    std::vector<int> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        g.check_index(seq[i]);
        out[i] = g.mul(seq[i], seq[(i + 1) % m]);
    }
    return out;
}

bool is_harmonious(const FiniteGroup& g, const std::vector<int>& seq, std::string* why) {
    if (!check_indices(g, seq, why)) return false;
    if (!is_perm_of(g, seq, true, why, "sequence")) return false;
    return is_perm_of(g, consecutive_products(g, seq), true, why, "consecutive products");
}

bool is_r_harmonious(const FiniteGroup& g, const std::vector<int>& seq, std::string* why) {
    if (!check_indices(g, seq, why)) return false;
    if (!is_perm_of(g, seq, false, why, "sequence")) return false;
    return is_perm_of(g, consecutive_products(g, seq), false, why, "consecutive products");
}

bool is_symmetric_harmonious(const FiniteGroup& g, const std::vector<int>& seq,
                             std::string* why) {
    if (!is_harmonious(g, seq, why)) return false;
    if (seq[0] != 0) return set_why(why, "first term is not the identity");
    const std::size_t m = seq.size();
    for (std::size_t i = 1; i < m; ++i)
        if (g.mul(seq[i], seq[m - i]) != 0)
            return set_why(why, "mirror product at position " + std::to_string(i) +
                                    " is not the identity");
    return true;
}

bool is_matched_pair(const FiniteGroup& g, const std::vector<int>& h_seq,
                     const std::vector<int>& r_seq, std::string* why) {
    if (!is_harmonious(g, h_seq, why)) {
        if (why) *why = "h_seq not harmonious: " + *why;
        return false;
    }
    if (!is_r_harmonious(g, r_seq, why)) {
        if (why) *why = "r_seq not R-harmonious: " + *why;
        return false;
    }
    if (h_seq.front() != r_seq.front()) return set_why(why, "first terms differ");
    if (h_seq.back() != r_seq.back()) return set_why(why, "last terms differ");
    int ph = 0, pr = 0;
    for (int a : h_seq) ph = g.mul(ph, a);
    for (int a : r_seq) pr = g.mul(pr, a);
    if (ph != 0) return set_why(why, "full product of h_seq is '" + g.name(ph) + "', not identity");
    if (pr != 0) return set_why(why, "full product of r_seq is '" + g.name(pr) + "', not identity");
    if (why) why->clear();
    return true;
}

}  // namespace harmseq
