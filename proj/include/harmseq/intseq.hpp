#pragma once

#include <string>
#include <vector>

namespace harmseq::intseq {

using Seq = std::vector<long long>;

// Harmonious integer sequence of length n together with the matched
// rearrangement of its nonzero terms. k_prime[0] holds k'_1.
struct MatchedIntPair {
    long long n = 0;
    Seq k;
    Seq k_prime;
};

// Closed-form harmonious sequence for odd n >= 5, n != 3 (mod 12).
// Throws UnsupportedError otherwise.
Seq build_k(long long n);

// The matching permutation sigma: {1..n-1} -> {0..n-1}; injective, its image
// omits exactly the index of the zero entry of build_k(n).
long long sigma_map(long long n, long long j);

// k paired with k'_i = k_{sigma(i)}; verified before returning.
MatchedIntPair build_matched(long long n);

bool verify_harmonious_int(const Seq& k, long long n);
bool verify_matched_int(const MatchedIntPair& pair, std::string* why = nullptr);

}  // namespace harmseq::intseq
