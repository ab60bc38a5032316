#include "harmseq/intseq.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "harmseq/errors.hpp"

namespace harmseq::intseq {

namespace {

long long floor_mod(long long x, long long n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

long long exact_div3(long long x) {
    if (x % 3 != 0) throw std::logic_error("intseq: expected multiple of 3");
    return x / 3;
}

// n = 6k+1 family.
Seq family_6k_plus_1(long long n) {
    const long long k = (n - 1) / 6;
    Seq ks(n);
    for (long long i = 0; i < n; ++i) {
        if (i == 0) ks[i] = 4 * k;
        else if (i <= 3 * k) {
            if (i % 3 == 0) ks[i] = 4 * i / 3 - 2 * k - 1;
            else if (i % 3 == 1) ks[i] = 4 * (i - 1) / 3 - 4 * k;
            else ks[i] = 4 * (i + 1) / 3 - 2;
        } else {
            if (i % 3 == 0) ks[i] = 4 * i / 3 - 8 * k - 2;
            else if (i % 3 == 1) ks[i] = 4 * (i - 1) / 3 - 4 * k;
            else ks[i] = 4 * (i + 1) / 3 - 6 * k - 3;
        }
    }
    return ks;
}

// n = 6k-1 family.
Seq family_6k_minus_1(long long n) {
    const long long k = (n + 1) / 6;
    Seq ks(n);
    for (long long i = 0; i < n; ++i) {
        if (i == 0) ks[i] = 4 * k - 2;
        else if (i < 3 * k) {
            if (i % 3 == 0) ks[i] = 8 * i / 3 - 2 * k - 1;
            else if (i % 3 == 1) ks[i] = 8 * (i - 1) / 3 - 4 * k + 2;
            else ks[i] = 8 * (i + 1) / 3 - 6 * k - 3;
        } else if (i == 3 * k) {
            ks[i] = 0;
        } else {
            if (i % 3 == 0) ks[i] = 8 * i / 3 - 14 * k + 1;
            else if (i % 3 == 1) ks[i] = 8 * (i - 1) / 3 - 10 * k + 3;
            else ks[i] = 8 * (i + 1) / 3 - 12 * k - 2;
        }
    }
    return ks;
}

// n = 12k-3 family, k not divisible by 3.
Seq family_12k_minus_3(long long n) {
    const long long k = (n + 3) / 12;
    Seq ks(n);
    for (long long i = 0; i < n; ++i) {
        if (i == 0) ks[i] = 16 * k - 6;
        else if (i <= 6 * k - 2) {
            if (i % 3 == 0) ks[i] = 4 * i - 8 * k;
            else if (i % 3 == 1) ks[i] = 4 * i + 2 - 16 * k;
            else ks[i] = 4 * i + 1 - 12 * k;
        } else if (i == 6 * k - 1) {
            ks[i] = 0;
        } else {
            if (i % 3 == 0) ks[i] = 4 * i + 6 - 32 * k;
            else if (i % 3 == 1) ks[i] = 4 * i + 8 - 40 * k;
            else ks[i] = 4 * i + 7 - 36 * k;
        }
    }
    return ks;
}

// n = 12k-3 family, k divisible by 3. The i mod 3 case split above degenerates
// here (every value lands in 0 mod 3, so residues mod n collide); this branch
// uses a rebalanced matching with the same mirror layout. First-half values in
// three ranges, then k_0 = -k_1, zero at 6k-1, and the mirrored second half.
Seq family_12k_minus_3_div3(long long n) {
    const long long k = (n + 3) / 12;
    Seq ks(n);
    for (long long i = 1; i <= 6 * k - 2; ++i) {
        long long v;
        if (i <= 2 * k) {
            if (i % 3 == 0) v = exact_div3(3 - 4 * i - 4 * k);
            else if (i % 3 == 1) v = exact_div3(16 * k - 4 * i - 2);
            else v = exact_div3(2 - 4 * i);
        } else if (i <= 4 * k - 1) {
            if (i % 3 == 0) v = exact_div3(3 - 4 * i - 4 * k);
            else if (i % 3 == 1) v = exact_div3(28 * k - 4 * i - 5);
            else v = exact_div3(12 * k - 4 * i - 1);
        } else {
            if (i % 3 == 0) v = exact_div3(8 * k - 4 * i);
            else if (i % 3 == 1) v = exact_div3(28 * k - 4 * i - 5);
            else v = exact_div3(24 * k - 4 * i - 4);
        }
        ks[i] = v;
    }
    ks[0] = -ks[1];
    ks[6 * k - 1] = 0;
    for (long long i = 6 * k; i < n; ++i) ks[i] = -ks[n + 1 - i];
    return ks;
}

}  // namespace

Seq build_k(long long n) {
    if (n < 5 || n % 2 == 0 || n % 12 == 3)
        throw UnsupportedError("no harmonious matched integer sequence family for n = " +
                               std::to_string(n) + " (need odd n >= 5, n != 3 mod 12)");
    switch (n % 12) {
        case 1:
        case 7:
            return family_6k_plus_1(n);
        case 5:
        case 11:
            return family_6k_minus_1(n);
        default: {  // n % 12 == 9
            const long long k = (n + 3) / 12;
            return k % 3 == 0 ? family_12k_minus_3_div3(n) : family_12k_minus_3(n);
        }
    }
}

long long sigma_map(long long n, long long j) {
    if (j < 1 || j > n - 1)
        throw std::invalid_argument("sigma index out of range: j = " + std::to_string(j));
    if (j == 1) return 0;
    if (j <= (n + 1) / 4) return n + 2 - 2 * j;
    if (j < (n + 1) / 2) return n + 1 - 2 * j;
    if (j < 3 * (n + 1) / 4) return 2 * j - n;
    return 2 * j - n + 1;
}

MatchedIntPair build_matched(long long n) {
    MatchedIntPair pair;
    pair.n = n;
    pair.k = build_k(n);
    pair.k_prime.resize(n - 1);
    for (long long j = 1; j <= n - 1; ++j) pair.k_prime[j - 1] = pair.k[sigma_map(n, j)];
    std::string why;
    if (!verify_matched_int(pair, &why))
        throw std::logic_error("build_matched(" + std::to_string(n) +
                               ") produced an invalid pair: " + why);
    return pair;
}

bool verify_harmonious_int(const Seq& k, long long n) {
    if (n < 1 || static_cast<long long>(k.size()) != n) return false;
    std::unordered_set<long long> seen;
    for (long long v : k)
        if (!seen.insert(floor_mod(v, n)).second) return false;
    seen.clear();
    for (long long i = 0; i < n; ++i)
        if (!seen.insert(floor_mod(k[i] + k[(i + 1) % n], n)).second) return false;
    return true;
}

bool verify_matched_int(const MatchedIntPair& pair, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    const long long n = pair.n;
    if (n < 2 || static_cast<long long>(pair.k.size()) != n)
        return fail("k must have length n >= 2");
    if (static_cast<long long>(pair.k_prime.size()) != n - 1)
        return fail("k' must have length n-1");
    if (!verify_harmonious_int(pair.k, n))
        return fail("k is not a harmonious integer sequence mod n");
    if (std::count(pair.k.begin(), pair.k.end(), 0LL) != 1)
        return fail("k must contain the integer 0 exactly once");
    Seq nonzero;
    for (long long v : pair.k)
        if (v != 0) nonzero.push_back(v);
    Seq kp_sorted = pair.k_prime;
    std::sort(nonzero.begin(), nonzero.end());
    std::sort(kp_sorted.begin(), kp_sorted.end());
    if (nonzero != kp_sorted)
        return fail("k' is not a rearrangement of the nonzero terms of k");
    if (pair.k_prime.front() != pair.k.front()) return fail("k_0 != k'_1");
    if (pair.k_prime.back() != pair.k.back()) return fail("k_{n-1} != k'_{n-1}");
    Seq sums(n), psums(n - 1);
    for (long long i = 0; i < n; ++i) sums[i] = pair.k[i] + pair.k[(i + 1) % n];
    for (long long i = 0; i < n - 1; ++i)
        psums[i] = pair.k_prime[i] + pair.k_prime[(i + 1) % (n - 1)];
    psums.push_back(0);
    std::sort(sums.begin(), sums.end());
    std::sort(psums.begin(), psums.end());
    if (sums != psums)
        return fail("consecutive-sum sets differ by more than {0}");
    long long total = 0;
    for (long long v : pair.k) total += v;
    if (total != 0) return fail("sum of k is not 0");
    if (why) why->clear();
    return true;
}

}  // namespace harmseq::intseq
