#include "harmseq/construct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "harmseq/errors.hpp"
#include "harmseq/intseq.hpp"

namespace harmseq {

namespace {

std::vector<int> resolve_tokens(const FiniteGroup& g, const char* tokens) {
    std::istringstream in(tokens);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        auto idx = g.index_of(tok);
        if (!idx) throw std::logic_error("built-in sequence names element '" + tok + "' unknown in group");
        out.push_back(*idx);
    }
    return out;
}

// Example 3.2 transcriptions. They are harmonious / R-harmonious with shared
// endpoints, but their full products are not the identity, so certification
// rejects them and the driver falls through to search (see ledger notes).
constexpr const char* kD12H = "r 1 r^3 s r^5 rs r^2 r^4 r^4s r^2s r^3s r^5s";
constexpr const char* kD12R = "r r^2 r^3 s r^4 r^3s r^2s r^4s r^5 rs r^5s";
constexpr const char* kD16H = "r^2 r r^6 s r^3s r^7 r^3 r^5 r^4s r^6s r^5s rs r^4 r^7s 1 r^2s";
constexpr const char* kD16R = "r^2 r^5 r^6s r^4 r^3s rs s r^5s r^7s r^3 r r^4s r^6 r^7 r^2s";

// Order-21 R-harmonious sequence for Z3 acting on Z7 by squaring.
constexpr const char* kZ3Z7R =
    "x^4 y^2 x^4y x^5y x^5 x^6y y x^6 x^3y x^4y^2 x^6y^2 xy x x^2y^2 xy^2 x^2 x^3 x^5y^2 x^2y "
    "x^3y^2";

// Common grid: first row u (length n) or u' (length n-1), then for each
// non-identity h_p the row  h_p*s_0, s_0^-1*h_p*s_1, ..., s_{n-2}^-1*h_p*s_{n-1}
// with s_i = u_0*...*u_i.
MatchedGroupPair build_grids(const GroupPtr& g, const std::vector<int>& u,
                             const std::vector<int>& u_prime, const std::vector<int>& h) {
    const int n = static_cast<int>(u.size());
    const int m = static_cast<int>(h.size());
    std::vector<int> sig(n);
    int acc = 0;
    for (int i = 0; i < n; ++i) {
        acc = g->mul(acc, u[i]);
        sig[i] = acc;
    }
    if (sig[n - 1] != 0)
        throw std::logic_error("grid construction: product of the first row is not the identity");
    MatchedGroupPair out;
    out.group = g;
    out.h_seq = u;
    out.r_seq = u_prime;
    out.h_seq.reserve(static_cast<std::size_t>(m) * n);
    out.r_seq.reserve(static_cast<std::size_t>(m) * n - 1);
    for (int p = 1; p < m; ++p) {
        for (int r = 0; r < n; ++r) {
            int left = r == 0 ? 0 : g->inv(sig[r - 1]);
            int v = g->mul(g->mul(left, h[p]), sig[r]);
            out.h_seq.push_back(v);
            out.r_seq.push_back(v);
        }
    }
    return out;
}

void certify_pair(const MatchedGroupPair& pair, const char* who) {
    std::string why;
    if (!is_matched_pair(*pair.group, pair.h_seq, pair.r_seq, &why))
        throw std::logic_error(std::string(who) + ": constructed pair failed certification: " + why);
}

}  // namespace

GroupSequence symmetric_harmonious(const GroupPtr& h, unsigned long long budget) {
    const int m = h->order();
    if (m % 2 == 0) throw std::invalid_argument("symmetric harmonious sequences require odd order");
    GroupSequence out;
    out.group = h;
    if (m == 1) {
        out.items = {0};
        return out;
    }
    int gen = -1;
    for (int a = 1; a < m; ++a)
        if (h->element_order(a) == m) { gen = a; break; }
    if (gen >= 0) {
        out.items.resize(m);
        int acc = 0;
        for (int i = 0; i < m; ++i) {
            out.items[i] = acc;
            acc = h->mul(acc, gen);
        }
    } else {
        SearchOutcome o = search_symmetric_harmonious(h, budget);
        if (o.status == SearchStatus::BudgetExceeded)
            throw BudgetExceededError("symmetric harmonious search exhausted its node budget");
        if (o.status == SearchStatus::NotExists)
            throw std::logic_error("no symmetric harmonious sequence found in an odd-order group");
        out.items = o.sequence;
    }
    std::string why;
    if (!is_symmetric_harmonious(*h, out.items, &why))
        throw std::logic_error("symmetric_harmonious: certification failed: " + why);
    return out;
}

MatchedGroupPair mext(const GroupPtr& g, const Subgroup& h, std::optional<int> x,
                      unsigned long long budget) {
    if (h.parent.get() != g.get())
        throw std::invalid_argument("subgroup belongs to a different group");
    if (h.order() % 2 == 0) throw std::invalid_argument("mext requires an odd-order subgroup");
    if (!is_normal(*g, h)) throw std::invalid_argument("mext requires a normal subgroup");
    const int n = g->order() / h.order();
    if (n < 5 || n % 2 == 0 || n % 12 == 3)
        throw UnsupportedError("mext: unsupported quotient order " + std::to_string(n));
    auto [q, qmap] = quotient(g, h);
    int gen = -1;
    if (x) {
        g->check_index(*x);
        if (q->element_order(qmap.image[*x]) != n)
            throw std::invalid_argument("chosen element's coset does not generate the quotient");
        gen = *x;
    } else {
        for (int a = 0; a < g->order(); ++a)
            if (q->element_order(qmap.image[a]) == n) { gen = a; break; }
        if (gen < 0) throw std::invalid_argument("mext: quotient is not cyclic");
    }
    auto pair = intseq::build_matched(n);
    auto [hg, emb] = subgroup_as_group(h);
    GroupSequence sym = symmetric_harmonious(hg, budget);
    std::vector<int> h_items(sym.items.size());
    for (std::size_t i = 0; i < sym.items.size(); ++i) h_items[i] = emb[sym.items[i]];
    std::vector<int> u(n), u_prime(n - 1);
    for (int r = 0; r < n; ++r) u[r] = g->power(gen, pair.k[r]);
    for (int r = 0; r < n - 1; ++r) u_prime[r] = g->power(gen, pair.k_prime[r]);
    MatchedGroupPair out = build_grids(g, u, u_prime, h_items);
    certify_pair(out, "mext");
    return out;
}

MatchedGroupPair brh(const GroupPtr& g, const Subgroup& k, const Subgroup& h,
                     const MatchedGroupPair& k_pair, unsigned long long budget) {
    if (k.parent.get() != g.get() || h.parent.get() != g.get())
        throw std::invalid_argument("subgroup belongs to a different group");
    if (h.order() % 2 == 0) throw std::invalid_argument("brh requires an odd-order normal subgroup");
    if (!is_normal(*g, h)) throw std::invalid_argument("brh requires a normal subgroup");
    if (k.order() * h.order() != g->order())
        throw std::invalid_argument("brh: |K|*|H| != |G|, K is not a complement");
    for (int m : k.members)
        if (m != 0 && h.contains(m))
            throw std::invalid_argument("brh: K meets H beyond the identity");
    // Re-certify the K-pair inside K.
    {
        auto [kg, emb] = subgroup_as_group(k);
        std::vector<int> pos(g->order(), -1);
        for (std::size_t i = 0; i < emb.size(); ++i) pos[emb[i]] = static_cast<int>(i);
        auto relabel = [&](const std::vector<int>& seq) {
            std::vector<int> out(seq.size());
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (seq[i] < 0 || seq[i] >= g->order() || pos[seq[i]] < 0)
                    throw std::invalid_argument("brh: k_pair leaves the complement K");
                out[i] = pos[seq[i]];
            }
            return out;
        };
        std::string why;
        if (!is_matched_pair(*kg, relabel(k_pair.h_seq), relabel(k_pair.r_seq), &why))
            throw std::invalid_argument("brh: k_pair is not a matched pair in K: " + why);
    }
    auto [hg, emb] = subgroup_as_group(h);
    GroupSequence sym = symmetric_harmonious(hg, budget);
    std::vector<int> h_items(sym.items.size());
    for (std::size_t i = 0; i < sym.items.size(); ++i) h_items[i] = emb[sym.items[i]];
    MatchedGroupPair out = build_grids(g, k_pair.h_seq, k_pair.r_seq, h_items);
    certify_pair(out, "brh");
    return out;
}

namespace {

// Strategy (a): literature pairs for the two dihedral groups.
bool try_golden(const GroupPtr& g, MatchedPairResult& res) {
    const auto* dm = std::get_if<DihedralMeta>(&g->meta());
    if (!dm || (dm->order != 12 && dm->order != 16)) {
        res.report.attempts.push_back("golden: no built-in pair for this group");
        return false;
    }
    MatchedGroupPair pair;
    pair.group = g;
    pair.h_seq = resolve_tokens(*g, dm->order == 12 ? kD12H : kD16H);
    pair.r_seq = resolve_tokens(*g, dm->order == 12 ? kD12R : kD16R);
    std::string why;
    if (!is_matched_pair(*g, pair.h_seq, pair.r_seq, &why)) {
        res.report.attempts.push_back("golden: built-in D" + std::to_string(dm->order) +
                                      " pair fails certification (" + why + ")");
        return false;
    }
    res.status = ConstructStatus::Found;
    res.pair = std::move(pair);
    res.report.strategy = "golden";
    res.report.witnesses["example"] = "D" + std::to_string(dm->order);
    res.report.certified = true;
    return true;
}

// Strategy (b): odd order, cyclic quotient through the abelianization.
bool try_main1(const GroupPtr& g, unsigned long long budget, MatchedPairResult& res) {
    if (g->order() % 2 == 0) {
        res.report.attempts.push_back("main1: group order is even");
        return false;
    }
    if (g->order() == 1) {
        res.report.attempts.push_back("main1: trivial group");
        return false;
    }
    auto [ab, pi] = quotient(g, commutator_subgroup(g));
    auto basis = abelian_basis(ab);
    long long ab_order = ab->order();
    int m = 0;
    for (int p = 5; p <= ab_order; p += 2) {
        bool prime = p > 1;
        for (int d = 3; d * d <= p; d += 2)
            if (p % d == 0) { prime = false; break; }
        if (prime && ab_order % p == 0) { m = p; break; }
    }
    if (m == 0) {
        bool nine = false;
        for (auto [e, o] : basis)
            if (o % 9 == 0) nine = true;
        if (nine) m = 9;
    }
    if (m == 0) {
        res.report.attempts.push_back(
            "main1: abelianization of order " + std::to_string(ab_order) +
            " is an elementary 3-group (or trivial), no usable cyclic quotient");
        return false;
    }
    auto found = find_cyclic_quotient(g, m);
    if (!found) {
        res.report.attempts.push_back("main1: no cyclic quotient of order " + std::to_string(m));
        return false;
    }
    auto& [h, qmap] = *found;
    int x = -1;
    for (int a = 0; a < g->order(); ++a) {
        int img = qmap.image[a], t = img, ord = 1;
        while (t != 0) { t = (t + img) % m; ++ord; }
        if (ord == m) { x = a; break; }
    }
    MatchedGroupPair pair = mext(g, h, x < 0 ? std::nullopt : std::optional<int>(x), budget);
    res.status = ConstructStatus::Found;
    res.pair = std::move(pair);
    res.report.strategy = "main1";
    res.report.witnesses["m"] = std::to_string(m);
    res.report.witnesses["n"] = std::to_string(m);
    res.report.witnesses["H_order"] = std::to_string(h.order());
    if (x >= 0) res.report.witnesses["x"] = g->name(x);
    res.report.certified = true;
    return true;
}

// Strategy (c): split extension from construction metadata.
bool try_main2(const GroupPtr& g, unsigned long long budget, MatchedPairResult& res) {
    struct Option {
        GroupPtr k_factor, h_factor;
        bool k_is_first;  // K is the first factor of the pair indexing (k,h) -> k*|H|+h
    };
    std::vector<Option> options;
    if (const auto* sm = std::get_if<SemidirectMeta>(&g->meta())) {
        if (sm->h->order() % 2 == 1) options.push_back({sm->k, sm->h, true});
        else res.report.attempts.push_back("main2: semidirect factor H has even order");
    } else if (const auto* dp = std::get_if<DirectProductMeta>(&g->meta())) {
        if (dp->b->order() % 2 == 1) options.push_back({dp->a, dp->b, true});
        if (dp->a->order() % 2 == 1 && dp->a->order() > 1)
            options.push_back({dp->b, dp->a, false});
        if (options.empty())
            res.report.attempts.push_back("main2: no odd-order factor to peel off");
    } else {
        res.report.attempts.push_back("main2: no split-extension metadata");
    }
    for (const auto& opt : options) {
        MatchedPairResult sub = matched_pair(opt.k_factor, budget);
        if (sub.status != ConstructStatus::Found) {
            res.report.attempts.push_back("main2: complement of order " +
                                          std::to_string(opt.k_factor->order()) +
                                          " is not harmoniously matched here");
            continue;
        }
        const int nh = opt.h_factor->order();
        auto embed_k = [&](int e) { return opt.k_is_first ? e * nh : e; };
        auto embed_h = [&](int e) { return opt.k_is_first ? e : e * opt.h_factor->order(); };
        // For the second direct-product orientation the pair index is (a,b) -> a*|B|+b
        // with K = B embedded as {b} and H = A embedded as {a*|B|}.
        auto embed_h2 = [&](int e) { return e * opt.k_factor->order(); };
        std::vector<int> km(opt.k_factor->order()), hm(nh);
        for (int e = 0; e < opt.k_factor->order(); ++e) km[e] = embed_k(e);
        for (int e = 0; e < nh; ++e) hm[e] = opt.k_is_first ? embed_h(e) : embed_h2(e);
        std::sort(km.begin(), km.end());
        std::sort(hm.begin(), hm.end());
        Subgroup k_sub{g, km}, h_sub{g, hm};
        MatchedGroupPair k_pair;
        k_pair.group = g;
        for (int e : sub.pair->h_seq) k_pair.h_seq.push_back(embed_k(e));
        for (int e : sub.pair->r_seq) k_pair.r_seq.push_back(embed_k(e));
        MatchedGroupPair pair = brh(g, k_sub, h_sub, k_pair, budget);
        res.status = ConstructStatus::Found;
        res.pair = std::move(pair);
        res.report.strategy = "main2";
        res.report.witnesses["K_order"] = std::to_string(opt.k_factor->order());
        res.report.witnesses["H_order"] = std::to_string(nh);
        res.report.witnesses["K_strategy"] = sub.report.strategy;
        res.report.certified = true;
        return true;
    }
    return false;
}

}  // namespace

MatchedPairResult matched_pair(const GroupPtr& g, unsigned long long budget) {
    MatchedPairResult res;
    if (hall_paige_check(g) == Sylow2Class::Cyclic2Sylow) {
        res.status = ConstructStatus::Impossible;
        res.report.attempts.push_back("cyclic Sylow 2-subgroup: no complete mapping exists");
        return res;
    }
    if (try_golden(g, res)) return res;
    if (try_main1(g, budget, res)) return res;
    if (try_main2(g, budget, res)) return res;
    if (g->order() < 4) {
        res.report.attempts.push_back("search: group order below 4");
    } else if (g->order() > kMaxSearchOrder) {
        res.report.attempts.push_back("search: group order above the exhaustive-search limit");
    } else {
        SearchOutcome o = search_matched(g, budget);
        if (o.status == SearchStatus::Found) {
            MatchedGroupPair pair{g, o.sequence, o.sequence_r};
            certify_pair(pair, "search_matched");
            res.status = ConstructStatus::Found;
            res.pair = std::move(pair);
            res.report.strategy = "search";
            res.report.witnesses["nodes"] = std::to_string(o.nodes_explored);
            res.report.certified = true;
            return res;
        }
        if (o.status == SearchStatus::NotExists) {
            res.status = ConstructStatus::Impossible;
            res.report.attempts.push_back("search: exhausted, no matched pair exists");
            return res;
        }
        res.report.attempts.push_back("search: node budget exceeded");
    }
    res.status = ConstructStatus::NotConstructed;
    return res;
}

RHarmoniousResult r_harmonious(const GroupPtr& g, unsigned long long budget) {
    RHarmoniousResult res;
    if (hall_paige_check(g) == Sylow2Class::Cyclic2Sylow) {
        res.status = ConstructStatus::Impossible;
        res.report.attempts.push_back("cyclic Sylow 2-subgroup: no complete mapping exists");
        return res;
    }
    MatchedPairResult mp = matched_pair(g, budget);
    if (mp.status == ConstructStatus::Found) {
        res.status = ConstructStatus::Found;
        res.seq = GroupSequence{g, mp.pair->r_seq};
        res.report = mp.report;
        return res;
    }
    res.report.attempts = mp.report.attempts;
    // Built-in order-21 witness: Z3 acting on Z7 by the squaring automorphism.
    if (const auto* sm = std::get_if<SemidirectMeta>(&g->meta())) {
        if (sm->k->order() == 3 && sm->h->order() == 7 && sm->action.perm[1][1] == 2) {
            GroupSequence seq{g, resolve_tokens(*g, kZ3Z7R)};
            std::string why;
            if (!is_r_harmonious(*g, seq.items, &why))
                throw std::logic_error("built-in order-21 sequence failed certification: " + why);
            res.status = ConstructStatus::Found;
            res.seq = std::move(seq);
            res.report.strategy = "golden";
            res.report.witnesses["example"] = "Z3xZ7";
            res.report.certified = true;
            return res;
        }
    }
    if (g->order() < 2) {
        res.report.attempts.push_back("search: group order below 2");
    } else if (g->order() > kMaxSearchOrder) {
        res.report.attempts.push_back("search: group order above the exhaustive-search limit");
    } else {
        SearchOutcome o = search_r_harmonious(g, budget);
        if (o.status == SearchStatus::Found) {
            std::string why;
            if (!is_r_harmonious(*g, o.sequence, &why))
                throw std::logic_error("search_r_harmonious result failed certification: " + why);
            res.status = ConstructStatus::Found;
            res.seq = GroupSequence{g, o.sequence};
            res.report.strategy = "search";
            res.report.witnesses["nodes"] = std::to_string(o.nodes_explored);
            res.report.certified = true;
            return res;
        }
        if (o.status == SearchStatus::NotExists) {
            res.status = ConstructStatus::Impossible;
            res.report.attempts.push_back("search: exhausted, no R-harmonious sequence exists");
            return res;
        }
        res.report.attempts.push_back("search: node budget exceeded");
    }
    res.status = ConstructStatus::NotConstructed;
    return res;
}

const char* to_string(ConstructStatus s) {
    switch (s) {
        case ConstructStatus::Found: return "Found";
        case ConstructStatus::Impossible: return "Impossible";
        case ConstructStatus::NotConstructed: return "NotConstructed";
    }
    return "?";
}

}  // namespace harmseq
