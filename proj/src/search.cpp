#include "harmseq/search.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>

#include "harmseq/verify.hpp"

namespace harmseq {

namespace {

// 128-bit element masks; groups searched here stay well below this bound.
using Mask = unsigned __int128;



void check_searchable(const FiniteGroup& g, int min_order) {
    if (g.order() < min_order)
        throw std::invalid_argument("group too small for this search (order " +
                                    std::to_string(g.order()) + ")");
    if (g.order() > kMaxSearchOrder)
        throw std::invalid_argument("exhaustive search supports |G| <= " +
                                    std::to_string(kMaxSearchOrder) + ", got " +
                                    std::to_string(g.order()));
}

struct Dfs {
    const FiniteGroup& g;
    unsigned long long budget;
    unsigned long long nodes = 0;
    bool exceeded = false;

    bool spend() {
        if (nodes >= budget) { exceeded = true; return false; }
        ++nodes;
        return true;
    }
};

// One worker's share of top-level branches: ranks r with r % workers == shard.
struct Shard {
    int workers = 1;
    int shard = 0;
    bool mine(int rank) const { return rank % workers == shard; }
};

struct WorkerResult {
    bool found = false;
    int found_rank = -1;
    std::vector<int> seq, seq_r;
    unsigned long long nodes = 0;
    bool exceeded = false;
};

// Runs `fn(shard)` on `workers` threads and merges deterministically.
SearchOutcome run_sharded(unsigned long long budget, int workers,
                          const std::function<WorkerResult(Shard)>& fn) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    std::vector<WorkerResult> results(workers);
    if (workers == 1) {
        results[0] = fn(Shard{1, 0});
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] { results[w] = fn(Shard{workers, w}); });
        for (auto& t : threads) t.join();
    }
    SearchOutcome out;
    out.budget = budget;
    const WorkerResult* best = nullptr;
    for (const auto& r : results) {
        out.nodes_explored += r.nodes;
        if (r.exceeded) out.status = SearchStatus::BudgetExceeded;
        if (r.found && (!best || r.found_rank < best->found_rank)) best = &r;
    }
    if (best) {
        out.status = SearchStatus::Found;
        out.sequence = best->seq;
        out.sequence_r = best->seq_r;
    } else if (out.status != SearchStatus::BudgetExceeded) {
        out.status = out.nodes_explored < out.budget ? SearchStatus::NotExists
                                                     : SearchStatus::BudgetExceeded;
    }
    return out;
}

unsigned long long shard_budget(unsigned long long budget, int workers) {
    return workers == 1 ? budget : std::max<unsigned long long>(1, budget / workers);
}

// Places a permutation (of all elements, or of non-identity elements) whose
// cyclic consecutive products repeat nothing; identity products are forbidden
// in the r-harmonious variant.
WorkerResult permutation_dfs(const FiniteGroup& g, bool with_identity,
                             unsigned long long budget, Shard shard) {
    const int n = g.order();
    const int len = with_identity ? n : n - 1;
    const int first = with_identity ? 0 : 1;
    WorkerResult res;
    Dfs dfs{g, budget};
    std::vector<int> seq(len);
    seq[0] = first;  // rotation canonicalization: lowest element leads
    const Mask used0 = Mask{1} << first;

    std::function<bool(int, Mask, Mask)> go =
        [&](int pos, Mask used, Mask prods) -> bool {
        if (pos == len) return true;
        const bool top = pos == 1;
        int rank = 0;
        for (int a = with_identity ? 0 : 1; a < n; ++a) {
            if (used >> a & 1) continue;
            if (top && !shard.mine(rank++)) continue;
            if (!dfs.spend()) return false;
            int p = g.mul(seq[pos - 1], a);
            if (!with_identity && p == 0) continue;
            if (prods >> p & 1) continue;
            if (pos == len - 1) {
                int w = g.mul(a, seq[0]);
                if (!with_identity && w == 0) continue;
                if (w == p || (prods >> w & 1)) continue;
            }
            seq[pos] = a;
            if (top) res.found_rank = rank - 1;
            if (go(pos + 1, used | (Mask{1} << a), prods | (Mask{1} << p))) return true;
            if (dfs.exceeded) return false;
        }
        return false;
    };

    bool found;
    if (len == 1) {
        // singleton sequence: its lone cyclic product must be the one element
        found = g.mul(first, first) == first;
        res.found_rank = 0;
        ++dfs.nodes;
    } else {
        found = go(1, used0, 0);
    }
    res.found = found;
    if (found) res.seq = seq;
    res.nodes = dfs.nodes;
    res.exceeded = dfs.exceeded;
    return res;
}

}  // namespace

SearchOutcome search_harmonious(const GroupPtr& g, unsigned long long budget, int workers) {
    check_searchable(*g, 1);
    return run_sharded(budget, workers, [&](Shard s) {
        return permutation_dfs(*g, true, shard_budget(budget, workers), s);
    });
}

SearchOutcome search_r_harmonious(const GroupPtr& g, unsigned long long budget, int workers) {
    check_searchable(*g, 2);
    return run_sharded(budget, workers, [&](Shard s) {
        return permutation_dfs(*g, false, shard_budget(budget, workers), s);
    });
}

SearchOutcome search_symmetric_harmonious(const GroupPtr& g, unsigned long long budget,
                                          int workers) {
    check_searchable(*g, 1);
    if (g->order() % 2 == 0)
        throw std::invalid_argument("symmetric harmonious sequences require odd order");
    const int m = g->order();
    if (m == 1) {
        SearchOutcome out;
        out.status = SearchStatus::Found;
        out.sequence = {0};
        out.budget = budget;
        return out;
    }
    const int t = (m - 1) / 2;
    auto worker = [&](Shard shard) {
        WorkerResult res;
        Dfs dfs{*g, shard_budget(budget, workers)};
        std::vector<int> seq(m, 0);
        // Positions i and m-i carry inverse pairs; each placement fixes two
        // products (q and q^-1) at mirrored positions.
        std::function<bool(int, Mask, Mask)> go =
            [&](int i, Mask used, Mask prods) -> bool {
            if (i > t) return true;
            const bool top = i == 1;
            int rank = 0;
            for (int a = 1; a < m; ++a) {
                if (used >> a & 1) continue;
                if (top && !shard.mine(rank++)) continue;
                if (!dfs.spend()) return false;
                int q = g->mul(seq[i - 1], a);
                int iq = g->inv(q);
                if ((prods >> q & 1) || (prods >> iq & 1)) continue;
                seq[i] = a;
                seq[m - i] = g->inv(a);
                if (top) res.found_rank = rank - 1;
                Mask u2 = used | (Mask{1} << a) | (Mask{1} << g->inv(a));
                if (go(i + 1, u2, prods | (Mask{1} << q) | (Mask{1} << iq))) return true;
                if (dfs.exceeded) return false;
            }
            return false;
        };
        res.found = go(1, 1, 0);
        if (res.found) res.seq = seq;
        res.nodes = dfs.nodes;
        res.exceeded = dfs.exceeded;
        return res;
    };
    return run_sharded(budget, workers, worker);
}

SearchOutcome search_matched(const GroupPtr& g, unsigned long long budget, int workers) {
    check_searchable(*g, 4);
    const int n = g->order();
    auto worker = [&](Shard shard) {
        WorkerResult res;
        Dfs dfs{*g, shard_budget(budget, workers)};
        std::vector<int> h(n), r(n - 1);

        // Phase 2: R-harmonious companion with pinned endpoints, product 1.
        std::function<bool(int, Mask, Mask, int)> rgo =
            [&](int pos, Mask used, Mask prods, int acc) -> bool {
            if (pos == n - 1) return true;
            const int last = h[n - 1];
            for (int a = 1; a < n; ++a) {
                if (used >> a & 1) continue;
                if (pos == n - 2 ? a != last : a == last) continue;
                if (!dfs.spend()) return false;
                int p = g->mul(r[pos - 1], a);
                if (p == 0 || (prods >> p & 1)) continue;
                if (pos == n - 2) {
                    int w = g->mul(a, r[0]);
                    if (w == 0 || w == p || (prods >> w & 1)) continue;
                    if (g->mul(acc, a) != 0) continue;  // full product must be identity
                }
                r[pos] = a;
                if (rgo(pos + 1, used | (Mask{1} << a), prods | (Mask{1} << p), g->mul(acc, a)))
                    return true;
                if (dfs.exceeded) return false;
            }
            return false;
        };

        // Phase 1: harmonious sequence with non-identity endpoints, product 1.
        std::function<bool(int, Mask, Mask, int)> hgo =
            [&](int pos, Mask used, Mask prods, int acc) -> bool {
            const bool top = pos == 0;
            int rank = 0;
            for (int a = 0; a < n; ++a) {
                if (used >> a & 1) continue;
                if ((pos == 0 || pos == n - 1) && a == 0) continue;  // shared with r_seq
                if (top && !shard.mine(rank++)) continue;
                if (!dfs.spend()) return false;
                int p = pos == 0 ? -1 : g->mul(h[pos - 1], a);
                if (pos > 0 && (prods >> p & 1)) continue;
                if (pos == n - 1) {
                    int w = g->mul(a, h[0]);
                    if (w == p || (prods >> w & 1)) continue;
                    if (g->mul(acc, a) != 0) continue;
                }
                h[pos] = a;
                if (top) res.found_rank = rank - 1;
                Mask u2 = used | (Mask{1} << a);
                Mask p2 = pos == 0 ? prods : prods | (Mask{1} << p);
                int acc2 = g->mul(acc, a);
                if (pos == n - 1) {
                    r[0] = h[0];
                    if (rgo(1, Mask{1} << h[0], 0, h[0])) return true;
                    if (dfs.exceeded) return false;
                } else {
                    if (hgo(pos + 1, u2, p2, acc2)) return true;
                    if (dfs.exceeded) return false;
                }
            }
            return false;
        };

        res.found = hgo(0, 0, 0, 0);
        if (res.found) { res.seq = h; res.seq_r = r; }
        res.nodes = dfs.nodes;
        res.exceeded = dfs.exceeded;
        return res;
    };
    return run_sharded(budget, workers, worker);
}

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::NotExists: return "NotExists";
        case SearchStatus::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

}  // namespace harmseq
