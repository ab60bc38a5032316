#include "harmseq/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "harmseq/errors.hpp"

namespace harmseq {

namespace {

std::string exp_term(const std::string& letter, int e) {
    if (e == 0) return "";
    if (e == 1) return letter;
    return letter + "^" + std::to_string(e);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<int> table, FactorMeta meta)
    : n_(static_cast<int>(names.size())),
      table_(std::move(table)),
      names_(std::move(names)),
      meta_(std::move(meta)) {
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (mul(a, b) == 0) { inv_[a] = b; break; }
        }
    }
}

GroupPtr make_trusted_group(std::vector<std::string> names, std::vector<int> table,
                            FactorMeta meta) {
    return GroupPtr(new FiniteGroup(std::move(names), std::move(table), std::move(meta)));
}

std::string validate_group_table(const std::vector<std::string>& names,
                                 const std::vector<int>& table) {
    const int n = static_cast<int>(names.size());
    if (n < 1) return "group must have at least one element";
    if (table.size() != static_cast<std::size_t>(n) * n) return "table size is not n*n";
    auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
    for (int v : table)
        if (v < 0 || v >= n) return "table entry out of range";
    for (int a = 0; a < n; ++a) {
        if (at(0, a) != a) return "identity law fails: table[0][" + std::to_string(a) + "] != " + std::to_string(a);
        if (at(a, 0) != a) return "identity law fails: table[" + std::to_string(a) + "][0] != " + std::to_string(a);
    }
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            if (seen[at(a, b)]) return "row " + std::to_string(a) + " is not a permutation";
            seen[at(a, b)] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            if (seen[at(a, b)]) return "column " + std::to_string(b) + " is not a permutation";
            seen[at(a, b)] = 1;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (names[i].empty()) return "element " + std::to_string(i) + " has an empty name";
        if (names[i].front() == '#') return "name '" + names[i] + "' may not start with '#'";
        for (char c : names[i])
            if (std::isspace(static_cast<unsigned char>(c)))
                return "name '" + names[i] + "' contains whitespace";
        for (int j = 0; j < i; ++j)
            if (names[i] == names[j]) return "duplicate element name '" + names[i] + "'";
    }
    // Light's associativity test over a generating set.
    std::vector<int> gens;
    {
        std::vector<char> gen_set(n, 0);
        gen_set[0] = 1;
        int covered = 1;
        for (int a = 1; a < n && covered < n; ++a) {
            if (gen_set[a]) continue;
            gens.push_back(a);
            std::vector<int> work;
            for (int x = 0; x < n; ++x)
                if (gen_set[x]) work.push_back(x);
            gen_set[a] = 1;
            work.push_back(a);
            ++covered;
            for (std::size_t i = 0; i < work.size(); ++i) {
                for (std::size_t j = 0; j < work.size(); ++j) {
                    int p = at(work[i], work[j]);
                    if (!gen_set[p]) {
                        gen_set[p] = 1;
                        work.push_back(p);
                        ++covered;
                    }
                }
            }
        }
    }
    for (int g : gens) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (at(a, at(g, b)) != at(at(a, g), b))
                    return "associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(g) + "," + std::to_string(b) + ")";
            }
        }
    }
    return {};
}

GroupPtr FiniteGroup::from_table(std::vector<std::string> names, std::vector<int> table,
                                 FactorMeta meta) {
    std::string err = validate_group_table(names, table);
    if (!err.empty()) throw InputError("invalid group table: " + err);
    return make_trusted_group(std::move(names), std::move(table), std::move(meta));
}

void FiniteGroup::check_index(int a) const {
    if (a < 0 || a >= n_)
        throw std::invalid_argument("element index " + std::to_string(a) + " out of range for group of order " +
                                    std::to_string(n_));
}

int FiniteGroup::power(int a, long long e) const {
    check_index(a);
    const int ord = element_order(a);
    long long r = e % ord;
    if (r < 0) r += ord;
    int acc = 0;
    for (long long i = 0; i < r; ++i) acc = mul(acc, a);
    return acc;
}

int FiniteGroup::element_order(int a) const {
    check_index(a);
    int x = a, t = 1;
    while (x != 0) {
        x = mul(x, a);
        ++t;
    }
    return t;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 1; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<int> FiniteGroup::index_of(std::string_view token) const {
    if (!token.empty() && token.front() == '#') {
        int idx = -1;
        auto [p, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), idx);
        if (ec == std::errc{} && p == token.data() + token.size() && idx >= 0 && idx < n_)
            return idx;
        return std::nullopt;
    }
    for (int i = 0; i < n_; ++i)
        if (names_[i] == token) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------- constructors

GroupPtr make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    std::vector<std::string> names(n);
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return make_trusted_group(std::move(names), std::move(table), CyclicMeta{n});
}

GroupPtr make_dihedral(int order) {
    if (order < 4 || order % 2 != 0)
        throw std::invalid_argument("dihedral order must be even and >= 4");
    const int n = order / 2;
    std::vector<std::string> names(order);
    for (int i = 0; i < n; ++i) {
        names[i] = i == 0 ? "1" : exp_term("r", i);
        names[n + i] = (i == 0 ? "" : exp_term("r", i)) + "s";
    }
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    auto idx = [&](int rot, int ref) { return ((rot % n) + n) % n + (ref ? n : 0); };
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y) {
            int xa = x % n, xs = x / n, ya = y % n, ys = y / n;
            int v = xs == 0 ? idx(xa + ya, ys) : idx(xa - ya, 1 - ys);
            table[static_cast<std::size_t>(x) * order + y] = v;
        }
    }
    return make_trusted_group(std::move(names), std::move(table), DihedralMeta{order});
}

GroupPtr make_direct_product(const GroupPtr& a, const GroupPtr& b) {
    const int na = a->order(), nb = b->order(), n = na * nb;
    std::vector<std::string> names(n);
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            names[i * nb + j] = "(" + a->name(i) + "," + b->name(j) + ")";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            table[static_cast<std::size_t>(x) * n + y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
        }
    }
    return make_trusted_group(std::move(names), std::move(table), DirectProductMeta{a, b});
}

namespace {

void validate_action(const FiniteGroup& k, const FiniteGroup& h, const Action& action) {
    const int nk = k.order(), nh = h.order();
    if (static_cast<int>(action.perm.size()) != nk)
        throw std::invalid_argument("invalid action: needs one permutation per element of K");
    for (int e = 0; e < nk; ++e) {
        const auto& p = action.perm[e];
        if (static_cast<int>(p.size()) != nh)
            throw std::invalid_argument("invalid action: permutation size mismatch");
        std::vector<char> seen(nh, 0);
        for (int v : p) {
            if (v < 0 || v >= nh || seen[v])
                throw std::invalid_argument("invalid action: not a permutation of H");
            seen[v] = 1;
        }
        for (int x = 0; x < nh; ++x)
            for (int y = 0; y < nh; ++y)
                if (p[h.mul(x, y)] != h.mul(p[x], p[y]))
                    throw std::invalid_argument("invalid action: image is not an automorphism of H");
    }
    for (int x = 0; x < nh; ++x)
        if (action.perm[0][x] != x)
            throw std::invalid_argument("invalid action: identity of K must act trivially");
    for (int e1 = 0; e1 < nk; ++e1)
        for (int e2 = 0; e2 < nk; ++e2)
            for (int x = 0; x < nh; ++x)
                if (action.perm[k.mul(e1, e2)][x] != action.perm[e1][action.perm[e2][x]])
                    throw std::invalid_argument("invalid action: K -> Aut(H) is not a homomorphism");
}

GroupPtr build_semidirect(const GroupPtr& k, const GroupPtr& h, const Action& action,
                          std::vector<std::string> names) {
    validate_action(*k, *h, action);
    const int nk = k->order(), nh = h->order(), n = nk * nh;
    if (names.empty()) {
        names.resize(n);
        for (int i = 0; i < nk; ++i)
            for (int j = 0; j < nh; ++j)
                names[i * nh + j] = "(" + k->name(i) + "," + h->name(j) + ")";
    }
    // Pair (k,h) stands for the product k*h; H embeds as the normal subgroup:
    //   (k1,h1)(k2,h2) = (k1*k2, action[inv(k2)](h1) * h2)
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int k1 = x / nh, h1 = x % nh, k2 = y / nh, h2 = y % nh;
            int kk = k->mul(k1, k2);
            int hh = h->mul(action.perm[k->inv(k2)][h1], h2);
            table[static_cast<std::size_t>(x) * n + y] = kk * nh + hh;
        }
    }
    return make_trusted_group(std::move(names), std::move(table),
                              SemidirectMeta{k, h, action});
}

}  // namespace

GroupPtr make_semidirect(const GroupPtr& k, const GroupPtr& h, const Action& action) {
    return build_semidirect(k, h, action, {});
}

GroupPtr make_semidirect_cyclic(const std::vector<int>& k_orders, int h_order,
                                const std::vector<long long>& multipliers) {
    if (k_orders.empty() || h_order < 1)
        throw std::invalid_argument("semidirect factors must be nonempty");
    if (multipliers.size() != k_orders.size())
        throw std::invalid_argument("invalid action: need one multiplier per K generator");
    static const char* kLetters[] = {"x", "y", "z", "w", "u", "v"};
    if (k_orders.size() > 6)
        throw std::invalid_argument("at most 6 cyclic factors supported in K");
    std::vector<long long> mult(multipliers);
    for (std::size_t i = 0; i < mult.size(); ++i) {
        long long m = ((mult[i] % h_order) + h_order) % h_order;
        mult[i] = m;
        if (std::gcd(static_cast<long long>(h_order), m) != 1)
            throw std::invalid_argument("invalid action: multiplier " + std::to_string(multipliers[i]) +
                                        " is not a unit mod " + std::to_string(h_order));
        long long acc = 1;
        for (int t = 0; t < k_orders[i]; ++t) acc = acc * m % h_order;
        if (acc != 1 % h_order)
            throw std::invalid_argument("invalid action: multiplier " + std::to_string(multipliers[i]) +
                                        "^" + std::to_string(k_orders[i]) + " != 1 mod " +
                                        std::to_string(h_order));
    }
    GroupPtr k = make_cyclic(k_orders[0]);
    for (std::size_t i = 1; i < k_orders.size(); ++i)
        k = make_direct_product(k, make_cyclic(k_orders[i]));
    GroupPtr h = make_cyclic(h_order);
    const int nk = k->order();
    // exponent vector of K element e, row-major over the factors
    auto k_exps = [&](int e) {
        std::vector<int> exps(k_orders.size());
        for (std::size_t i = k_orders.size(); i-- > 0;) {
            exps[i] = e % k_orders[i];
            e /= k_orders[i];
        }
        return exps;
    };
    Action action;
    action.perm.resize(nk, std::vector<int>(h_order));
    for (int e = 0; e < nk; ++e) {
        auto exps = k_exps(e);
        long long s = 1;
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (int t = 0; t < exps[i]; ++t) s = s * mult[i] % h_order;
        for (int x = 0; x < h_order; ++x) action.perm[e][x] = static_cast<int>(x * s % h_order);
    }
    const bool single = k_orders.size() == 1;
    const std::string h_letter = single ? "x" : "a";
    std::vector<std::string> names(static_cast<std::size_t>(nk) * h_order);
    for (int e = 0; e < nk; ++e) {
        auto exps = k_exps(e);
        for (int x = 0; x < h_order; ++x) {
            // normal form (k,h) = k*h = action[k](h) * k, printed H-part first
            int hx = action.perm[e][x];
            std::string s = exp_term(h_letter, hx);
            for (std::size_t i = 0; i < exps.size(); ++i)
                s += exp_term(single ? "y" : kLetters[i], exps[i]);
            names[static_cast<std::size_t>(e) * h_order + x] = s.empty() ? "1" : s;
        }
    }
    return build_semidirect(k, h, action, std::move(names));
}

// ---------------------------------------------------------------- subgroups

bool Subgroup::contains(int a) const {
    return std::binary_search(members.begin(), members.end(), a);
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{g, std::move(all)};
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& seeds) {
    const int n = g->order();
    std::vector<char> in(n, 0);
    std::vector<int> work;
    in[0] = 1;
    work.push_back(0);
    for (int s : seeds) {
        g->check_index(s);
        if (!in[s]) { in[s] = 1; work.push_back(s); }
    }
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < work.size(); ++j) {
            int p = g->mul(work[i], work[j]);
            if (!in[p]) { in[p] = 1; work.push_back(p); }
            p = g->mul(work[j], work[i]);
            if (!in[p]) { in[p] = 1; work.push_back(p); }
        }
    }
    std::sort(work.begin(), work.end());
    return Subgroup{g, std::move(work)};
}

Subgroup commutator_subgroup(const GroupPtr& g) {
    const int n = g->order();
    std::vector<char> seen(n, 0);
    std::vector<int> seeds;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int c = g->mul(g->mul(a, b), g->mul(g->inv(a), g->inv(b)));
            if (!seen[c]) { seen[c] = 1; seeds.push_back(c); }
        }
    }
    return generated_subgroup(g, seeds);
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) {
    for (int a = 0; a < g.order(); ++a) {
        int ia = g.inv(a);
        for (int m : n.members)
            if (!n.contains(g.mul(g.mul(a, m), ia))) return false;
    }
    return true;
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& s) {
    std::vector<int> out;
    for (int a = 0; a < g->order(); ++a) {
        int ia = g->inv(a);
        bool ok = true;
        for (int m : s.members) {
            if (!s.contains(g->mul(g->mul(a, m), ia))) { ok = false; break; }
        }
        if (ok) out.push_back(a);
    }
    return Subgroup{g, std::move(out)};
}

std::pair<GroupPtr, QuotientMap> quotient(const GroupPtr& g, const Subgroup& n) {
    if (n.parent.get() != g.get()) throw std::invalid_argument("subgroup belongs to a different group");
    if (!is_normal(*g, n)) throw std::invalid_argument("quotient by a non-normal subgroup");
    const int order = g->order();
    std::vector<int> rep(order);
    for (int a = 0; a < order; ++a) {
        int r = order;
        for (int m : n.members) r = std::min(r, g->mul(a, m));
        rep[a] = r;
    }
    std::vector<int> reps;
    for (int a = 0; a < order; ++a)
        if (rep[a] == a) reps.push_back(a);
    std::vector<int> idx(order, -1);
    for (std::size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
    const int q = static_cast<int>(reps.size());
    std::vector<std::string> names(q);
    std::vector<int> table(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i) names[i] = "[" + g->name(reps[i]) + "]";
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<std::size_t>(i) * q + j] = idx[rep[g->mul(reps[i], reps[j])]];
    QuotientMap map;
    map.source = g;
    map.target = make_trusted_group(std::move(names), std::move(table), RawTableMeta{});
    map.image.resize(order);
    for (int a = 0; a < order; ++a) map.image[a] = idx[rep[a]];
    return {map.target, std::move(map)};
}

std::pair<GroupPtr, std::vector<int>> subgroup_as_group(const Subgroup& s) {
    const auto& g = *s.parent;
    const int m = s.order();
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < m; ++i) pos[s.members[i]] = i;
    std::vector<std::string> names(m);
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) names[i] = g.name(s.members[i]);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            int p = pos[g.mul(s.members[i], s.members[j])];
            if (p < 0) throw std::invalid_argument("member set is not closed under multiplication");
            table[static_cast<std::size_t>(i) * m + j] = p;
        }
    }
    return {make_trusted_group(std::move(names), std::move(table), RawTableMeta{}), s.members};
}

// ---------------------------------------------------------------- structure

std::vector<std::pair<int, int>> abelian_basis(const GroupPtr& a) {
    if (!a->is_abelian()) throw std::invalid_argument("abelian_basis requires an abelian group");
    const int n = a->order();
    if (n == 1) return {};
    int best = 1, best_ord = 1;
    for (int x = 1; x < n; ++x) {
        int o = a->element_order(x);
        if (o > best_ord) { best_ord = o; best = x; }
    }
    Subgroup b = generated_subgroup(a, {best});
    std::vector<std::pair<int, int>> out{{best, best_ord}};
    if (b.order() == n) return out;
    // Maximal subgroup intersecting <best> trivially is a complement.
    Subgroup c = trivial_subgroup(a);
    for (int x = 1; x < n && c.order() * b.order() < n; ++x) {
        if (c.contains(x)) continue;
        std::vector<int> seeds = c.members;
        seeds.push_back(x);
        Subgroup t = generated_subgroup(a, seeds);
        bool trivial_meet = true;
        for (int m : t.members) {
            if (m != 0 && b.contains(m)) { trivial_meet = false; break; }
        }
        if (trivial_meet) c = std::move(t);
    }
    if (c.order() * b.order() != n)
        throw std::logic_error("abelian_basis: complement search failed");
    auto [cg, emb] = subgroup_as_group(c);
    for (auto [e, o] : abelian_basis(cg)) out.emplace_back(emb[e], o);
    return out;
}

std::optional<std::pair<Subgroup, QuotientMap>> find_cyclic_quotient(const GroupPtr& g, int m) {
    if (m < 1) throw std::invalid_argument("quotient order must be positive");
    auto [ab, pi] = quotient(g, commutator_subgroup(g));
    auto basis = abelian_basis(ab);
    int pick = -1, pick_ord = 0;
    for (auto [e, o] : basis) {
        if (o % m != 0) continue;
        if (pick < 0 || o < pick_ord || (o == pick_ord && e < pick)) { pick = e; pick_ord = o; }
    }
    if (m == 1) { pick = 0; pick_ord = 1; }
    if (pick < 0) return std::nullopt;
    std::vector<int> seeds{ab->power(pick, m)};
    for (auto [e, o] : basis)
        if (e != pick) seeds.push_back(e);
    Subgroup c = generated_subgroup(ab, seeds);
    auto [qm, qc] = quotient(ab, c);
    if (qm->order() != m) throw std::logic_error("find_cyclic_quotient: wrong quotient order");
    int gen = -1;
    for (int x = 0; x < m; ++x)
        if (qm->element_order(x) == m) { gen = x; break; }
    if (gen < 0) throw std::logic_error("find_cyclic_quotient: quotient not cyclic");
    std::vector<int> dlog(m, -1);
    {
        int acc = 0;
        for (int t = 0; t < m; ++t) { dlog[acc] = t; acc = qm->mul(acc, gen); }
    }
    QuotientMap map;
    map.source = g;
    map.target = make_cyclic(m);
    map.image.resize(g->order());
    std::vector<int> kernel;
    for (int x = 0; x < g->order(); ++x) {
        map.image[x] = dlog[qc.image[pi.image[x]]];
        if (map.image[x] == 0) kernel.push_back(x);
    }
    return std::make_pair(Subgroup{g, std::move(kernel)}, std::move(map));
}

Subgroup sylow2_subgroup(const GroupPtr& g) {
    int two_part = 1, n = g->order();
    while (n % 2 == 0) { two_part *= 2; n /= 2; }
    Subgroup p = trivial_subgroup(g);
    while (p.order() < two_part) {
        Subgroup nz = normalizer(g, p);
        int ext = -1;
        for (int a : nz.members) {
            if (!p.contains(a) && p.contains(g->mul(a, a))) { ext = a; break; }
        }
        if (ext < 0) throw std::logic_error("sylow2_subgroup: extension element not found");
        std::vector<int> seeds = p.members;
        seeds.push_back(ext);
        p = generated_subgroup(g, seeds);
    }
    return p;
}

Sylow2Class hall_paige_check(const GroupPtr& g) {
    Subgroup p = sylow2_subgroup(g);
    if (p.order() == 1) return Sylow2Class::Trivial2Sylow;
    for (int a : p.members)
        if (g->element_order(a) == p.order()) return Sylow2Class::Cyclic2Sylow;
    return Sylow2Class::NonCyclic2Sylow;
}

const char* to_string(Sylow2Class c) {
    switch (c) {
        case Sylow2Class::Trivial2Sylow: return "Trivial2Sylow";
        case Sylow2Class::NonCyclic2Sylow: return "NonCyclic2Sylow";
        case Sylow2Class::Cyclic2Sylow: return "Cyclic2Sylow";
    }
    return "?";
}

}  // namespace harmseq
