#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace harmseq {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Action of a group K on a group H: one permutation of H's element indices per
// element of K. Valid actions map each K-element to an automorphism of H and
// the assignment itself is a homomorphism K -> Aut(H).
struct Action {
    std::vector<std::vector<int>> perm;  // perm[k][h]
};

struct CyclicMeta { int n = 0; };
struct DihedralMeta { int order = 0; };
struct DirectProductMeta { GroupPtr a, b; };
struct SemidirectMeta { GroupPtr k, h; Action action; };
struct RawTableMeta {};

using FactorMeta =
    std::variant<RawTableMeta, CyclicMeta, DihedralMeta, DirectProductMeta, SemidirectMeta>;

// Finite group as a dense multiplication table over element indices 0..n-1.
// The identity is always index 0. Instances are immutable after construction
// and safe to share across threads.
class FiniteGroup {
public:
    // Validates the whole invariant set (Latin square, identity at 0, unique
    // inverses, associativity); throws InputError on violation.
    static GroupPtr from_table(std::vector<std::string> names, std::vector<int> table,
                               FactorMeta meta = RawTableMeta{});

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int power(int a, long long e) const;
    int element_order(int a) const;
    bool is_abelian() const;

    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    // Resolves a canonical element name, or a "#i" index literal.
    std::optional<int> index_of(std::string_view token) const;

    const FactorMeta& meta() const { return meta_; }
    void check_index(int a) const;

private:
    friend GroupPtr make_trusted_group(std::vector<std::string>, std::vector<int>, FactorMeta);
    FiniteGroup(std::vector<std::string> names, std::vector<int> table, FactorMeta meta);

    int n_;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
    FactorMeta meta_;
};

struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;  // sorted, contains 0

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int a) const;
};

// Surjective homomorphism source -> target recorded pointwise.
struct QuotientMap {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> image;  // image[src index] = target index
};

enum class Sylow2Class { Trivial2Sylow, NonCyclic2Sylow, Cyclic2Sylow };

// ---- constructors ----
GroupPtr make_cyclic(int n);
GroupPtr make_dihedral(int order);
GroupPtr make_direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr make_semidirect(const GroupPtr& k, const GroupPtr& h, const Action& action);
// K = Z_{k_orders[0]} x ... acting on H = Z_{h_order}; generator i multiplies by
// multipliers[i] mod h_order. Element names follow the x/y (or a/x/y/...) notation.
GroupPtr make_semidirect_cyclic(const std::vector<int>& k_orders, int h_order,
                                const std::vector<long long>& multipliers);

// ---- subgroup machinery ----
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& seeds);
Subgroup commutator_subgroup(const GroupPtr& g);
bool is_normal(const FiniteGroup& g, const Subgroup& n);
Subgroup normalizer(const GroupPtr& g, const Subgroup& s);
std::pair<GroupPtr, QuotientMap> quotient(const GroupPtr& g, const Subgroup& n);
// Subgroup reindexed as a standalone group; second value embeds new indices
// back into the parent (embedding[i] = parent index).
std::pair<GroupPtr, std::vector<int>> subgroup_as_group(const Subgroup& s);

// ---- structure ----
// Cyclic decomposition of an abelian group: (generator, order) per factor,
// orders non-increasing. Greedy maximal-order extraction with complement search.
std::vector<std::pair<int, int>> abelian_basis(const GroupPtr& a);
// Normal H with G/H cyclic of order m, together with the projection onto Z_m;
// nullopt when no such quotient exists.
std::optional<std::pair<Subgroup, QuotientMap>> find_cyclic_quotient(const GroupPtr& g, int m);
Subgroup sylow2_subgroup(const GroupPtr& g);
Sylow2Class hall_paige_check(const GroupPtr& g);

// Full invariant validation used by tests and RawTable ingestion; returns a
// diagnostic string, empty when the table is a valid group table.
std::string validate_group_table(const std::vector<std::string>& names,
                                 const std::vector<int>& table);

const char* to_string(Sylow2Class c);

}  // namespace harmseq
