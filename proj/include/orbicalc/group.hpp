#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbicalc {

/// A permutation of 0..degree-1 as its image array.
using Permutation = std::vector<int>;

/// A map between element sets, as the image of every element index.
using ElementMap = std::vector<int>;

struct GroupLimits {
  std::size_t associativity_check_bound = 128;  ///< full O(n^3) check up to this order
  std::size_t closure_cap = 10000;
  std::size_t subgroup_enumeration_cap = 48;
};

/// A finite group materialized as its multiplication table.
///
/// Immutable after construction. The constructor validates the group axioms
/// (Latin square, identity, inverses, associativity: exhaustive up to
/// `associativity_check_bound`, sampled above) and precomputes inverses,
/// element orders and the conjugacy classes.
class FiniteGroup {
 public:
  /// Throws DomainError naming the violated axiom.
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {},
                       const GroupLimits& limits = {});

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inverse_[g]); }  ///< g x g^-1
  int power(int a, long k) const;
  int element_order(int a) const { return element_order_[a]; }
  int exponent() const { return exponent_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<int>> table() const;

  /// Conjugacy classes; the identity class comes first, the rest ordered by smallest member.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  int n_ = 0;
  int identity_ = 0;
  int exponent_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// A conjugacy class of subgroups, carried by a canonical representative
/// (the lexicographically least sorted element list among the conjugates).
struct SubgroupClass {
  std::vector<int> representative;
  int normalizer_order = 0;
  int conjugates_count = 0;

  int order() const { return static_cast<int>(representative.size()); }
};

/// Closure of the generators under composition, elements ordered breadth-first from
/// the identity (generators applied in input order). Permutation product is
/// (p*q)(i) = p[q[i]].
FiniteGroup group_from_generators(int degree, const std::vector<Permutation>& generators,
                                  const GroupLimits& limits = {});

std::string cycle_notation(const Permutation& p);

const std::vector<std::vector<int>>& conjugacy_classes(const FiniteGroup& g);

/// Sorted element list of the subgroup generated by `gens`.
std::vector<int> generate_subgroup(const FiniteGroup& g, std::span<const int> gens);

bool is_subgroup(const FiniteGroup& g, std::span<const int> elements);
bool is_normal(const FiniteGroup& g, std::span<const int> subgroup);

/// Z_G(S); S must be nonempty.
SubgroupClass centralizer(const FiniteGroup& g, std::span<const int> s);

/// Describes the subgroup `elements` (sorted) as a SubgroupClass of g.
SubgroupClass describe_subgroup(const FiniteGroup& g, std::vector<int> elements);

std::vector<int> normalizer(const FiniteGroup& g, std::span<const int> subgroup);
std::vector<int> center(const FiniteGroup& g);

/// One class per conjugacy class of subgroups, ordered by (order, representative).
/// Throws DomainError when |G| exceeds the enumeration cap.
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, const GroupLimits& limits = {});

/// All normal subgroups as sorted element lists, ordered by (order, elements).
std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g, const GroupLimits& limits = {});

/// Every subgroup, as sorted element lists.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, const GroupLimits& limits = {});

/// A subgroup as a group in its own right. Element i of the result is
/// `elements[i]`; the returned map is the inclusion.
std::pair<FiniteGroup, ElementMap> subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elements);

/// G/N for a normal subgroup N, cosets ordered by their smallest member; returns the
/// projection G -> G/N alongside.
std::pair<FiniteGroup, ElementMap> quotient_group(const FiniteGroup& g, std::span<const int> normal);

/// Greedy generating set: largest element order first, ties by index, skipping
/// elements already generated.
std::vector<int> greedy_generators(const FiniteGroup& g);

/// Extends `gens[i] -> images[i]` multiplicatively over the subgroup generated by
/// `gens`. Returns nullopt if the assignment violates a relation. Elements outside
/// the generated subgroup map to -1.
std::optional<ElementMap> extend_to_homomorphism(const FiniteGroup& g, std::span<const int> gens,
                                                 std::span<const int> images, const FiniteGroup& h);

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const ElementMap& phi);
bool is_injective(const ElementMap& phi);
/// psi o phi.
ElementMap compose(const ElementMap& phi, const ElementMap& psi);
ElementMap identity_map(int n);
ElementMap inverse_map(const ElementMap& bijection);

/// An isomorphism G -> H if one exists. Invariant screening first (order,
/// element-order multiset, class-size/order profile), then backtracking on a
/// greedy generating set.
std::optional<ElementMap> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Every automorphism of g, the identity first, then lexicographic.
std::vector<ElementMap> automorphisms(const FiniteGroup& g);

/// Table-level direct product; element (a, b) has index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace orbicalc
