#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "powerdiam/error.hpp"
#include "powerdiam/perm.hpp"

namespace powerdiam {

using ElementIndex = std::uint32_t;

// Finite group with elements addressed by dense indices. Index 0 is always
// the identity. Groups are created through the factory functions below and
// always live behind shared_ptr.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  static constexpr ElementIndex identity = 0;

  virtual ~FiniteGroup() = default;
  virtual std::size_t size() const = 0;
  virtual ElementIndex mul(ElementIndex a, ElementIndex b) const = 0;
  virtual ElementIndex inverse(ElementIndex a) const = 0;
  virtual std::string element_name(ElementIndex a) const = 0;
  virtual std::string describe() const = 0;

  std::uint64_t order_of(ElementIndex a) const;
  ElementIndex power(ElementIndex a, std::int64_t e) const;
  ElementIndex conjugate(ElementIndex a, ElementIndex by) const;   // by^-1 * a * by
  ElementIndex commutator(ElementIndex a, ElementIndex b) const;   // a^-1 b^-1 a b

  // Groups that know the rank of their abelianization without computing the
  // commutator subgroup can short-circuit derived_quotient_rank here.
  virtual std::optional<int> abelianization_rank_hint() const { return std::nullopt; }

 protected:
  FiniteGroup() = default;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Concrete group of permutations, enumerated as the closure of a seed list.
// Element order: identity first, then breadth-first products of the seeds in
// seed order, so indices are reproducible across runs.
class PermGroup final : public FiniteGroup {
 public:
  static std::shared_ptr<const PermGroup> closure(const std::vector<Permutation>& seeds,
                                                  const Limits& limits = {});

  std::size_t size() const override { return elements_.size(); }
  ElementIndex mul(ElementIndex a, ElementIndex b) const override;
  ElementIndex inverse(ElementIndex a) const override;
  std::string element_name(ElementIndex a) const override;
  std::string describe() const override;

  int degree() const { return degree_; }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }
  std::optional<ElementIndex> index_of(const Permutation& p) const;
  // Indices of the distinct seed permutations, in seed order.
  const std::vector<ElementIndex>& seed_indices() const { return seed_indices_; }

 private:
  PermGroup() = default;

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex, PermHash> index_;
  std::vector<ElementIndex> seed_indices_;
  // multiplication table, only kept for small groups
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
};

// Generating set of a group: an ordered list of element indices with display
// labels. Verifies at construction that the members generate the whole group.
// The identity is dropped unless keep_identity is set (it never helps a word).
struct GenSetOptions {
  bool keep_identity = false;
  std::string name;  // optional display name, e.g. "A'"
};

class GenSet {
 public:
  GenSet(GroupPtr group, std::vector<ElementIndex> members, std::vector<std::string> labels,
         GenSetOptions opts = {});

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return members_.size(); }
  ElementIndex member(std::size_t i) const { return members_[i]; }
  const std::vector<ElementIndex>& members() const { return members_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  std::string display() const;  // "A' = {a',b}" when named, "{a',b}" otherwise

 private:
  GroupPtr group_;
  std::vector<ElementIndex> members_;
  std::vector<std::string> labels_;
  std::string name_;
};

// Subgroup generated by the given members: sorted parent indices, returned
// vector is closed under products. Identity is always included.
std::vector<ElementIndex> subgroup_closure(const FiniteGroup& g,
                                           std::span<const ElementIndex> members);
bool generates(const FiniteGroup& g, std::span<const ElementIndex> members);

// View of a subgroup as a group in its own right; keeps the embedding.
class SubgroupView final : public FiniteGroup {
 public:
  SubgroupView(GroupPtr parent, std::vector<ElementIndex> sorted_parent_indices);

  std::size_t size() const override { return to_parent_.size(); }
  ElementIndex mul(ElementIndex a, ElementIndex b) const override;
  ElementIndex inverse(ElementIndex a) const override;
  std::string element_name(ElementIndex a) const override;
  std::string describe() const override;

  const GroupPtr& parent() const { return parent_; }
  ElementIndex to_parent(ElementIndex local) const { return to_parent_[local]; }
  const std::vector<ElementIndex>& parent_indices() const { return to_parent_; }
  std::optional<ElementIndex> from_parent(ElementIndex parent_index) const;
  bool contains_parent(ElementIndex parent_index) const;

 private:
  GroupPtr parent_;
  std::vector<ElementIndex> to_parent_;
  std::unordered_map<ElementIndex, ElementIndex> from_parent_;
};

// Quotient by a normal subgroup. Cosets are named by their minimal parent
// index; normality is checked element by element, not just on generators.
class QuotientGroup final : public FiniteGroup {
 public:
  QuotientGroup(GroupPtr parent, const SubgroupView& normal);

  std::size_t size() const override { return reps_.size(); }
  ElementIndex mul(ElementIndex a, ElementIndex b) const override;
  ElementIndex inverse(ElementIndex a) const override;
  std::string element_name(ElementIndex a) const override;
  std::string describe() const override;

  ElementIndex rep(ElementIndex coset) const { return reps_[coset]; }
  ElementIndex coset_of(ElementIndex parent_index) const { return coset_of_[parent_index]; }

 private:
  GroupPtr parent_;
  std::vector<ElementIndex> reps_;
  std::vector<ElementIndex> coset_of_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
};

std::shared_ptr<const SubgroupView> commutator_subgroup(const FiniteGroup& g);
std::shared_ptr<const QuotientGroup> quotient(const FiniteGroup& g, const SubgroupView& normal);

bool is_abelian(const FiniteGroup& g);
bool is_perfect(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

// Invariant factor decomposition, largest factor first: m_1 >= m_2 >= ...
// with each m_{i+1} dividing m_i and product |G|. Abelian groups only.
class AbelianType {
 public:
  explicit AbelianType(std::vector<std::uint64_t> invariants);
  const std::vector<std::uint64_t>& invariants() const { return invariants_; }
  std::uint64_t order() const;
  std::string to_string() const;  // "Z6 x Z2"

 private:
  std::vector<std::uint64_t> invariants_;
};

AbelianType abelian_invariants(const FiniteGroup& g, const Limits& limits = {});

struct RankResult {
  int value = 0;
  std::vector<ElementIndex> witness;  // lexicographically first minimum generating set
  std::uint64_t subsets_examined = 0;
  int lower_bound_used = 0;
};

// Minimum size of a generating set, by exhaustive subset search in ascending
// size and lexicographic index order. The search starts at the rank of the
// abelianization, which is a lower bound, and never proposes the identity as
// a member (any generating set containing it stays generating without it).
RankResult rank(const FiniteGroup& g, const Limits& limits = {});
int derived_quotient_rank(const FiniteGroup& g);

struct GeneratorFile {
  int degree = 0;
  std::vector<Permutation> generators;
};

// Text format: optional '#' comments, a "degree <d>" line, then one
// permutation in cycle notation per line.
GeneratorFile load_generators(std::istream& in);
GeneratorFile load_generators_file(const std::string& path);

}  // namespace powerdiam
