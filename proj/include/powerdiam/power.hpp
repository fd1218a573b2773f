#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powerdiam/group.hpp"

namespace powerdiam {

// n-fold direct power of a base group. Elements are mixed-radix numbers over
// the base indices, leftmost coordinate most significant; nothing is
// materialized beyond the base group.
class PowerGroup final : public FiniteGroup {
 public:
  std::size_t size() const override { return size_; }
  ElementIndex mul(ElementIndex a, ElementIndex b) const override;
  ElementIndex inverse(ElementIndex a) const override;
  std::string element_name(ElementIndex a) const override;
  std::string describe() const override;

  const FiniteGroup& base() const { return *base_; }
  const GroupPtr& base_ptr() const { return base_; }
  int copies() const { return n_; }

  ElementIndex encode(std::span<const ElementIndex> coords) const;
  std::vector<ElementIndex> decode(ElementIndex x) const;
  ElementIndex coordinate(ElementIndex x, int slot) const;  // slot in [1, n]

 protected:
  std::optional<int> abelianization_rank_hint() const override;

 private:
  friend std::shared_ptr<const PowerGroup> direct_power(const GroupPtr&, int, const Limits&);
  PowerGroup(GroupPtr base, int n, const Limits& limits);

  GroupPtr base_;
  int n_ = 0;
  std::size_t base_size_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> weight_;
};

using PowerPtr = std::shared_ptr<const PowerGroup>;

PowerPtr direct_power(const GroupPtr& base, int n, const Limits& limits = {});

// Generating set of power->copies() * |base| elements: copy j of base member
// m sits at coordinate j with every other coordinate trivial. Slot-major
// order: all members at coordinate 1 first. Labels are "<label>@<slot>".
GenSet canonical_genset(const PowerPtr& power, const GenSet& base, const Limits& limits = {});
GenSet canonical_genset(const GenSet& base, int n, const Limits& limits = {});

// Staircase generating set of size n for base members a_1..a_k of pairwise
// coprime orders (n >= k): member i carries a_j at coordinate
// ((i-1 + j-1) mod n) + 1. Labels are "g1".."gn".
GenSet coprime_genset(const PowerPtr& power, const GenSet& base, const Limits& limits = {});
GenSet coprime_genset(const GenSet& base, int n, const Limits& limits = {});

ElementIndex projection(const PowerGroup& p, ElementIndex x, int slot);  // slot in [1, n]
// image of a generating set under one coordinate projection, sorted unique
std::vector<ElementIndex> genset_projection(const PowerGroup& p, const GenSet& a, int slot);

// Smallest positive exponent congruent to 1 modulo orders[which-1] and to 0
// modulo every other entry; requires pairwise coprime orders.
std::uint64_t recovery_exponent(std::span<const std::uint64_t> orders, std::size_t which);

enum class RankMethod { formula, brute_force };

struct PowerRankResult {
  std::uint64_t value = 0;
  RankMethod method = RankMethod::formula;
  std::string detail;
};

// rank(G^n): closed-form when the rank of G matches its abelianization, or
// past the replication threshold for imperfect / solvable groups; otherwise
// falls back to the exhaustive subset search on the power itself.
PowerRankResult power_rank(const FiniteGroup& g, int n, const Limits& limits = {});

// rank(G^n) = n exactly when the base members have pairwise coprime orders,
// the group is imperfect and n covers the staircase (n >= |A|).
std::optional<std::uint64_t> coprime_power_rank(const GenSet& base, int n);

}  // namespace powerdiam
