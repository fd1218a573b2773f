#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "powerdiam/bounds.hpp"
#include "powerdiam/diameter.hpp"
#include "powerdiam/group.hpp"
#include "powerdiam/power.hpp"

namespace powerdiam {

// Two-generator set for S_n (n >= 3): the full rotation a = (1 2 ... n) with
// b = (1 2), or the short rotation a' = (2 3 ... n) with b. The default picks
// whichever has coprime member orders: full for odd degree, short for even.
GenSet sn_generators(int n, SnGensetKind kind, const Limits& limits = {});
GenSet sn_generators(int n, const Limits& limits = {});

// {a, b} for the dihedral group D_n as degree-n permutations: the rotation
// a = (1 2 ... n) and the reflection fixing point 1.
GenSet dn_generators(int n, const Limits& limits = {});

// Word for sigma over an S_n family set, built from its cycle decomposition:
// cycles to transpositions, transpositions to adjacent ones, adjacent ones to
// rotation-conjugated copies of b. Never longer than sn_diameter_bound.
Word sn_express(const GenSet& a, const Permutation& sigma);

// Writes every element of D_n^k (n odd) as a word over the staircase
// generating set with total length at most k(2n-2). Elements are first put
// into the normal form g1^e1 ... gk^ek, e_i in [0, 2n-1], then runs of the
// top exponent 2n-1 are collapsed and stragglers commuted away.
class DihedralPowerExpress {
 public:
  DihedralPowerExpress(int n, int k, const Limits& limits = {});

  int n() const { return n_; }
  int copies() const { return k_; }
  const GenSet& genset() const { return genset_; }
  const PowerGroup& group() const { return *power_; }
  const PowerPtr& group_ptr() const { return power_; }
  std::int64_t length_target() const { return static_cast<std::int64_t>(k_) * (2 * n_ - 2); }

  // exponent vector of the normal form, one entry per generator
  std::vector<int> normal_form(ElementIndex x) const;
  Word express(ElementIndex x) const;

 private:
  Word rewrite_pair(const std::vector<int>& e) const;
  Word rewrite_chain(const std::vector<int>& e) const;

  int n_ = 0;
  int k_ = 0;
  PowerPtr power_;
  GenSet genset_;
  std::vector<std::int32_t> nf_;  // k exponents per element, flattened
};

// Direct-multiplication checks of the staircase generator identities used by
// the rewriter. Each returns how many instances were checked and how many
// failed; the rewriter is only sound when every count of failures is zero.
struct RelationCheck {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

// k = 2: g1^s g2^t = g2^{(-1)^s t} g1^{(-1)^t s}
RelationCheck check_pair_swap(const DihedralPowerExpress& ctx);
// k >= 3, cyclically adjacent: g_j^s g_{j+1}^t = g_{j+1}^{(-1)^s t} g_j^s,
// and the mirrored form
RelationCheck check_adjacent_swap(const DihedralPowerExpress& ctx);
// k >= 4: cyclically distant generators commute (nothing to check for k = 3)
RelationCheck check_distant_commute(const DihedralPowerExpress& ctx);
// arcs of 2 <= r <= k-1 consecutive top powers collapse to singles in front
// of one top power
RelationCheck check_run_collapse(const DihedralPowerExpress& ctx);
// the full circle of k top powers collapses to the reversed product of
// single generators
RelationCheck check_full_circle(const DihedralPowerExpress& ctx);
// k >= 3: a lone top power commutes across its successor, reflecting the
// exponent: g_j^{2n-1} g_{j+1}^i = g_{j+1}^{2n-i} g_j^{2n-1}
RelationCheck check_top_power_swap(const DihedralPowerExpress& ctx);

}  // namespace powerdiam
