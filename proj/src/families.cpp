#include "powerdiam/families.hpp"

#include <algorithm>
#include <functional>

namespace powerdiam {

namespace {

Permutation rotation(int n, int skip_first) {
  std::vector<std::uint16_t> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  for (int i = skip_first; i < n; ++i) {
    int next = i + 1 == n ? skip_first : i + 1;
    img[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(next);
  }
  return Permutation(std::move(img));
}

}  // namespace

GenSet sn_generators(int n, SnGensetKind kind, const Limits& limits) {
  if (n < 3) throw std::invalid_argument("symmetric group families need degree at least 3");
  Permutation cycle = kind == SnGensetKind::full_cycle ? rotation(n, 0) : rotation(n, 1);
  Permutation b = parse_cycles("(1 2)", n);
  auto g = PermGroup::closure({cycle, b}, limits);
  std::string cycle_label = kind == SnGensetKind::full_cycle ? "a" : "a'";
  std::string name = kind == SnGensetKind::full_cycle ? "A" : "A'";
  return GenSet(g, g->seed_indices(), {cycle_label, "b"}, {.name = name});
}

GenSet sn_generators(int n, const Limits& limits) {
  return sn_generators(n, n % 2 ? SnGensetKind::full_cycle : SnGensetKind::short_cycle, limits);
}

GenSet dn_generators(int n, const Limits& limits) {
  if (n < 3) throw std::invalid_argument("dihedral families need n at least 3");
  Permutation a = rotation(n, 0);
  std::vector<std::uint16_t> img(static_cast<std::size_t>(n));
  img[0] = 0;
  for (int j = 2; j <= n; ++j)
    img[static_cast<std::size_t>(j - 1)] = static_cast<std::uint16_t>(n + 2 - j - 1);
  Permutation b(std::move(img));
  auto g = PermGroup::closure({a, b}, limits);
  if (g->size() != 2 * static_cast<std::size_t>(n))
    throw std::logic_error("dihedral construction produced the wrong order");
  return GenSet(g, g->seed_indices(), {"a", "b"}, {.name = "A"});
}

namespace {

// append an adjacent transposition (i, i+1), 1-based i, as generator letters
void emit_adjacent(std::vector<std::int32_t>& letters, int n, int i, bool full_cycle) {
  const int lead = (n - i + 1) % n;
  const int tail = i - 1;
  if (full_cycle) {
    letters.insert(letters.end(), static_cast<std::size_t>(lead), 0);
    letters.push_back(1);
    letters.insert(letters.end(), static_cast<std::size_t>(tail), 0);
  } else {
    // the rotation is a' b, so each a becomes the pair (a', b)
    for (int t = 0; t < lead; ++t) {
      letters.push_back(0);
      letters.push_back(1);
    }
    letters.push_back(1);
    for (int t = 0; t < tail; ++t) {
      letters.push_back(0);
      letters.push_back(1);
    }
  }
}

}  // namespace

Word sn_express(const GenSet& a, const Permutation& sigma) {
  if (a.size() != 2) throw std::invalid_argument("expected a two-generator symmetric group set");
  const auto* pg = dynamic_cast<const PermGroup*>(&a.group());
  if (!pg) throw std::invalid_argument("expected a permutation group");
  const int n = pg->degree();
  if (sigma.degree() != n) throw std::invalid_argument("element degree differs from the group");
  const auto first_order = a.group().order_of(a.member(0));
  bool full_cycle;
  if (first_order == static_cast<std::uint64_t>(n))
    full_cycle = true;
  else if (first_order == static_cast<std::uint64_t>(n - 1))
    full_cycle = false;
  else
    throw std::invalid_argument("first member is neither rotation of the family");

  // cycles -> transpositions (c1 c2), (c1 c3), ... applied left to right,
  // then each (x, y) as an ascending and descending staircase of adjacent
  // transpositions
  Word w;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)] || sigma[static_cast<std::size_t>(start)] == start)
      continue;
    std::vector<int> cycle;
    for (int j = start; !seen[static_cast<std::size_t>(j)]; j = sigma[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j + 1);
    }
    for (std::size_t m = 1; m < cycle.size(); ++m) {
      int x = std::min(cycle[0], cycle[m]);
      int y = std::max(cycle[0], cycle[m]);
      for (int i = x; i < y; ++i) emit_adjacent(w.letters, n, i, full_cycle);
      for (int i = y - 2; i >= x; --i) emit_adjacent(w.letters, n, i, full_cycle);
    }
  }
  return w;
}

namespace {

GenSet staircase_for(int n, int k, const Limits& limits) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("the rewriter needs odd n >= 3");
  if (k < 2) throw std::invalid_argument("the rewriter needs k >= 2");
  return coprime_genset(dn_generators(n, limits), k, limits);
}

}  // namespace

DihedralPowerExpress::DihedralPowerExpress(int n, int k, const Limits& limits)
    : n_(n), k_(k), genset_(staircase_for(n, k, limits)) {
  power_ = std::dynamic_pointer_cast<const PowerGroup>(genset_.group_ptr());

  const int top = 2 * n_;
  std::vector<std::vector<ElementIndex>> gen_pow(static_cast<std::size_t>(k_));
  for (int j = 0; j < k_; ++j) {
    gen_pow[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(top));
    for (int e = 0; e < top; ++e)
      gen_pow[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] =
          power_->power(genset_.member(static_cast<std::size_t>(j)), e);
  }

  const std::size_t size = power_->size();
  nf_.assign(size * static_cast<std::size_t>(k_), -1);
  std::vector<std::int32_t> digits(static_cast<std::size_t>(k_));
  std::size_t assigned = 0;
  std::function<void(int, ElementIndex)> sweep = [&](int j, ElementIndex prefix) {
    if (j == k_) {
      auto* slot = &nf_[static_cast<std::size_t>(prefix) * static_cast<std::size_t>(k_)];
      if (slot[0] >= 0) throw std::logic_error("normal forms collide; the expression is not unique");
      std::copy(digits.begin(), digits.end(), slot);
      ++assigned;
      return;
    }
    for (int e = 0; e < top; ++e) {
      digits[static_cast<std::size_t>(j)] = e;
      sweep(j + 1, power_->mul(prefix, gen_pow[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)]));
    }
  };
  sweep(0, FiniteGroup::identity);
  if (assigned != size) throw std::logic_error("normal forms do not cover the group");
}

std::vector<int> DihedralPowerExpress::normal_form(ElementIndex x) const {
  if (x >= power_->size()) throw std::invalid_argument("element index out of range");
  const auto* slot = &nf_[static_cast<std::size_t>(x) * static_cast<std::size_t>(k_)];
  return std::vector<int>(slot, slot + k_);
}

namespace {

void emit_run(Word& w, int gen, int count) {
  for (int t = 0; t < count; ++t) w.letters.push_back(gen);
}

}  // namespace

// k = 2: both coordinates are shared, so the only identity available swaps
// the two generators outright, reflecting exponents of odd partners.
Word DihedralPowerExpress::rewrite_pair(const std::vector<int>& e) const {
  const int top = 2 * n_ - 1;
  const int budget = 2 * (2 * n_ - 2);
  const int i = e[0], j = e[1];
  Word w;
  if (i + j <= budget) {
    emit_run(w, 0, i);
    emit_run(w, 1, j);
    return w;
  }
  if (i == top) {
    // g1^top g2^j = g2^{2n-j} g1^{±top reduced}
    emit_run(w, 1, 2 * n_ - j);
    emit_run(w, 0, j % 2 ? 1 : top);
    return w;
  }
  // j == top, i even (odd i with i + j > budget would force i == top)
  emit_run(w, 1, i % 2 ? 1 : top);
  emit_run(w, 0, 2 * n_ - i);
  return w;
}

// k >= 3: walk the exponents once, collapsing maximal runs of the top
// exponent and commuting isolated top powers across their successor.
Word DihedralPowerExpress::rewrite_chain(const std::vector<int>& e) const {
  const int top = 2 * n_ - 1;
  std::vector<int> gens(static_cast<std::size_t>(k_));
  std::vector<int> exps = e;
  for (int p = 0; p < k_; ++p) gens[static_cast<std::size_t>(p)] = p;

  if (exps[static_cast<std::size_t>(k_ - 1)] == top &&
      exps[static_cast<std::size_t>(k_ - 2)] != top) {
    // re-present in generator order g2 ... gk g1 so the trailing top power
    // gains a successor; crossing the shared coordinates reflects whichever
    // exponent sits next to an odd partner
    std::vector<int> r_gens, r_exps;
    r_gens.reserve(static_cast<std::size_t>(k_));
    r_exps.reserve(static_cast<std::size_t>(k_));
    r_gens.push_back(1);
    r_exps.push_back(exps[0] % 2 ? (2 * n_ - exps[1]) % (2 * n_) : exps[1]);
    for (int p = 2; p < k_; ++p) {
      r_gens.push_back(p);
      r_exps.push_back(exps[static_cast<std::size_t>(p)]);
    }
    r_gens.push_back(0);
    r_exps.push_back((2 * n_ - exps[0]) % (2 * n_));  // the last exponent here is odd
    gens = std::move(r_gens);
    exps = std::move(r_exps);
  }

  Word w;
  int p = 0;
  while (p < k_) {
    if (exps[static_cast<std::size_t>(p)] != top) {
      emit_run(w, gens[static_cast<std::size_t>(p)], exps[static_cast<std::size_t>(p)]);
      ++p;
      continue;
    }
    int r = 1;
    while (p + r < k_ && exps[static_cast<std::size_t>(p + r)] == top) ++r;
    if (r == k_) {
      // the full circle of top powers is the reversed product of singles
      for (int q = k_ - 1; q >= 0; --q) emit_run(w, gens[static_cast<std::size_t>(q)], 1);
      p += r;
    } else if (r >= 2) {
      // a partial run collapses to singles, reversed, shielding one top power
      for (int q = p + r - 1; q > p; --q) emit_run(w, gens[static_cast<std::size_t>(q)], 1);
      emit_run(w, gens[static_cast<std::size_t>(p)], top);
      p += r;
    } else {
      // isolated top power: pair it with its successor and keep the cheaper
      // side of g_j^top g_{j+1}^i = g_{j+1}^{2n-i} g_j^top
      const int i = exps[static_cast<std::size_t>(p + 1)];
      if (i <= n_) {
        emit_run(w, gens[static_cast<std::size_t>(p)], top);
        emit_run(w, gens[static_cast<std::size_t>(p + 1)], i);
      } else {
        emit_run(w, gens[static_cast<std::size_t>(p + 1)], 2 * n_ - i);
        emit_run(w, gens[static_cast<std::size_t>(p)], top);
      }
      p += 2;
    }
  }
  return w;
}

Word DihedralPowerExpress::express(ElementIndex x) const {
  auto e = normal_form(x);
  Word w = k_ == 2 ? rewrite_pair(e) : rewrite_chain(e);
  if (static_cast<std::int64_t>(w.length()) > length_target())
    throw std::logic_error("rewritten word exceeds the length target");
  if (evaluate(genset_, w) != x)
    throw std::logic_error("rewritten word evaluates to the wrong element");
  return w;
}

namespace {

ElementIndex gen_power(const DihedralPowerExpress& ctx, int j, int e) {
  const int k = ctx.copies();
  int jj = ((j % k) + k) % k;
  return ctx.group().power(ctx.genset().member(static_cast<std::size_t>(jj)), e);
}

}  // namespace

RelationCheck check_pair_swap(const DihedralPowerExpress& ctx) {
  RelationCheck rc;
  if (ctx.copies() != 2) return rc;
  const int top = 2 * ctx.n();
  const auto& g = ctx.group();
  for (int s = 1; s < top; ++s) {
    for (int t = 1; t < top; ++t) {
      ++rc.checked;
      auto lhs = g.mul(gen_power(ctx, 0, s), gen_power(ctx, 1, t));
      int t2 = s % 2 ? (top - t) % top : t;
      int s2 = t % 2 ? (top - s) % top : s;
      auto rhs = g.mul(gen_power(ctx, 1, t2), gen_power(ctx, 0, s2));
      if (lhs != rhs) ++rc.violations;
    }
  }
  return rc;
}

RelationCheck check_adjacent_swap(const DihedralPowerExpress& ctx) {
  RelationCheck rc;
  const int k = ctx.copies();
  if (k < 3) return rc;
  const int top = 2 * ctx.n();
  const auto& g = ctx.group();
  for (int j = 0; j < k; ++j) {
    for (int s = 1; s < top; ++s) {
      for (int t = 1; t < top; ++t) {
        int t2 = s % 2 ? (top - t) % top : t;
        ++rc.checked;
        auto lhs = g.mul(gen_power(ctx, j, s), gen_power(ctx, j + 1, t));
        auto rhs = g.mul(gen_power(ctx, j + 1, t2), gen_power(ctx, j, s));
        if (lhs != rhs) ++rc.violations;
        ++rc.checked;
        auto lhs2 = g.mul(gen_power(ctx, j + 1, t), gen_power(ctx, j, s));
        auto rhs2 = g.mul(gen_power(ctx, j, s), gen_power(ctx, j + 1, t2));
        if (lhs2 != rhs2) ++rc.violations;
      }
    }
  }
  return rc;
}

RelationCheck check_distant_commute(const DihedralPowerExpress& ctx) {
  RelationCheck rc;
  const int k = ctx.copies();
  const int top = 2 * ctx.n();
  const auto& g = ctx.group();
  for (int j = 0; j < k; ++j) {
    for (int m = j + 2; m < k; ++m) {
      if (j == 0 && m == k - 1) continue;  // cyclically adjacent
      for (int s = 1; s < top; ++s) {
        for (int t = 1; t < top; ++t) {
          ++rc.checked;
          auto lhs = g.mul(gen_power(ctx, j, s), gen_power(ctx, m, t));
          auto rhs = g.mul(gen_power(ctx, m, t), gen_power(ctx, j, s));
          if (lhs != rhs) ++rc.violations;
        }
      }
    }
  }
  return rc;
}

RelationCheck check_run_collapse(const DihedralPowerExpress& ctx) {
  RelationCheck rc;
  const int k = ctx.copies();
  const int top = 2 * ctx.n() - 1;
  const auto& g = ctx.group();
  for (int j = 0; j < k; ++j) {
    for (int r = 2; r <= k - 1; ++r) {
      ++rc.checked;
      ElementIndex lhs = FiniteGroup::identity;
      for (int q = 0; q < r; ++q) lhs = g.mul(lhs, gen_power(ctx, j + q, top));
      ElementIndex rhs = FiniteGroup::identity;
      for (int q = r - 1; q > 0; --q) rhs = g.mul(rhs, gen_power(ctx, j + q, 1));
      rhs = g.mul(rhs, gen_power(ctx, j, top));
      if (lhs != rhs) ++rc.violations;
    }
  }
  return rc;
}

RelationCheck check_full_circle(const DihedralPowerExpress& ctx) {
  RelationCheck rc;
  const int k = ctx.copies();
  const int top = 2 * ctx.n() - 1;
  const auto& g = ctx.group();
  for (int j = 0; j < k; ++j) {
    ++rc.checked;
    ElementIndex lhs = FiniteGroup::identity;
    for (int q = 0; q < k; ++q) lhs = g.mul(lhs, gen_power(ctx, j + q, top));
    ElementIndex rhs = FiniteGroup::identity;
    for (int q = k - 1; q >= 0; --q) rhs = g.mul(rhs, gen_power(ctx, j + q, 1));
    if (lhs != rhs) ++rc.violations;
  }
  return rc;
}

RelationCheck check_top_power_swap(const DihedralPowerExpress& ctx) {
  RelationCheck rc;
  const int k = ctx.copies();
  if (k < 3) return rc;  // with two copies the pair swap is the whole story
  const int top = 2 * ctx.n() - 1;
  const int order = 2 * ctx.n();
  const auto& g = ctx.group();
  for (int j = 0; j < k; ++j) {
    for (int i = 1; i < order; ++i) {
      ++rc.checked;
      auto lhs = g.mul(gen_power(ctx, j, top), gen_power(ctx, j + 1, i));
      auto rhs = g.mul(gen_power(ctx, j + 1, order - i), gen_power(ctx, j, top));
      if (lhs != rhs) ++rc.violations;
    }
  }
  return rc;
}

}  // namespace powerdiam
