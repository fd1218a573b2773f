#include "powerdiam/power.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

namespace powerdiam {

PowerGroup::PowerGroup(GroupPtr base, int n, const Limits& limits)
    : base_(std::move(base)), n_(n) {
  if (!base_) throw std::invalid_argument("direct power needs a base group");
  if (n_ < 1) throw std::invalid_argument("direct power exponent must be at least 1");
  base_size_ = base_->size();
  std::uint64_t total = 1;
  for (int i = 0; i < n_; ++i) {
    if (total > limits.max_states / base_size_)
      throw ResourceError("state", limits.max_states, "--max-states");
    total *= base_size_;
  }
  size_ = static_cast<std::size_t>(total);
  weight_.resize(static_cast<std::size_t>(n_));
  weight_[static_cast<std::size_t>(n_ - 1)] = 1;
  for (int i = n_ - 2; i >= 0; --i)
    weight_[static_cast<std::size_t>(i)] = weight_[static_cast<std::size_t>(i + 1)] * base_size_;
}

PowerPtr direct_power(const GroupPtr& base, int n, const Limits& limits) {
  return std::shared_ptr<const PowerGroup>(new PowerGroup(base, n, limits));
}

ElementIndex PowerGroup::mul(ElementIndex a, ElementIndex b) const {
  std::uint64_t out = 0;
  for (auto w : weight_) {
    auto ca = static_cast<ElementIndex>((a / w) % base_size_);
    auto cb = static_cast<ElementIndex>((b / w) % base_size_);
    out += static_cast<std::uint64_t>(base_->mul(ca, cb)) * w;
  }
  return static_cast<ElementIndex>(out);
}

ElementIndex PowerGroup::inverse(ElementIndex a) const {
  std::uint64_t out = 0;
  for (auto w : weight_) {
    auto ca = static_cast<ElementIndex>((a / w) % base_size_);
    out += static_cast<std::uint64_t>(base_->inverse(ca)) * w;
  }
  return static_cast<ElementIndex>(out);
}

std::string PowerGroup::element_name(ElementIndex a) const {
  std::string out = "(";
  for (int i = 0; i < n_; ++i) {
    if (i) out += ", ";
    out += base_->element_name(coordinate(a, i + 1));
  }
  out += ")";
  return out;
}

std::string PowerGroup::describe() const {
  return "direct power with " + std::to_string(n_) + " coordinates over " + base_->describe() +
         ", order " + std::to_string(size_);
}

ElementIndex PowerGroup::encode(std::span<const ElementIndex> coords) const {
  if (coords.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("coordinate count differs from the power exponent");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= base_size_) throw std::invalid_argument("coordinate index out of range");
    out += static_cast<std::uint64_t>(coords[i]) * weight_[i];
  }
  return static_cast<ElementIndex>(out);
}

std::vector<ElementIndex> PowerGroup::decode(ElementIndex x) const {
  std::vector<ElementIndex> coords(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) coords[static_cast<std::size_t>(i)] = coordinate(x, i + 1);
  return coords;
}

ElementIndex PowerGroup::coordinate(ElementIndex x, int slot) const {
  if (slot < 1 || slot > n_) throw std::invalid_argument("coordinate slot out of range");
  return static_cast<ElementIndex>((x / weight_[static_cast<std::size_t>(slot - 1)]) % base_size_);
}

std::optional<int> PowerGroup::abelianization_rank_hint() const {
  return n_ * derived_quotient_rank(*base_);
}

namespace {

void require_same_base(const PowerPtr& power, const GenSet& base) {
  if (base.group_ptr().get() != power->base_ptr().get())
    throw std::invalid_argument("generating set is over a different group than the power's base");
}

}  // namespace

GenSet canonical_genset(const PowerPtr& power, const GenSet& base, const Limits& limits) {
  (void)limits;
  require_same_base(power, base);
  const int n = power->copies();
  std::vector<ElementIndex> members;
  std::vector<std::string> labels;
  std::vector<ElementIndex> coords(static_cast<std::size_t>(n), FiniteGroup::identity);
  for (int slot = 1; slot <= n; ++slot) {
    for (std::size_t j = 0; j < base.size(); ++j) {
      coords[static_cast<std::size_t>(slot - 1)] = base.member(j);
      members.push_back(power->encode(coords));
      labels.push_back(base.label(j) + "@" + std::to_string(slot));
      coords[static_cast<std::size_t>(slot - 1)] = FiniteGroup::identity;
    }
  }
  GenSetOptions opts;
  if (!base.name().empty())
    opts.name = "C^" + std::to_string(n) + "(" + base.name() + ")";
  return GenSet(power, std::move(members), std::move(labels), std::move(opts));
}

GenSet canonical_genset(const GenSet& base, int n, const Limits& limits) {
  return canonical_genset(direct_power(base.group_ptr(), n, limits), base, limits);
}

GenSet coprime_genset(const PowerPtr& power, const GenSet& base, const Limits& limits) {
  (void)limits;
  require_same_base(power, base);
  const int n = power->copies();
  const auto k = static_cast<int>(base.size());
  if (k < 1) throw std::invalid_argument("staircase needs at least one base member");
  if (n < k) throw std::invalid_argument("staircase needs at least as many coordinates as members");
  std::vector<std::uint64_t> orders;
  for (std::size_t j = 0; j < base.size(); ++j)
    orders.push_back(base.group().order_of(base.member(j)));
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (std::gcd(orders[i], orders[j]) != 1)
        throw std::invalid_argument("member orders " + std::to_string(orders[i]) + " and " +
                                    std::to_string(orders[j]) + " are not coprime");

  std::vector<ElementIndex> members;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    std::vector<ElementIndex> coords(static_cast<std::size_t>(n), FiniteGroup::identity);
    for (int j = 1; j <= k; ++j) {
      auto slot = static_cast<std::size_t>((i - 1 + j - 1) % n);
      coords[slot] = base.group().mul(coords[slot], base.member(static_cast<std::size_t>(j - 1)));
    }
    members.push_back(power->encode(coords));
    labels.push_back("g" + std::to_string(i));
  }
  GenSetOptions opts;
  opts.name = "C";
  if (!base.name().empty() && base.name().back() == '\'') opts.name += "'";
  return GenSet(power, std::move(members), std::move(labels), std::move(opts));
}

GenSet coprime_genset(const GenSet& base, int n, const Limits& limits) {
  return coprime_genset(direct_power(base.group_ptr(), n, limits), base, limits);
}

ElementIndex projection(const PowerGroup& p, ElementIndex x, int slot) {
  return p.coordinate(x, slot);
}

std::vector<ElementIndex> genset_projection(const PowerGroup& p, const GenSet& a, int slot) {
  if (a.group_ptr().get() != &p)
    throw std::invalid_argument("generating set belongs to a different group");
  std::vector<ElementIndex> out;
  for (ElementIndex m : a.members()) out.push_back(p.coordinate(m, slot));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t recovery_exponent(std::span<const std::uint64_t> orders, std::size_t which) {
  if (which < 1 || which > orders.size()) throw std::invalid_argument("index out of range");
  for (auto o : orders)
    if (o < 1) throw std::invalid_argument("orders must be positive");
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (std::gcd(orders[i], orders[j]) != 1)
        throw std::invalid_argument("orders are not pairwise coprime");

  const std::uint64_t target = orders[which - 1];
  std::uint64_t rest = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i == which - 1) continue;
    if (orders[i] != 0 && rest > std::numeric_limits<std::uint64_t>::max() / orders[i])
      throw OverflowError("product of orders overflows");
    rest *= orders[i];
  }
  if (target == 1) return rest;

  // modular inverse of rest modulo target, by extended gcd
  std::int64_t r0 = static_cast<std::int64_t>(target), r1 = static_cast<std::int64_t>(rest % target);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, r0 - qt * r1);
    std::tie(s0, s1) = std::make_tuple(s1, s0 - qt * s1);
  }
  std::int64_t inv = s0 % static_cast<std::int64_t>(target);
  if (inv < 0) inv += static_cast<std::int64_t>(target);
  return rest * static_cast<std::uint64_t>(inv);
}

PowerRankResult power_rank(const FiniteGroup& g, int n, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("power exponent must be at least 1");
  const auto alpha = static_cast<std::uint64_t>(rank(g, limits).value);
  const auto beta = static_cast<std::uint64_t>(derived_quotient_rank(g));

  if (alpha == beta)
    return {static_cast<std::uint64_t>(n) * alpha, RankMethod::formula,
            "n * rank(G): rank of G equals the rank of its abelianization"};
  if (!is_perfect(g) && beta >= 2) {
    const std::uint64_t threshold = (alpha - 2) / (beta - 1) + 1;  // ceil((alpha-1)/(beta-1))
    if (static_cast<std::uint64_t>(n) >= threshold)
      return {static_cast<std::uint64_t>(n) * beta, RankMethod::formula,
              "n * rank of the abelianization (imperfect group, n >= " +
                  std::to_string(threshold) + ")"};
  }
  if (is_solvable(g) && g.size() > 1) {
    const std::uint64_t threshold = (alpha + beta - 1) / beta;  // ceil(alpha/beta)
    if (static_cast<std::uint64_t>(n) >= threshold)
      return {static_cast<std::uint64_t>(n) * beta, RankMethod::formula,
              "n * rank of the abelianization (solvable group, n >= " +
                  std::to_string(threshold) + ")"};
  }
  auto pw = direct_power(g.shared_from_this(), n, limits);
  auto rr = rank(*pw, limits);
  return {static_cast<std::uint64_t>(rr.value), RankMethod::brute_force,
          "exhaustive subset search over the power"};
}

std::optional<std::uint64_t> coprime_power_rank(const GenSet& base, int n) {
  const auto k = base.size();
  if (k < 1 || static_cast<std::size_t>(n) < k) return std::nullopt;
  std::vector<std::uint64_t> orders;
  for (std::size_t j = 0; j < k; ++j) orders.push_back(base.group().order_of(base.member(j)));
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (std::gcd(orders[i], orders[j]) != 1) return std::nullopt;
  if (is_perfect(base.group())) return std::nullopt;
  return static_cast<std::uint64_t>(n);
}

}  // namespace powerdiam
