#include "powerdiam/bounds.hpp"

#include <nlohmann/json.hpp>

namespace powerdiam {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::int64_t general_upper_bound(std::int64_t order, std::int64_t rank) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  if (rank < 0 || rank > order) throw std::invalid_argument("rank must lie in [0, order]");
  return order - rank;
}

std::int64_t abelian_diameter(const AbelianType& type) {
  std::int64_t sum = 0;
  for (auto m : type.invariants())
    sum = checked_add(sum, static_cast<std::int64_t>(m) - 1);
  return sum;
}

std::int64_t strong_conjecture_bound(std::int64_t order, std::int64_t rank, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("power exponent must be at least 1");
  return checked_mul(n, general_upper_bound(order, rank));
}

std::int64_t product_bound(std::int64_t max_genset_length,
                           std::span<const std::int64_t> coordinate_diameters) {
  if (max_genset_length < 0) throw std::invalid_argument("generator length bound must be >= 0");
  if (coordinate_diameters.empty())
    throw std::invalid_argument("at least one coordinate diameter required");
  std::int64_t sum = 0;
  for (auto d : coordinate_diameters) {
    if (d < 0) throw std::invalid_argument("coordinate diameters must be >= 0");
    sum = checked_add(sum, d);
  }
  return checked_mul(max_genset_length, sum);
}

std::int64_t sn_diameter_bound(std::int64_t n, SnGensetKind kind) {
  if (n < 3) throw std::invalid_argument("symmetric group bounds need degree at least 3");
  std::int64_t per = kind == SnGensetKind::full_cycle ? checked_add(n, 1)
                                                      : checked_add(checked_mul(2, n), 1);
  return checked_mul(checked_mul(n - 1, checked_add(checked_mul(2, n), -3)), per);
}

std::int64_t canonical_bound(std::int64_t base_diameter, std::int64_t n) {
  if (base_diameter < 0) throw std::invalid_argument("diameter must be >= 0");
  if (n < 1) throw std::invalid_argument("power exponent must be at least 1");
  return checked_mul(n, base_diameter);
}

std::int64_t wiegold_threshold(std::int64_t alpha, std::int64_t beta, WiegoldCase kind) {
  if (beta < 1 || alpha < beta)
    throw std::invalid_argument("need rank >= abelianization rank >= 1");
  if (kind == WiegoldCase::imperfect) {
    if (beta < 2)
      throw std::invalid_argument("the imperfect threshold needs abelianization rank >= 2");
    return (alpha - 2) / (beta - 1) + 1;  // ceil((alpha-1)/(beta-1)), alpha >= beta >= 2
  }
  return (alpha + beta - 1) / beta;  // ceil(alpha/beta)
}

namespace {

nlohmann::json report_json(const BoundReport& r) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  return nlohmann::json{
      {"name", r.name}, {"inputs", inputs}, {"value", r.value}, {"citation", r.citation}};
}

}  // namespace

std::string to_json(const BoundReport& r) { return report_json(r).dump(); }

std::string to_json(std::span<const BoundReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump();
}

BoundReport report_general_upper_bound(std::int64_t order, std::int64_t rank) {
  return {"general-upper-bound",
          {{"order", order}, {"rank", rank}},
          general_upper_bound(order, rank),
          "diam(G,A) <= |G| - rank(G) for every generating set A"};
}

BoundReport report_abelian_diameter(const AbelianType& type) {
  BoundReport r{"abelian-diameter", {}, abelian_diameter(type),
                "largest diameter of an abelian group = sum of (m_i - 1) over invariant factors"};
  const auto& inv = type.invariants();
  for (std::size_t i = 0; i < inv.size(); ++i)
    r.inputs.emplace_back("m" + std::to_string(i + 1), static_cast<std::int64_t>(inv[i]));
  return r;
}

BoundReport report_strong_conjecture_bound(std::int64_t order, std::int64_t rank,
                                           std::int64_t n) {
  return {"strong-conjecture-bound",
          {{"n", n}, {"order", order}, {"rank", rank}},
          strong_conjecture_bound(order, rank, n),
          "conjectured: diam of G^n over any generating set <= n * (|G| - rank(G))"};
}

BoundReport report_product_bound(std::int64_t max_genset_length,
                                 std::span<const std::int64_t> coordinate_diameters) {
  BoundReport r{"product-bound", {{"max_genset_length", max_genset_length}},
                product_bound(max_genset_length, coordinate_diameters),
                "diam(G^n,A) <= max word length of the one-slot generators * sum of "
                "coordinate diameters"};
  for (std::size_t i = 0; i < coordinate_diameters.size(); ++i)
    r.inputs.emplace_back("diam" + std::to_string(i + 1), coordinate_diameters[i]);
  return r;
}

BoundReport report_sn_diameter_bound(std::int64_t n, SnGensetKind kind) {
  return {"sn-diameter-bound",
          {{"degree", n},
           {"per_transposition", kind == SnGensetKind::full_cycle ? n + 1 : 2 * n + 1}},
          sn_diameter_bound(n, kind),
          "diam(S_n) <= (n-1)(2n-3) adjacent transpositions, each a word of bounded length"};
}

BoundReport report_canonical_bound(std::int64_t base_diameter, std::int64_t n) {
  return {"canonical-bound",
          {{"diam", base_diameter}, {"n", n}},
          canonical_bound(base_diameter, n),
          "diam(G^n, C^n(A)) <= n * diam(G, A)"};
}

BoundReport report_wiegold_threshold(std::int64_t alpha, std::int64_t beta, WiegoldCase kind) {
  return {"wiegold-threshold",
          {{"alpha", alpha}, {"beta", beta}},
          wiegold_threshold(alpha, beta, kind),
          kind == WiegoldCase::imperfect
              ? "rank(G^n) = n * rank(G/G') for imperfect G once n >= ceil((alpha-1)/(beta-1))"
              : "rank(G^n) = n * rank(G/G') for solvable G once n >= ceil(alpha/beta)"};
}

}  // namespace powerdiam
