#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powerdiam/group.hpp"

namespace powerdiam {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// which two-generator family a symmetric group uses: the full rotation
// {a, b} or the point-fixing short rotation {a', b}
enum class SnGensetKind { full_cycle, short_cycle };

// diameter of a group never exceeds its order minus the size of any
// generating set; with the rank this bounds every generating set at once
std::int64_t general_upper_bound(std::int64_t order, std::int64_t rank);

// exact largest diameter of an abelian group: sum of (m_i - 1) over the
// invariant factors
std::int64_t abelian_diameter(const AbelianType& type);

// n * (|G| - rank(G)), the conjectured ceiling for diameters of G^n
std::int64_t strong_conjecture_bound(std::int64_t order, std::int64_t rank, std::int64_t n);

// diam(G^n, A) <= Ml_A(C) * sum of coordinate diameters, for any generating
// set C of the power whose projections land in the coordinate sets measured
std::int64_t product_bound(std::int64_t max_genset_length,
                           std::span<const std::int64_t> coordinate_diameters);

// word length ceiling for S_n over the two-generator families (n >= 3):
// (n-1)(2n-3)(n+1) with the full rotation, (n-1)(2n-3)(2n+1) with the short
std::int64_t sn_diameter_bound(std::int64_t n, SnGensetKind kind);

// diam(G^n, C^n(A)) <= n * diam(G, A)
std::int64_t canonical_bound(std::int64_t base_diameter, std::int64_t n);

// smallest n from which rank(G^n) = n * rank(G/G') is guaranteed:
// ceil((alpha-1)/(beta-1)) for imperfect groups with beta >= 2,
// ceil(alpha/beta) for solvable groups
enum class WiegoldCase { imperfect, solvable };
std::int64_t wiegold_threshold(std::int64_t alpha, std::int64_t beta, WiegoldCase kind);

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  std::int64_t value = 0;
  std::string citation;
};

std::string to_json(const BoundReport& r);
std::string to_json(std::span<const BoundReport> reports);

BoundReport report_general_upper_bound(std::int64_t order, std::int64_t rank);
BoundReport report_abelian_diameter(const AbelianType& type);
BoundReport report_strong_conjecture_bound(std::int64_t order, std::int64_t rank, std::int64_t n);
BoundReport report_product_bound(std::int64_t max_genset_length,
                                 std::span<const std::int64_t> coordinate_diameters);
BoundReport report_sn_diameter_bound(std::int64_t n, SnGensetKind kind);
BoundReport report_canonical_bound(std::int64_t base_diameter, std::int64_t n);
BoundReport report_wiegold_threshold(std::int64_t alpha, std::int64_t beta, WiegoldCase kind);

}  // namespace powerdiam
