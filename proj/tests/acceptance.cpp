// End-to-end checks with generous but enforced time budgets. Each criterion
// prints one [PASS]/[FAIL] line; the exit code is the number of failures.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "powerdiam/bounds.hpp"
#include "powerdiam/cli.hpp"
#include "powerdiam/conjecture.hpp"
#include "powerdiam/diameter.hpp"
#include "powerdiam/families.hpp"
#include "powerdiam/power.hpp"

using namespace powerdiam;

namespace {

int failures = 0;
int index_ = 0;

template <typename Fn>
void criterion(const std::string& label, double budget_s, Fn&& body) {
  ++index_;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool within = secs <= budget_s;
  const bool pass = ok && within;
  if (!pass) ++failures;
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << index_ << ". " << label << " ("
            << std::fixed << std::setprecision(2) << secs << "s";
  if (!within) std::cout << ", budget " << budget_s << "s exceeded";
  std::cout << ")\n";
  if (!note.empty()) std::cout << "       " << note << "\n";
}

}  // namespace

int main() {
  criterion("two-generator symmetric group diameters", 5.0, [](std::string& note) {
    const auto d4 = diam(sn_generators(4));
    const auto d5 = diam(sn_generators(5));
    const auto d6 = diam(sn_generators(6));
    std::ostringstream ss;
    ss << "diam(S4, A') = " << d4 << ", diam(S5, A) = " << d5 << ", diam(S6, A') = " << d6;
    note = ss.str();
    return d4 == 7 && d5 == 11 && d6 == 17;
  });

  criterion("abelian worst case equals the invariant-factor sum", 60.0, [](std::string& note) {
    const char* specs[] = {"Z2",    "Z3", "Z4", "Z2xZ2", "Z5",
                           "Z6",    "Z7", "Z8", "Z4xZ2", "Z2xZ2xZ2"};
    for (const char* spec : specs) {
      auto gs = resolve_spec(spec);
      const auto worst = max_diameter_exhaustive(gs.group());
      const auto formula = abelian_diameter(abelian_invariants(gs.group()));
      if (worst.value != formula) {
        note = std::string(spec) + ": exhaustive " + std::to_string(worst.value) +
               " vs formula " + std::to_string(formula);
        return false;
      }
    }
    note = "10 groups, exhaustive search matches the formula on each";
    return true;
  });

  criterion("every generating subset stays within order minus size", 60.0,
            [](std::string& note) {
              std::uint64_t generating = 0;
              for (const char* spec : {"S3", "Z6"}) {
                auto gs = resolve_spec(spec);
                const auto& g = gs.group();
                const auto n = g.size();
                for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
                  std::vector<ElementIndex> members;
                  for (std::size_t i = 1; i < n; ++i)
                    if (mask & (1u << (i - 1))) members.push_back(static_cast<ElementIndex>(i));
                  if (!generates(g, members)) continue;
                  ++generating;
                  std::vector<std::string> labels;
                  for (auto m : members) labels.push_back(g.element_name(m));
                  const auto d = diam(GenSet(gs.group_ptr(), members, labels));
                  const auto cap = static_cast<std::int64_t>(n - members.size());
                  if (d > cap) {
                    note = std::string(spec) + ": a " + std::to_string(members.size()) +
                           "-element set reaches " + std::to_string(d) + " > " +
                           std::to_string(cap);
                    return false;
                  }
                }
              }
              note = std::to_string(generating) + " generating subsets all within the bound";
              return true;
            });

  criterion("power ranks by exhaustive subset search", 600.0, [](std::string& note) {
    struct Probe {
      const char* spec;
      int n;
      std::uint64_t expect;
    };
    std::ostringstream ss;
    for (auto [spec, n, expect] : {Probe{"S3", 2, 2}, Probe{"S4", 2, 2}, Probe{"D5", 2, 2},
                                   Probe{"D4", 2, 4}}) {
      auto base = resolve_spec(spec);
      auto power = direct_power(base.group_ptr(), n);
      const auto brute = rank(*power);
      const auto formula = power_rank(base.group(), n);
      if (ss.tellp() > 0) ss << ", ";
      ss << "rank(" << spec << "^" << n << ") = " << brute.value;
      if (brute.value != expect || formula.value != expect) {
        note = ss.str() + " (expected " + std::to_string(expect) + ")";
        return false;
      }
    }
    note = ss.str();
    return true;
  });

  criterion("dihedral power rewriter stays within its length target", 60.0,
            [](std::string& note) {
              struct Probe {
                int n, k;
              };
              std::uint64_t elements = 0;
              for (auto [n, k] : {Probe{3, 2}, Probe{3, 3}, Probe{5, 2}}) {
                DihedralPowerExpress ctx(n, k);
                auto lt = length_table(ctx.genset());
                if (lt.diameter() > ctx.length_target()) return false;
                for (ElementIndex x = 0; x < ctx.group().size(); ++x) {
                  const Word w = ctx.express(x);  // validates itself on the way out
                  if (static_cast<std::int64_t>(w.length()) > ctx.length_target()) return false;
                  if (lt.length(x) > static_cast<std::int64_t>(w.length())) return false;
                  ++elements;
                }
              }
              note = std::to_string(elements) + " elements rewritten and cross-checked";
              return true;
            });

  criterion("staircase word lengths on the squared symmetric group of degree 4", 10.0,
            [](std::string& note) {
              auto stair = coprime_genset(sn_generators(4), 2);
              const auto worst = diam(stair);
              note = "max length " + std::to_string(worst) + " over " + stair.display();
              return worst <= 38 && worst <= 44;
            });

  criterion("squared symmetric group of degree 5 meets the product bounds", 60.0,
            [](std::string& note) {
              auto base = sn_generators(5);
              auto canon = canonical_genset(base, 2);
              const auto dc = diam(canon);
              auto lt = length_table(coprime_genset(base, 2));
              std::int64_t ml = 0;
              for (std::size_t i = 0; i < canon.size(); ++i)
                ml = std::max(ml, lt.length(canon.member(i)));
              note = "diam over the replicated set " + std::to_string(dc) +
                     " (cap 132), staircase cost of its members " + std::to_string(ml) +
                     " (cap 6)";
              return dc <= 132 && ml <= 6;
            });

  criterion("replicated generating sets obey the n-fold diameter bound", 120.0,
            [](std::string& note) {
              struct Probe {
                const char* spec;
                int n;
              };
              std::ostringstream ss;
              for (auto [spec, n] : {Probe{"S3", 2}, Probe{"S4", 2}, Probe{"D5", 2},
                                     Probe{"Z6", 3}}) {
                auto base = resolve_spec(spec);
                const auto db = diam(base);
                const auto dp = diam(canonical_genset(base, n));
                if (ss.tellp() > 0) ss << ", ";
                ss << spec << "^" << n << ": " << dp << " <= " << n * db;
                if (dp > n * db) {
                  note = ss.str();
                  return false;
                }
              }
              note = ss.str();
              return true;
            });

  criterion("staircase rewrite relations hold by direct multiplication", 60.0,
            [](std::string& note) {
              struct Probe {
                int n, k;
              };
              std::uint64_t checked = 0, violations = 0;
              for (auto [n, k] : {Probe{3, 2}, Probe{3, 3}, Probe{5, 3}}) {
                DihedralPowerExpress ctx(n, k);
                for (const auto& rc :
                     {check_pair_swap(ctx), check_adjacent_swap(ctx), check_distant_commute(ctx),
                      check_run_collapse(ctx), check_full_circle(ctx),
                      check_top_power_swap(ctx)}) {
                  checked += rc.checked;
                  violations += rc.violations;
                }
              }
              note = std::to_string(checked) + " instances checked, " +
                     std::to_string(violations) + " violations";
              return checked > 0 && violations == 0;
            });

  criterion("rank equals abelianized rank and the canonical witness attests the weak bound",
            60.0, [](std::string& note) {
              std::ostringstream ss;
              for (const char* spec : {"D4", "Z2xZ4"}) {
                auto gs = resolve_spec(spec);
                const auto r = rank(gs.group());
                const auto beta = derived_quotient_rank(gs.group());
                auto rep = check_weak(gs, 2, WeakStrategy::canonical, spec);
                if (ss.tellp() > 0) ss << ", ";
                ss << spec << ": rank " << r.value << ", abelianized rank " << beta << ", "
                   << to_string(rep.verdict);
                if (r.value != static_cast<std::uint64_t>(beta) ||
                    rep.verdict != Verdict::verified_witness) {
                  note = ss.str();
                  return false;
                }
              }
              note = ss.str();
              return true;
            });

  criterion("repeated runs are byte identical", 60.0, [](std::string& note) {
    const std::vector<std::vector<std::string>> invocations = {
        {"check-weak", "S3", "2"},
        {"diam", "S4"},
        {"check-strong", "S3", "2", "--mode", "sampled", "--seed", "7"}};
    for (const auto& args : invocations) {
      std::ostringstream out1, out2, err1, err2;
      const int rc1 = run_cli(args, out1, err1);
      const int rc2 = run_cli(args, out2, err2);
      if (rc1 != 0 || rc2 != 0 || out1.str() != out2.str() || out1.str().empty()) {
        note = "divergence under: " + args[0];
        return false;
      }
    }
    note = "3 invocations, each repeated, identical output";
    return true;
  });

  if (failures)
    std::cout << failures << " criterion(s) failed\n";
  else
    std::cout << "all criteria passed\n";
  return failures;
}
