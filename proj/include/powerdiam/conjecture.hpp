#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "powerdiam/group.hpp"

namespace powerdiam {

enum class Verdict {
  verified_exhaustive,      // bound checked against the exact worst case
  verified_witness,         // a specific minimum-size set stays within the bound
  no_counterexample_found,  // sampling saw nothing above the bound
  counterexample,           // the bound provably fails
  inconclusive,             // the chosen strategy could not settle it
};
std::string to_string(Verdict v);

struct Measured {
  std::int64_t value = 0;
  bool exact = true;  // false when the value is only a sampled lower bound
};

struct ConjectureReport {
  std::string conjecture;  // "weak" or "strong"
  std::string group;       // display name of the base group
  int n = 1;
  std::int64_t bound = 0;
  Verdict verdict = Verdict::inconclusive;
  std::optional<Measured> measured;
  std::optional<std::string> witness;  // generating set backing the verdict
  std::string evidence;                // serialized JSON object with details
  std::optional<std::uint64_t> seed;
  std::string version;
};

std::string to_json(const ConjectureReport& r);
std::string to_text(const ConjectureReport& r);

enum class WeakStrategy { automatic, canonical, coprime, search };

// Does SOME generating set of G^n of exactly rank(G^n) members have diameter
// at most n(|G| - rank(G))? The fixed strategies test one candidate and
// report inconclusive when it does not apply or does not attest the bound;
// `search` walks every minimum-size subset, so it alone can conclude
// counterexample. `automatic` tries canonical, then coprime, then search.
ConjectureReport check_weak(const GenSet& base, int n, WeakStrategy strategy,
                            const std::string& group_name, const Limits& limits = {});

enum class StrongMode { automatic, abelian_formula, exhaustive, sampled };

// Does EVERY generating set of G^n stay within n(|G| - rank(G))? Abelian
// groups use the exact worst-case formula, small powers enumerate all
// generating sets, anything else samples. Sampling cannot verify, but a
// counterexample it finds is sound: each sampled diameter is an exact BFS.
ConjectureReport check_strong(const GenSet& base, int n, StrongMode mode,
                              const std::string& group_name, std::uint64_t samples = 200,
                              std::uint64_t seed = 1, const Limits& limits = {});

}  // namespace powerdiam
