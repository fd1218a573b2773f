#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "powerdiam/group.hpp"

namespace powerdiam {

// Word over a generating set: letters index the set's members. Generators
// only, no inverses; the empty word is the identity.
struct Word {
  std::vector<std::int32_t> letters;
  std::size_t length() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

// Shortest positive word length for every element, with enough breadcrumbs to
// reconstruct one shortest word. Ties resolve to the lexicographically least
// (predecessor, generator) pair, so tables are reproducible byte for byte.
class LengthTable {
 public:
  LengthTable(GenSet genset, std::vector<std::int32_t> lengths, std::vector<ElementIndex> pred,
              std::vector<std::int32_t> letter);

  const GenSet& genset() const { return genset_; }
  std::size_t size() const { return lengths_.size(); }
  std::int64_t length(ElementIndex g) const { return lengths_[g]; }
  std::int64_t diameter() const { return diameter_; }
  ElementIndex predecessor(ElementIndex g) const { return pred_[g]; }
  std::int32_t letter(ElementIndex g) const { return letter_[g]; }

 private:
  GenSet genset_;
  std::vector<std::int32_t> lengths_;
  std::vector<ElementIndex> pred_;
  std::vector<std::int32_t> letter_;
  std::int64_t diameter_ = 0;
};

LengthTable length_table(const GenSet& a, const Limits& limits = {});
std::int64_t diam(const GenSet& a, const Limits& limits = {});

// max of length() over a nonempty element subset
std::int64_t max_length_over(const LengthTable& t, std::span<const ElementIndex> subset);

Word express(const LengthTable& t, ElementIndex g);
ElementIndex evaluate(const GenSet& a, const Word& w);
// run-length compressed display, e.g. "g1^5-g2^3"; empty word gives ""
std::string word_to_string(const GenSet& a, const Word& w);

enum class DiamVerdict { exact, lower_bound };

struct MaxDiameter {
  std::int64_t value = 0;
  DiamVerdict verdict = DiamVerdict::exact;
  std::uint64_t gensets_tested = 0;
  std::vector<ElementIndex> witness;  // first generating set attaining value
  std::optional<std::uint64_t> seed;
};

// Largest diameter over every generating set of the group. Exhaustive mode
// walks all identity-free subsets (the same diameter is available without the
// identity, so skipping it loses nothing). Sampled mode draws random
// identity-free subsets and keeps generating ones; its result is only a
// lower bound but each measurement is an exact BFS.
MaxDiameter max_diameter_exhaustive(const FiniteGroup& g, const Limits& limits = {});
MaxDiameter max_diameter_sampled(const FiniteGroup& g, std::uint64_t count, std::uint64_t seed,
                                 const Limits& limits = {});

// CSV dump: element,length,word with one row per element in index order
void write_length_csv(std::ostream& out, const LengthTable& t);

}  // namespace powerdiam
