#include "powerdiam/diameter.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <string>

namespace powerdiam {

LengthTable::LengthTable(GenSet genset, std::vector<std::int32_t> lengths,
                         std::vector<ElementIndex> pred, std::vector<std::int32_t> letter)
    : genset_(std::move(genset)),
      lengths_(std::move(lengths)),
      pred_(std::move(pred)),
      letter_(std::move(letter)) {
  for (auto l : lengths_) diameter_ = std::max<std::int64_t>(diameter_, l);
}

LengthTable length_table(const GenSet& a, const Limits& limits) {
  (void)limits;
  const FiniteGroup& g = a.group();
  const std::size_t n = g.size();
  std::vector<std::int32_t> lengths(n, -1);
  std::vector<ElementIndex> pred(n, FiniteGroup::identity);
  std::vector<std::int32_t> letter(n, -1);

  lengths[FiniteGroup::identity] = 0;
  std::vector<ElementIndex> frontier{FiniteGroup::identity};
  std::vector<ElementIndex> next;
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    // ascending order makes the recorded predecessor the least one per level
    std::sort(frontier.begin(), frontier.end());
    next.clear();
    ++depth;
    for (ElementIndex x : frontier) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        ElementIndex y = g.mul(x, a.member(j));
        if (lengths[y] < 0) {
          lengths[y] = depth;
          pred[y] = x;
          letter[y] = static_cast<std::int32_t>(j);
          next.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }
  for (auto l : lengths)
    if (l < 0) throw std::logic_error("length table over a non-generating set");
  return LengthTable(a, std::move(lengths), std::move(pred), std::move(letter));
}

std::int64_t diam(const GenSet& a, const Limits& limits) {
  return length_table(a, limits).diameter();
}

std::int64_t max_length_over(const LengthTable& t, std::span<const ElementIndex> subset) {
  if (subset.empty())
    throw std::invalid_argument("maximum word length over an empty subset is undefined");
  std::int64_t best = 0;
  for (ElementIndex x : subset) {
    if (x >= t.size()) throw std::invalid_argument("element index out of range");
    best = std::max(best, t.length(x));
  }
  return best;
}

Word express(const LengthTable& t, ElementIndex g) {
  if (g >= t.size()) throw std::invalid_argument("element index out of range");
  Word w;
  for (ElementIndex x = g; x != FiniteGroup::identity; x = t.predecessor(x))
    w.letters.push_back(t.letter(x));
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

ElementIndex evaluate(const GenSet& a, const Word& w) {
  ElementIndex x = FiniteGroup::identity;
  for (auto l : w.letters) {
    if (l < 0 || static_cast<std::size_t>(l) >= a.size())
      throw std::invalid_argument("word letter out of range");
    x = a.group().mul(x, a.member(static_cast<std::size_t>(l)));
  }
  return x;
}

std::string word_to_string(const GenSet& a, const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t run = 1;
    while (i + run < w.letters.size() && w.letters[i + run] == w.letters[i]) ++run;
    auto l = w.letters[i];
    if (l < 0 || static_cast<std::size_t>(l) >= a.size())
      throw std::invalid_argument("word letter out of range");
    if (!out.empty()) out += "-";
    out += a.label(static_cast<std::size_t>(l));
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

namespace {

// BFS depth over raw members; nullopt when they do not generate
std::optional<std::int64_t> bfs_depth(const FiniteGroup& g, std::span<const ElementIndex> members,
                                      std::vector<std::int32_t>& lengths,
                                      std::vector<ElementIndex>& queue) {
  const std::size_t n = g.size();
  lengths.assign(n, -1);
  queue.clear();
  queue.push_back(FiniteGroup::identity);
  lengths[FiniteGroup::identity] = 0;
  std::size_t found = 1;
  std::int32_t deepest = 0;
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    ElementIndex x = queue[pos];
    for (ElementIndex m : members) {
      ElementIndex y = g.mul(x, m);
      if (lengths[y] < 0) {
        lengths[y] = lengths[x] + 1;
        deepest = std::max(deepest, lengths[y]);
        queue.push_back(y);
        ++found;
      }
    }
  }
  if (found != n) return std::nullopt;
  return deepest;
}

}  // namespace

MaxDiameter max_diameter_exhaustive(const FiniteGroup& g, const Limits& limits) {
  const std::size_t n = g.size();
  MaxDiameter res;
  res.verdict = DiamVerdict::exact;
  if (n == 1) {
    res.gensets_tested = 1;
    return res;
  }
  if (n - 1 > 63 || ((1ULL << (n - 1)) - 1) > limits.max_subsets)
    throw ResourceError("candidate subset", limits.max_subsets, "--max-subsets");

  const std::uint64_t total = (1ULL << (n - 1)) - 1;
  std::vector<std::int32_t> lengths;
  std::vector<ElementIndex> queue;
  std::vector<ElementIndex> members;
  res.value = -1;
  for (std::uint64_t mask = 1; mask <= total; ++mask) {
    members.clear();
    for (std::size_t b = 0; b < n - 1; ++b)
      if (mask & (1ULL << b)) members.push_back(static_cast<ElementIndex>(b + 1));
    auto d = bfs_depth(g, members, lengths, queue);
    if (!d) continue;
    ++res.gensets_tested;
    if (*d > res.value) {
      res.value = *d;
      res.witness = members;
    }
  }
  return res;
}

MaxDiameter max_diameter_sampled(const FiniteGroup& g, std::uint64_t count, std::uint64_t seed,
                                 const Limits& limits) {
  (void)limits;
  const std::size_t n = g.size();
  MaxDiameter res;
  res.verdict = DiamVerdict::lower_bound;
  res.seed = seed;
  if (n == 1) return res;

  std::mt19937_64 rng(seed);
  std::vector<std::int32_t> lengths;
  std::vector<ElementIndex> queue;
  std::vector<ElementIndex> members;
  res.value = -1;
  const std::uint64_t attempt_cap = count * 200 + 1000;
  std::uint64_t attempts = 0;
  while (res.gensets_tested < count && attempts < attempt_cap) {
    ++attempts;
    members.clear();
    for (std::size_t i = 1; i < n; ++i)
      if (rng() & 1) members.push_back(static_cast<ElementIndex>(i));
    if (members.empty()) continue;
    auto d = bfs_depth(g, members, lengths, queue);
    if (!d) continue;
    ++res.gensets_tested;
    if (*d > res.value) {
      res.value = *d;
      res.witness = members;
    }
  }
  if (res.gensets_tested == 0) {
    // fall back to the full identity-free set, which always generates
    members.clear();
    for (std::size_t i = 1; i < n; ++i) members.push_back(static_cast<ElementIndex>(i));
    auto d = bfs_depth(g, members, lengths, queue);
    res.value = *d;
    res.witness = members;
    res.gensets_tested = 1;
  }
  return res;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

void write_length_csv(std::ostream& out, const LengthTable& t) {
  out << "element,length,word\n";
  const auto& a = t.genset();
  for (ElementIndex i = 0; i < t.size(); ++i) {
    Word w = express(t, i);
    out << csv_quote(a.group().element_name(i)) << "," << t.length(i) << ","
        << csv_quote(word_to_string(a, w)) << "\n";
  }
}

}  // namespace powerdiam
