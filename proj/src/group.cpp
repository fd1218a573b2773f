#include "powerdiam/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace powerdiam {

namespace {

// Reusable scratch for generation tests; epoch stamps avoid clearing the
// visited array for every candidate subset.
struct GenScratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  std::vector<ElementIndex> queue;
};

bool generates_with(const FiniteGroup& g, std::span<const ElementIndex> members, GenScratch& s) {
  const std::size_t n = g.size();
  if (s.stamp.size() != n) {
    s.stamp.assign(n, 0);
    s.epoch = 0;
  }
  if (++s.epoch == 0) {
    std::fill(s.stamp.begin(), s.stamp.end(), 0);
    s.epoch = 1;
  }
  s.queue.clear();
  s.queue.push_back(FiniteGroup::identity);
  s.stamp[FiniteGroup::identity] = s.epoch;
  std::size_t found = 1;
  for (std::size_t pos = 0; pos < s.queue.size(); ++pos) {
    ElementIndex x = s.queue[pos];
    for (ElementIndex m : members) {
      ElementIndex y = g.mul(x, m);
      if (s.stamp[y] != s.epoch) {
        s.stamp[y] = s.epoch;
        s.queue.push_back(y);
        if (++found == n) return true;
      }
    }
  }
  return found == n;
}

// next combination of values drawn from [lo, hi], ascending entries
bool next_combination(std::vector<ElementIndex>& c, ElementIndex lo, ElementIndex hi) {
  const std::size_t r = c.size();
  for (std::size_t i = r; i-- > 0;) {
    if (c[i] < hi - (r - 1 - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  (void)lo;
  return false;
}

}  // namespace

std::uint64_t FiniteGroup::order_of(ElementIndex a) const {
  std::uint64_t k = 1;
  ElementIndex x = a;
  while (x != identity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

ElementIndex FiniteGroup::power(ElementIndex a, std::int64_t e) const {
  std::uint64_t u;
  if (e < 0) {
    a = inverse(a);
    u = static_cast<std::uint64_t>(-(e + 1)) + 1;
  } else {
    u = static_cast<std::uint64_t>(e);
  }
  ElementIndex r = identity;
  ElementIndex base = a;
  while (u != 0) {
    if (u & 1) r = mul(r, base);
    u >>= 1;
    if (u != 0) base = mul(base, base);
  }
  return r;
}

ElementIndex FiniteGroup::conjugate(ElementIndex a, ElementIndex by) const {
  return mul(mul(inverse(by), a), by);
}

ElementIndex FiniteGroup::commutator(ElementIndex a, ElementIndex b) const {
  return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

std::shared_ptr<const PermGroup> PermGroup::closure(const std::vector<Permutation>& seeds,
                                                    const Limits& limits) {
  if (seeds.empty()) throw std::invalid_argument("closure needs at least one seed permutation");
  const int degree = seeds.front().degree();
  for (const auto& s : seeds)
    if (s.degree() != degree) throw std::invalid_argument("seed permutations differ in degree");

  auto g = std::shared_ptr<PermGroup>(new PermGroup());
  g->degree_ = degree;
  g->elements_.push_back(Permutation(degree));
  g->index_.emplace(g->elements_.front(), 0);

  std::vector<Permutation> distinct;
  for (const auto& s : seeds)
    if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);

  for (std::size_t pos = 0; pos < g->elements_.size(); ++pos) {
    // indexed access: the vector grows during iteration
    for (const auto& s : distinct) {
      Permutation p = g->elements_[pos] * s;
      if (g->index_.contains(p)) continue;
      if (g->elements_.size() >= limits.max_states)
        throw ResourceError("state", limits.max_states, "--max-states");
      g->index_.emplace(p, static_cast<ElementIndex>(g->elements_.size()));
      g->elements_.push_back(std::move(p));
    }
  }

  for (const auto& s : distinct) g->seed_indices_.push_back(g->index_.at(s));

  const std::size_t n = g->elements_.size();
  g->inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    g->inverse_[i] = g->index_.at(g->elements_[i].inverse());
  if (n <= 2048) {
    g->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g->table_[a * n + b] = g->index_.at(g->elements_[a] * g->elements_[b]);
  }
  return g;
}

ElementIndex PermGroup::mul(ElementIndex a, ElementIndex b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElementIndex PermGroup::inverse(ElementIndex a) const { return inverse_[a]; }

std::string PermGroup::element_name(ElementIndex a) const { return format_cycles(elements_[a]); }

std::string PermGroup::describe() const {
  return "permutation group of degree " + std::to_string(degree_) + " and order " +
         std::to_string(elements_.size());
}

std::optional<ElementIndex> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GenSet::GenSet(GroupPtr group, std::vector<ElementIndex> members, std::vector<std::string> labels,
               GenSetOptions opts)
    : group_(std::move(group)), name_(std::move(opts.name)) {
  if (!group_) throw std::invalid_argument("generating set needs a group");
  if (members.size() != labels.size())
    throw std::invalid_argument("one label per generating set member required");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= group_->size()) throw std::invalid_argument("member index out of range");
    if (members[i] == FiniteGroup::identity && !opts.keep_identity) continue;
    members_.push_back(members[i]);
    labels_.push_back(std::move(labels[i]));
  }
  std::unordered_set<ElementIndex> seen;
  for (ElementIndex m : members_)
    if (!seen.insert(m).second) throw std::invalid_argument("duplicate generating set member");
  if (!generates(*group_, members_))
    throw std::invalid_argument("members do not generate the group");
}

std::string GenSet::display() const {
  std::string body = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) body += ",";
    body += labels_[i];
  }
  body += "}";
  if (name_.empty()) return body;
  return name_ + " = " + body;
}

std::vector<ElementIndex> subgroup_closure(const FiniteGroup& g,
                                           std::span<const ElementIndex> members) {
  std::vector<bool> visited(g.size(), false);
  std::vector<ElementIndex> queue{FiniteGroup::identity};
  visited[FiniteGroup::identity] = true;
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    for (ElementIndex m : members) {
      ElementIndex y = g.mul(queue[pos], m);
      if (!visited[y]) {
        visited[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool generates(const FiniteGroup& g, std::span<const ElementIndex> members) {
  GenScratch scratch;
  return generates_with(g, members, scratch);
}

SubgroupView::SubgroupView(GroupPtr parent, std::vector<ElementIndex> sorted_parent_indices)
    : parent_(std::move(parent)), to_parent_(std::move(sorted_parent_indices)) {
  if (!parent_) throw std::invalid_argument("subgroup view needs a parent group");
  if (to_parent_.empty() || to_parent_.front() != FiniteGroup::identity)
    throw std::invalid_argument("subgroup must contain the identity first");
  if (!std::is_sorted(to_parent_.begin(), to_parent_.end()) ||
      std::adjacent_find(to_parent_.begin(), to_parent_.end()) != to_parent_.end())
    throw std::invalid_argument("subgroup indices must be sorted and distinct");
  for (std::size_t i = 0; i < to_parent_.size(); ++i) {
    if (to_parent_[i] >= parent_->size()) throw std::invalid_argument("subgroup index out of range");
    from_parent_.emplace(to_parent_[i], static_cast<ElementIndex>(i));
  }
  // closure check, skipped for large subgroups where it would dominate
  if (to_parent_.size() <= 1024) {
    for (ElementIndex a : to_parent_)
      for (ElementIndex b : to_parent_)
        if (!from_parent_.contains(parent_->mul(a, b)))
          throw std::invalid_argument("subgroup indices are not closed under products");
  }
}

ElementIndex SubgroupView::mul(ElementIndex a, ElementIndex b) const {
  auto it = from_parent_.find(parent_->mul(to_parent_[a], to_parent_[b]));
  if (it == from_parent_.end()) throw std::logic_error("subgroup not closed under products");
  return it->second;
}

ElementIndex SubgroupView::inverse(ElementIndex a) const {
  auto it = from_parent_.find(parent_->inverse(to_parent_[a]));
  if (it == from_parent_.end()) throw std::logic_error("subgroup not closed under inverses");
  return it->second;
}

std::string SubgroupView::element_name(ElementIndex a) const {
  return parent_->element_name(to_parent_[a]);
}

std::string SubgroupView::describe() const {
  return "subgroup of order " + std::to_string(to_parent_.size());
}

std::optional<ElementIndex> SubgroupView::from_parent(ElementIndex parent_index) const {
  auto it = from_parent_.find(parent_index);
  if (it == from_parent_.end()) return std::nullopt;
  return it->second;
}

bool SubgroupView::contains_parent(ElementIndex parent_index) const {
  return from_parent_.contains(parent_index);
}

QuotientGroup::QuotientGroup(GroupPtr parent, const SubgroupView& normal)
    : parent_(std::move(parent)) {
  if (!parent_) throw std::invalid_argument("quotient needs a parent group");
  if (normal.parent().get() != parent_.get())
    throw std::invalid_argument("subgroup belongs to a different group");
  const std::size_t n = parent_->size();
  for (ElementIndex x = 0; x < n; ++x)
    for (ElementIndex h : normal.parent_indices())
      if (!normal.contains_parent(parent_->conjugate(h, x)))
        throw std::invalid_argument("subgroup is not normal");

  coset_of_.assign(n, static_cast<ElementIndex>(n));
  for (ElementIndex p = 0; p < n; ++p) {
    if (coset_of_[p] != static_cast<ElementIndex>(n)) continue;
    auto id = static_cast<ElementIndex>(reps_.size());
    reps_.push_back(p);
    for (ElementIndex h : normal.parent_indices()) coset_of_[parent_->mul(p, h)] = id;
  }

  const std::size_t q = reps_.size();
  table_.resize(q * q);
  inverse_.resize(q);
  for (std::size_t a = 0; a < q; ++a) {
    inverse_[a] = coset_of_[parent_->inverse(reps_[a])];
    for (std::size_t b = 0; b < q; ++b)
      table_[a * q + b] = coset_of_[parent_->mul(reps_[a], reps_[b])];
  }
}

ElementIndex QuotientGroup::mul(ElementIndex a, ElementIndex b) const {
  return table_[static_cast<std::size_t>(a) * reps_.size() + b];
}

ElementIndex QuotientGroup::inverse(ElementIndex a) const { return inverse_[a]; }

std::string QuotientGroup::element_name(ElementIndex a) const {
  return "[" + parent_->element_name(reps_[a]) + "]";
}

std::string QuotientGroup::describe() const {
  return "quotient group of order " + std::to_string(reps_.size());
}

std::shared_ptr<const SubgroupView> commutator_subgroup(const FiniteGroup& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<ElementIndex> seeds;
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      ElementIndex c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        if (c != FiniteGroup::identity) seeds.push_back(c);
      }
    }
  }
  auto members = subgroup_closure(g, seeds);
  return std::make_shared<SubgroupView>(g.shared_from_this(), std::move(members));
}

std::shared_ptr<const QuotientGroup> quotient(const FiniteGroup& g, const SubgroupView& normal) {
  return std::make_shared<QuotientGroup>(g.shared_from_this(), normal);
}

bool is_abelian(const FiniteGroup& g) {
  const std::size_t n = g.size();
  for (ElementIndex a = 1; a < n; ++a)
    for (ElementIndex b = a + 1; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_perfect(const FiniteGroup& g) { return commutator_subgroup(g)->size() == g.size(); }

bool is_nilpotent(const FiniteGroup& g) {
  const std::size_t n = g.size();
  std::vector<ElementIndex> cur(n);
  for (ElementIndex i = 0; i < n; ++i) cur[i] = i;
  while (true) {
    std::vector<bool> seen(n, false);
    std::vector<ElementIndex> seeds;
    for (ElementIndex x : cur) {
      for (ElementIndex y = 0; y < n; ++y) {
        ElementIndex c = g.commutator(x, y);
        if (!seen[c]) {
          seen[c] = true;
          if (c != FiniteGroup::identity) seeds.push_back(c);
        }
      }
    }
    auto nxt = subgroup_closure(g, seeds);
    if (nxt.size() == cur.size()) return cur.size() == 1;
    cur = std::move(nxt);
  }
}

bool is_solvable(const FiniteGroup& g) {
  const std::size_t n = g.size();
  std::vector<ElementIndex> cur(n);
  for (ElementIndex i = 0; i < n; ++i) cur[i] = i;
  while (true) {
    std::vector<bool> seen(n, false);
    std::vector<ElementIndex> seeds;
    for (ElementIndex x : cur) {
      for (ElementIndex y : cur) {
        ElementIndex c = g.commutator(x, y);
        if (!seen[c]) {
          seen[c] = true;
          if (c != FiniteGroup::identity) seeds.push_back(c);
        }
      }
    }
    auto nxt = subgroup_closure(g, seeds);
    if (nxt.size() == cur.size()) return cur.size() == 1;
    cur = std::move(nxt);
  }
}

AbelianType::AbelianType(std::vector<std::uint64_t> invariants)
    : invariants_(std::move(invariants)) {
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (invariants_[i] < 2) throw std::invalid_argument("invariant factors must be at least 2");
    if (i + 1 < invariants_.size() && invariants_[i] % invariants_[i + 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

std::uint64_t AbelianType::order() const {
  std::uint64_t o = 1;
  for (auto m : invariants_) o *= m;
  return o;
}

std::string AbelianType::to_string() const {
  if (invariants_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (i) out += " x ";
    out += "Z" + std::to_string(invariants_[i]);
  }
  return out;
}

AbelianType abelian_invariants(const FiniteGroup& g, const Limits& limits) {
  if (!is_abelian(g)) throw std::invalid_argument("abelian_invariants requires an abelian group");
  std::vector<std::uint64_t> invariants;
  std::vector<ElementIndex> cur(g.size());
  for (ElementIndex i = 0; i < g.size(); ++i) cur[i] = i;

  while (cur.size() > 1) {
    // element of maximal order, smallest index on ties; cur is sorted
    ElementIndex best = cur[1];
    std::uint64_t best_order = g.order_of(best);
    for (std::size_t i = 2; i < cur.size(); ++i) {
      std::uint64_t o = g.order_of(cur[i]);
      if (o > best_order) {
        best_order = o;
        best = cur[i];
      }
    }
    invariants.push_back(best_order);
    ElementIndex seed = best;
    auto cyc = subgroup_closure(g, std::span<const ElementIndex>(&seed, 1));
    if (cyc.size() == cur.size()) break;

    // smallest generating set of a complement: subgroup of the right order
    // meeting the cyclic part only in the identity
    const std::uint64_t q = cur.size() / best_order;
    std::vector<ElementIndex> candidates(cur.begin() + 1, cur.end());
    std::vector<ElementIndex> complement;
    std::uint64_t examined = 0;
    for (std::size_t s = 1; complement.empty() && s <= candidates.size(); ++s) {
      std::vector<std::size_t> pick(s);
      for (std::size_t i = 0; i < s; ++i) pick[i] = i;
      while (true) {
        if (++examined > limits.max_subsets)
          throw ResourceError("candidate subset", limits.max_subsets, "--max-subsets");
        std::vector<ElementIndex> members(s);
        for (std::size_t i = 0; i < s; ++i) members[i] = candidates[pick[i]];
        auto h = subgroup_closure(g, members);
        if (h.size() == q) {
          std::vector<ElementIndex> meet;
          std::set_intersection(cyc.begin(), cyc.end(), h.begin(), h.end(),
                                std::back_inserter(meet));
          if (meet.size() == 1) {
            complement = std::move(h);
            break;
          }
        }
        // advance the position odometer
        std::size_t i = s;
        bool more = false;
        while (i-- > 0) {
          if (pick[i] < candidates.size() - (s - 1 - i)) {
            ++pick[i];
            for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
            more = true;
            break;
          }
        }
        if (!more) break;
      }
    }
    if (complement.empty())
      throw std::logic_error("no complement found for a cyclic direct factor");
    cur = std::move(complement);
  }

  AbelianType type(std::move(invariants));
  if (type.order() != g.size()) throw std::logic_error("invariant factors do not multiply to |G|");
  return type;
}

int derived_quotient_rank(const FiniteGroup& g) {
  if (auto hint = g.abelianization_rank_hint()) return *hint;
  if (g.size() == 1) return 0;
  auto derived = commutator_subgroup(g);
  if (derived->size() == g.size()) return 0;
  auto q = quotient(g, *derived);
  return static_cast<int>(abelian_invariants(*q).invariants().size());
}

RankResult rank(const FiniteGroup& g, const Limits& limits) {
  const std::size_t n = g.size();
  if (n == 1) return {0, {}, 0, 0};
  const int lb = std::max(1, derived_quotient_rank(g));

  RankResult res;
  res.lower_bound_used = lb;
  GenScratch scratch;
  const auto hi = static_cast<ElementIndex>(n - 1);
  for (int r = lb; static_cast<std::size_t>(r) <= n - 1; ++r) {
    std::vector<ElementIndex> c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = static_cast<ElementIndex>(i + 1);
    while (true) {
      if (++res.subsets_examined > limits.max_subsets)
        throw ResourceError("candidate subset", limits.max_subsets, "--max-subsets");
      if (generates_with(g, c, scratch)) {
        res.value = r;
        res.witness = c;
        return res;
      }
      if (!next_combination(c, 1, hi)) break;
    }
  }
  throw std::logic_error("rank search exhausted all subsets without a generating set");
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

GeneratorFile load_generators(std::istream& in) {
  GeneratorFile file;
  std::string line;
  std::size_t lineno = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    if (!have_degree) {
      std::istringstream ss(line);
      std::string kw;
      long d = 0;
      ss >> kw >> d;
      std::string rest;
      if (kw != "degree" || ss.fail() || (ss >> rest, !rest.empty()) || d < 1 || d > 65535)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'degree <d>'", lineno);
      file.degree = static_cast<int>(d);
      have_degree = true;
      continue;
    }
    try {
      file.generators.push_back(parse_cycles(line, file.degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  if (!have_degree) throw ParseError("missing 'degree <d>' line", lineno);
  return file;
}

GeneratorFile load_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file: " + path);
  return load_generators(in);
}

}  // namespace powerdiam
