#include "powerdiam/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "powerdiam/bounds.hpp"
#include "powerdiam/conjecture.hpp"
#include "powerdiam/diameter.hpp"
#include "powerdiam/families.hpp"
#include "powerdiam/power.hpp"

namespace powerdiam {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

GenSet alternating(int n, const Limits& limits) {
  if (n < 3) throw std::invalid_argument("alternating groups need degree at least 3");
  std::vector<Permutation> seeds{parse_cycles("(1 2 3)", n)};
  std::vector<std::string> labels{"s"};
  if (n > 3) {
    // an n-cycle for odd n, an (n-1)-cycle fixing 1 for even n; both even
    std::string cyc = "(";
    for (int i = n % 2 ? 1 : 2; i <= n; ++i) {
      if (cyc.size() > 1) cyc += ' ';
      cyc += std::to_string(i);
    }
    cyc += ")";
    seeds.push_back(parse_cycles(cyc, n));
    labels.push_back("c");
  }
  auto g = PermGroup::closure(seeds, limits);
  std::uint64_t half = 1;  // n!/2
  for (int i = 3; i <= n; ++i) half *= static_cast<std::uint64_t>(i);
  if (g->size() != half) throw std::logic_error("alternating construction produced the wrong order");
  return GenSet(g, g->seed_indices(), labels);
}

GenSet cyclic_product(const std::string& spec, const Limits& limits) {
  std::vector<int> orders;
  std::size_t pos = 0;
  while (true) {
    const auto next = spec.find('x', pos);
    const auto tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.size() < 2 || tok[0] != 'Z' || !all_digits(tok.substr(1)))
      throw std::invalid_argument("bad cyclic factor '" + tok + "' in group spec '" + spec + "'");
    const int m = std::stoi(tok.substr(1));
    if (m < 2) throw std::invalid_argument("cyclic factors need order at least 2");
    orders.push_back(m);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  int degree = 0;
  for (int m : orders) degree += m;
  std::vector<Permutation> seeds;
  std::vector<std::string> labels;
  int offset = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<std::uint16_t> img(static_cast<std::size_t>(degree));
    for (int p = 0; p < degree; ++p) img[static_cast<std::size_t>(p)] = static_cast<std::uint16_t>(p);
    for (int p = 0; p < orders[i]; ++p) {
      const int from = offset + p;
      const int to = p + 1 == orders[i] ? offset : from + 1;
      img[static_cast<std::size_t>(from)] = static_cast<std::uint16_t>(to);
    }
    seeds.emplace_back(std::move(img));
    labels.push_back(orders.size() == 1 ? "g" : "z" + std::to_string(i + 1));
    offset += orders[i];
  }
  auto g = PermGroup::closure(seeds, limits);
  std::uint64_t product = 1;
  for (int m : orders) product *= static_cast<std::uint64_t>(m);
  if (g->size() != product)
    throw std::logic_error("cyclic product construction produced the wrong order");
  return GenSet(g, g->seed_indices(), labels);
}

}  // namespace

GenSet resolve_spec(const std::string& spec, const Limits& limits) {
  if (spec.rfind("file:", 0) == 0) {
    auto gf = load_generators_file(spec.substr(5));
    auto g = PermGroup::closure(gf.generators, limits);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g->seed_indices().size(); ++i)
      labels.push_back("x" + std::to_string(i + 1));
    return GenSet(g, g->seed_indices(), labels);
  }
  if (spec.size() >= 2 && all_digits(spec.substr(1))) {
    if (spec[0] == 'S') return sn_generators(std::stoi(spec.substr(1)), limits);
    if (spec[0] == 'D') return dn_generators(std::stoi(spec.substr(1)), limits);
    if (spec[0] == 'A') return alternating(std::stoi(spec.substr(1)), limits);
  }
  if (!spec.empty() && spec[0] == 'Z') return cyclic_product(spec, limits);
  throw std::invalid_argument("unrecognized group spec '" + spec +
                              "'; expected S<n>, D<n>, A<n>, Z<m>x..., or file:<path>");
}

namespace {

nlohmann::json name_array(const FiniteGroup& g, std::span<const ElementIndex> members) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto m : members) arr.push_back(g.element_name(m));
  return arr;
}

GenSet power_genset(const GenSet& base, int n, const std::string& kind, const Limits& limits) {
  return kind == "coprime" ? coprime_genset(base, n, limits) : canonical_genset(base, n, limits);
}

WeakStrategy weak_strategy(const std::string& s) {
  if (s == "canonical") return WeakStrategy::canonical;
  if (s == "coprime") return WeakStrategy::coprime;
  if (s == "search") return WeakStrategy::search;
  return WeakStrategy::automatic;
}

StrongMode strong_mode(const std::string& s) {
  if (s == "formula") return StrongMode::abelian_formula;
  if (s == "exhaustive") return StrongMode::exhaustive;
  if (s == "sampled") return StrongMode::sampled;
  return StrongMode::automatic;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"diameters of finite groups and their direct powers", "powerdiam"};
  app.require_subcommand(1);

  std::string format = "json";
  Limits limits;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--max-states", limits.max_states,
                 "cap on elements visited by closures and breadth-first searches")
      ->capture_default_str();
  app.add_option("--max-subsets", limits.max_subsets,
                 "cap on candidate subsets in rank and diameter searches")
      ->capture_default_str();

  const char* spec_help = "group spec: S<n>, D<n>, A<n>, Z<m>x..., or file:<path>";
  int rc = 0;
  std::string spec, element_text, genset_kind = "canonical", strategy = "auto", mode = "auto";
  std::string out_path;
  int n = 1, power_n = 1;
  std::uint64_t samples = 200, seed = 1;

  auto emit = [&](const nlohmann::json& j, const std::string& text) {
    if (format == "json")
      out << j.dump() << "\n";
    else
      out << text;
  };

  auto* diam_cmd =
      app.add_subcommand("diam", "diameter of the group over its default generating set");
  diam_cmd->fallthrough();
  diam_cmd->add_option("spec", spec, spec_help)->required();
  diam_cmd->callback([&] {
    auto gs = resolve_spec(spec, limits);
    const auto d = diam(gs, limits);
    emit({{"diam", d}, {"genset", gs.display()}},
         "genset: " + gs.display() + "\ndiam: " + std::to_string(d) + "\n");
  });

  auto* rank_cmd =
      app.add_subcommand("rank", "smallest number of elements generating the group");
  rank_cmd->fallthrough();
  rank_cmd->add_option("spec", spec, spec_help)->required();
  rank_cmd->callback([&] {
    auto gs = resolve_spec(spec, limits);
    const auto r = rank(gs.group(), limits);
    std::string names;
    for (auto m : r.witness) {
      if (!names.empty()) names += ", ";
      names += gs.group().element_name(m);
    }
    emit({{"rank", r.value},
          {"lower_bound", r.lower_bound_used},
          {"subsets_examined", r.subsets_examined},
          {"witness", name_array(gs.group(), r.witness)}},
         "rank: " + std::to_string(r.value) + "\nwitness: {" + names + "}\nsubsets examined: " +
             std::to_string(r.subsets_examined) + "\n");
  });

  auto* express_cmd =
      app.add_subcommand("express", "shortest word for an element, in cycle notation");
  express_cmd->fallthrough();
  express_cmd->add_option("spec", spec, spec_help)->required();
  express_cmd->add_option("element", element_text, "permutation in cycle notation, e.g. \"(1 3)(2 4)\"")
      ->required();
  express_cmd->callback([&] {
    auto gs = resolve_spec(spec, limits);
    const auto* pg = dynamic_cast<const PermGroup*>(&gs.group());
    if (!pg) throw std::invalid_argument("spec did not resolve to a permutation group");
    const auto sigma = parse_cycles(element_text, pg->degree());
    const auto idx = pg->index_of(sigma);
    if (!idx) throw std::invalid_argument("element is not in the group");
    auto lt = length_table(gs, limits);
    const Word w = express(lt, *idx);
    const auto rendered = word_to_string(gs, w);
    emit({{"element", pg->element_name(*idx)}, {"length", w.length()}, {"word", rendered}},
         "element: " + pg->element_name(*idx) + "\nlength: " + std::to_string(w.length()) +
             "\nword: " + rendered + "\n");
  });

  auto* power_cmd =
      app.add_subcommand("power-diam", "diameter of a direct power over a replicated set");
  power_cmd->fallthrough();
  power_cmd->add_option("spec", spec, spec_help)->required();
  power_cmd->add_option("n", power_n, "number of direct factors")
      ->required()
      ->check(CLI::PositiveNumber);
  power_cmd->add_option("--genset", genset_kind, "which generating set to replicate")
      ->check(CLI::IsMember({"canonical", "coprime"}))
      ->capture_default_str();
  power_cmd->callback([&] {
    auto gs = resolve_spec(spec, limits);
    auto pgs = power_genset(gs, power_n, genset_kind, limits);
    const auto d = diam(pgs, limits);
    emit({{"diam", d}, {"genset", pgs.display()}, {"n", power_n}},
         "genset: " + pgs.display() + "\ndiam: " + std::to_string(d) + "\n");
  });

  auto* bounds_cmd = app.add_subcommand("bounds", "every applicable diameter and rank bound");
  bounds_cmd->fallthrough();
  bounds_cmd->add_option("spec", spec, spec_help)->required();
  bounds_cmd->add_option("n", n, "power exponent the conjectured bounds refer to")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bounds_cmd->callback([&] {
    auto gs = resolve_spec(spec, limits);
    const auto& g = gs.group();
    const auto r = rank(g, limits);
    const auto order = static_cast<std::int64_t>(g.size());
    const auto alpha = static_cast<std::int64_t>(r.value);
    std::vector<BoundReport> reports;
    reports.push_back(report_general_upper_bound(order, alpha));
    reports.push_back(report_strong_conjecture_bound(order, alpha, n));
    reports.push_back(report_canonical_bound(diam(gs, limits), n));
    if (is_abelian(g)) reports.push_back(report_abelian_diameter(abelian_invariants(g, limits)));
    if (spec[0] == 'S' && all_digits(spec.substr(1))) {
      const int deg = std::stoi(spec.substr(1));
      reports.push_back(report_sn_diameter_bound(
          deg, deg % 2 ? SnGensetKind::full_cycle : SnGensetKind::short_cycle));
    }
    const auto beta = static_cast<std::int64_t>(derived_quotient_rank(g));
    if (beta >= 2) reports.push_back(report_wiegold_threshold(alpha, beta, WiegoldCase::imperfect));
    if (beta >= 1 && is_solvable(g))
      reports.push_back(report_wiegold_threshold(alpha, beta, WiegoldCase::solvable));
    if (format == "json") {
      out << to_json(reports) << "\n";
    } else {
      for (const auto& rep : reports)
        out << rep.name << ": " << rep.value << "\n";
    }
  });

  auto* weak_cmd = app.add_subcommand(
      "check-weak", "look for a minimum-size generating set of G^n within the conjectured bound");
  weak_cmd->fallthrough();
  weak_cmd->add_option("spec", spec, spec_help)->required();
  weak_cmd->add_option("n", n, "power exponent")->required()->check(CLI::PositiveNumber);
  weak_cmd->add_option("--strategy", strategy, "candidate construction")
      ->check(CLI::IsMember({"auto", "canonical", "coprime", "search"}))
      ->capture_default_str();
  weak_cmd->callback([&] {
    auto gs = resolve_spec(spec, limits);
    auto rep = check_weak(gs, n, weak_strategy(strategy), spec, limits);
    emit(nlohmann::json::parse(to_json(rep)), to_text(rep));
    if (rep.verdict == Verdict::counterexample) rc = 2;
  });

  auto* strong_cmd = app.add_subcommand(
      "check-strong", "test every (or many) generating sets of G^n against the conjectured bound");
  strong_cmd->fallthrough();
  strong_cmd->add_option("spec", spec, spec_help)->required();
  strong_cmd->add_option("n", n, "power exponent")->required()->check(CLI::PositiveNumber);
  strong_cmd->add_option("--mode", mode, "how to range over generating sets")
      ->check(CLI::IsMember({"auto", "formula", "exhaustive", "sampled"}))
      ->capture_default_str();
  strong_cmd->add_option("--samples", samples, "generating sets to draw in sampled mode")
      ->capture_default_str();
  strong_cmd->add_option("--seed", seed, "random seed for sampled mode")->capture_default_str();
  strong_cmd->callback([&] {
    auto gs = resolve_spec(spec, limits);
    auto rep = check_strong(gs, n, strong_mode(mode), spec, samples, seed, limits);
    emit(nlohmann::json::parse(to_json(rep)), to_text(rep));
    if (rep.verdict == Verdict::counterexample) rc = 2;
  });

  auto* table_cmd =
      app.add_subcommand("table", "CSV of shortest word lengths, one row per element");
  table_cmd->fallthrough();
  table_cmd->add_option("spec", spec, spec_help)->required();
  table_cmd->add_option("--power", power_n, "table the direct power instead")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  table_cmd->add_option("--genset", genset_kind, "generating set for the power")
      ->check(CLI::IsMember({"canonical", "coprime"}))
      ->capture_default_str();
  table_cmd->add_option("--out", out_path, "write to a file instead of stdout");
  table_cmd->callback([&] {
    auto gs = resolve_spec(spec, limits);
    GenSet use = power_n > 1 ? power_genset(gs, power_n, genset_kind, limits) : gs;
    auto lt = length_table(use, limits);
    if (out_path.empty()) {
      write_length_csv(out, lt);
    } else {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
      write_length_csv(f, lt);
    }
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace powerdiam
