#include "numsg_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "numsg/census.hpp"
#include "numsg/experiments.hpp"
#include "numsg/json.hpp"
#include "numsg/oracle.hpp"
#include "numsg/transforms.hpp"
#include "numsg/trees.hpp"
#include "numsg/wilf.hpp"

namespace numsg::cli {

namespace {

// Largest genus scanned without --stretch-43.
constexpr int kDefaultScanCap = 36;

std::vector<int> parse_list(std::string const& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      if (is.eof() && out.empty()) break;
      throw ParseError("empty item in list '" + text + "'");
    }
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (std::exception const&) {
      throw ParseError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw ParseError("not an integer: '" + item + "'");
    out.push_back(value);
  }
  return out;
}

std::string join(std::vector<int> const& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

struct SemigroupInput {
  std::string gens;
  std::string gaps;
  std::string small;

  void attach(CLI::App& app) {
    app.add_option("--gens", gens, "minimal or non-minimal generators, e.g. 5,7,13,16");
    app.add_option("--gaps", gaps, "gap list, e.g. 1,2,3,4,6,8,9,11");
    app.add_option("--small", small, "small elements and conductor, e.g. 0,5,7,10,12:13");
  }

  bool given() const { return !gens.empty() || !gaps.empty() || !small.empty(); }

  NumericalSemigroup get() const {
    const int forms = int(!gens.empty()) + int(!gaps.empty()) + int(!small.empty());
    if (forms != 1) throw ParseError("give exactly one of --gens, --gaps, --small");
    if (!gens.empty()) return NumericalSemigroup::from_generators(parse_list(gens));
    if (!small.empty()) {
      auto colon = small.find(':');
      if (colon == std::string::npos) throw ParseError("--small needs the form 0,a,b,...:c");
      auto members = parse_list(small.substr(0, colon));
      auto conductor = parse_list(small.substr(colon + 1));
      if (conductor.size() != 1) throw ParseError("--small needs a single conductor after ':'");
      return NumericalSemigroup::from_small_elements(members, conductor.front());
    }
    if (gaps == "-") return NumericalSemigroup::naturals();
    return NumericalSemigroup::from_gaps(parse_list(gaps));
  }
};

void print_report(NumericalSemigroup const& s, std::ostream& out) {
  auto r = report(s);
  auto w = wilf_check(s);
  auto row = [&](std::string const& key, std::string const& value) {
    out << std::left << std::setw(16) << key << value << "\n";
  };
  auto kind = special_kind(s);
  row("semigroup", to_string(s));
  row("generators", generators_string(s));
  row("conductor", std::to_string(r.conductor));
  row("frobenius", std::to_string(r.frobenius));
  row("genus", std::to_string(r.genus));
  row("multiplicity", std::to_string(r.multiplicity));
  row("left", std::to_string(r.left));
  row("embedding_dim", std::to_string(r.embedding_dimension));
  row("gaps", join(r.gaps));
  row("special_gaps", join(r.special_gaps));
  row("sub_frobenius", r.sub_frobenius ? std::to_string(*r.sub_frobenius) : "-");
  row("special", kind.empty() ? "no" : kind);
  if (is_irreducible(s)) row("irreducible", is_symmetric(s) ? "symmetric" : "pseudo-symmetric");
  row("wilf", std::string(w.wilf_holds ? "holds" : "FAILS") + " (e*n=" + std::to_string(w.e * w.n) +
                  ", F+1=" + std::to_string(w.frobenius + 1) + ")");
  if (w.eliahou) row("eliahou", std::to_string(w.eliahou->value));
}

void print_trace(TransformTrace const& trace, std::ostream& out) {
  out << "0  " << to_string(trace.steps.front()) << "  e=" << trace.steps.front().embedding_dimension() << "\n";
  for (std::size_t i = 0; i < trace.annotations.size(); ++i) {
    auto const& a = trace.annotations[i];
    out << i + 1 << "  " << to_string(trace.steps[i + 1]) << "  e=" << a.e_after << "  (+" << a.added;
    if (a.removed_m) out << " -" << *a.removed_m;
    out << ")\n";
  }
  auto why = domain_violation(trace.steps.back(), trace.kind);
  if (!why.empty()) out << "stop: " << why << "\n";
}

struct Options {
  unsigned threads = 1;
  bool json = false;

  // info / transform / wilf
  SemigroupInput input;
  std::string transform_kind = "a";
  std::string steps = "all";

  // tree / experiment / leaf reduction
  std::string tree_kind = "A";
  int genus = 0;
  int left = 0;
  std::string format = "dot";
  std::string label = "gaps";
  bool leaves_only = false;
  std::optional<std::size_t> max_nodes;

  // census
  bool check = false;
  std::string method = "b_trees";
  bool dump = false;

  // wilf
  std::optional<int> max_genus;
  int min_genus = 0;
  bool eliahou = false;
  bool leaf_strategy = false;
  bool stretch = false;
  std::string findings;
  bool skip_known = false;

  // experiment
  std::string experiment;
};

int cmd_info(Options const& o, std::ostream& out) {
  auto s = o.input.get();
  if (o.json) {
    out << to_json(report(s)).dump() << "\n";
  } else {
    print_report(s, out);
  }
  return kOk;
}

int cmd_transform(Options const& o, std::ostream& out, std::ostream& err) {
  auto s = o.input.get();
  auto kind = parse_transform_kind(o.transform_kind);
  if (auto why = domain_violation(s, kind); !why.empty()) {
    err << "transform " << name(kind) << ": " << why << "\n";
    return kUsage;
  }
  std::optional<int> limit;
  if (o.steps != "all") {
    auto v = parse_list(o.steps);
    if (v.size() != 1 || v.front() < 0) throw ParseError("--steps takes a count or 'all'");
    limit = v.front();
  }
  auto trace = iterate(s, kind, limit);
  if (o.json) {
    out << to_json(trace).dump() << "\n";
  } else {
    print_trace(trace, out);
  }
  return kOk;
}

int cmd_tree(Options const& o, std::ostream& out) {
  auto kind = parse_tree_kind(o.tree_kind);
  BuildOptions b;
  b.leaves_only = o.leaves_only;
  b.max_nodes = o.max_nodes;
  b.threads = o.threads;
  if (o.format == "count") b.leaves_only = true;
  auto tree = build_tree(kind, o.genus, o.left, b);
  if (o.format == "dot") {
    out << to_dot(tree, o.label == "gens" ? DotLabel::Generators : DotLabel::Gaps);
  } else if (o.format == "json") {
    out << to_json(tree).dump() << "\n";
  } else {
    out << "nodes " << tree.node_count << "\n"
        << "edges " << tree.edge_count << "\n"
        << "leaves " << tree.leaf_count << "\n"
        << "depth " << tree.depth << "\n";
  }
  return kOk;
}

int cmd_census(Options const& o, std::ostream& out, std::ostream& err) {
  if (o.genus < 0) throw ParseError("--genus must be >= 0");
  if (o.dump) {
    auto pop = oracle::enumerate_all(o.genus);
    for (auto const& s : pop.by_genus[static_cast<std::size_t>(o.genus)]) out << to_json(s).dump() << "\n";
    return kOk;
  }
  std::vector<CensusMethod> methods{parse_census_method(o.method)};
  if (o.check && methods.front() != CensusMethod::ClassicalOracle) methods.push_back(CensusMethod::ClassicalOracle);
  if (o.check && methods.front() == CensusMethod::ClassicalOracle) methods.push_back(CensusMethod::BTrees);
  auto summary = census(o.genus, methods, o.threads);
  if (o.json) {
    out << to_json(summary).dump() << "\n";
  } else {
    out << to_table(summary);
  }
  if (!summary.agree) {
    err << "census methods disagree at n =";
    for (int n : summary.disagreeing_left) err << " " << n;
    err << "\n";
    return kUsage;
  }
  return kOk;
}

int cmd_wilf_scan(Options const& o, std::ostream& out, std::ostream& err) {
  int max_genus = o.stretch ? 43 : *o.max_genus;
  if (o.max_genus && o.stretch) max_genus = *o.max_genus;
  if (max_genus > kDefaultScanCap && !o.stretch) {
    err << "wilf: genus above " << kDefaultScanCap << " runs for hours; pass --stretch-43 to opt in\n";
    return kUsage;
  }
  ScanOptions so;
  so.eliahou_only = o.eliahou || o.stretch;
  so.leaf_strategy = o.leaf_strategy;
  so.threads = o.threads;
  so.min_genus = o.min_genus;
  auto r = scan(max_genus, so);

  if (!o.findings.empty()) {
    std::ofstream file(o.findings);
    if (!file) throw ParseError("cannot write findings file '" + o.findings + "'");
    for (auto const& f : r.findings) file << to_json(f).dump() << "\n";
  }
  if (o.json) {
    out << to_json(r).dump() << "\n";
  } else {
    out << "genus  semigroups\n";
    for (std::size_t g = static_cast<std::size_t>(std::max(o.min_genus, 0)); g < r.counts.size(); ++g) {
      std::uint64_t total = 0;
      for (auto c : r.counts[g]) total += c;
      out << std::left << std::setw(7) << g << total << "\n";
    }
    out << "scanned " << r.scanned << "\n";
    out << "wilf checked " << r.wilf_checked << (so.eliahou_only || so.leaf_strategy ? " (E < 0 only)" : "") << "\n";
    if (so.leaf_strategy) {
      out << "classes checked by leaves " << r.classes_checked.size() << ", precertified " << r.classes_skipped
          << "\n";
    }
    out << r.wilf_violations << " violations\n";
    out << r.negative_eliahou << " negative Eliahou numbers";
    if (r.min_negative_genus) out << " (smallest genus " << *r.min_negative_genus << ")";
    out << "\n";
    if (!so.eliahou_only && !so.leaf_strategy) {
      out << "eliahou consistency " << (r.eliahou_inconsistent == 0 ? "ok" : "BROKEN") << "\n";
    }
    if (r.findings_truncated) out << "findings truncated\n";
    if (o.findings.empty()) {
      for (auto const& f : r.findings) out << to_json(f).dump() << "\n";
    }
  }
  if (r.eliahou_inconsistent != 0) {
    err << "wilf: a semigroup with E >= 0 fails Wilf's inequality\n";
    return kUsage;
  }
  return r.wilf_violations == 0 ? kOk : kWilfViolation;
}

int cmd_wilf(Options const& o, std::ostream& out, std::ostream& err) {
  if (o.max_genus || o.stretch) return cmd_wilf_scan(o, out, err);
  if (o.input.given()) {
    auto s = o.input.get();
    auto w = wilf_check(s);
    if (o.json) {
      out << to_json(w).dump() << "\n";
    } else {
      out << "e=" << w.e << " n=" << w.n << " F=" << w.frobenius << " g=" << w.genus << "\n";
      out << "wilf " << (w.wilf_holds ? "holds" : "FAILS") << "\n";
      if (w.eliahou) {
        auto const& e = *w.eliahou;
        out << "E=" << e.value << " q=" << e.q << " rho=" << e.rho << " Q={" << join(e.q_set) << "} D={"
            << join(e.d_set) << "}\n";
      }
    }
    return w.wilf_holds ? kOk : kWilfViolation;
  }
  if (o.genus == 0) throw ParseError("wilf needs --max-genus, --stretch-43, a semigroup, or --genus/--left");
  LeafReductionOptions lo;
  lo.skip_precertified = o.skip_known;
  lo.threads = o.threads;
  auto r = leaf_reduction_check(parse_tree_kind(o.tree_kind), o.genus, o.left, lo);
  if (o.json) {
    out << to_json(r).dump() << "\n";
  } else {
    out << (r.kind == TreeKind::A ? "T" : "T'") << "_{" << r.genus << "," << r.left << "}\n";
    if (r.skipped) {
      out << "precertified (n <= 12 or 3n >= g); tree not built\n";
    } else {
      out << "leaves checked " << r.leaves_checked << "\n";
      if (r.kind == TreeKind::A) out << "A-images checked " << r.images_checked << "\n";
      out << r.violations.size() << " violations\n";
      for (auto const& s : r.violations) out << "  " << generators_string(s) << "\n";
      out << "class " << (r.certified ? "certified" : "NOT certified") << "\n";
      if (r.brute_force_agrees) {
        out << "brute force over " << *r.brute_force_nodes << " nodes "
            << (*r.brute_force_agrees ? "agrees" : "DISAGREES") << "\n";
      }
    }
  }
  if (r.brute_force_agrees && !*r.brute_force_agrees) {
    err << "wilf: leaf certificate disagrees with brute force\n";
    return kUsage;
  }
  return r.violations.empty() ? kOk : kWilfViolation;
}

std::vector<std::pair<int, int>> experiment_classes(Options const& o) {
  std::vector<std::pair<int, int>> out;
  if (o.max_genus) {
    for (int g = 5; g <= *o.max_genus; ++g) {
      for (int n = 2; n <= g - 2; ++n) out.emplace_back(g, n);
    }
  } else {
    out.emplace_back(o.genus, o.left);
  }
  return out;
}

int cmd_experiment(Options const& o, std::ostream& out) {
  if (o.experiment != "child-edim" && o.experiment != "leaf-overlap") {
    throw ParseError("unknown experiment '" + o.experiment + "' (expected child-edim or leaf-overlap)");
  }
  const bool edim = o.experiment == "child-edim";
  if (!o.max_genus && o.genus > 3 && (o.left == o.genus - 1 || o.left == o.genus)) {
    out << "skipped: T_{" << o.genus << "," << o.left << "} is undefined for n > g-2 "
        << "(that class holds the irreducible semigroups)\n";
    return kOk;
  }
  Json all = Json::array();
  std::size_t total_internal = 0;
  std::size_t total_bad = 0;
  for (auto [g, n] : experiment_classes(o)) {
    if (edim) {
      auto r = experiment_child_edim(g, n, o.threads);
      total_internal += r.internal_nodes;
      total_bad += r.counterexamples.size();
      if (o.json) {
        all.push_back(to_json(r));
        continue;
      }
      if (!o.max_genus) {
        for (auto const& row : r.rows) {
          out << generators_string(row.node) << "  e=" << row.e << "  min child e=" << row.min_child_e << "  "
              << (row.has_child_not_above ? "yes" : "NO") << "\n";
        }
      } else {
        out << "g=" << g << " n=" << n << " internal " << r.internal_nodes << " without such child "
            << r.counterexamples.size() << "\n";
      }
      for (auto const& s : r.counterexamples) out << "  counterexample " << generators_string(s) << "\n";
    } else {
      auto r = experiment_leaf_overlap(g, n, o.threads);
      if (o.json) {
        all.push_back(to_json(r));
        continue;
      }
      out << "g=" << g << " n=" << n << " |F|=" << r.leaves_a << " |F'|=" << r.leaves_b << " common=" << r.common
          << " F<=F'=" << (r.a_in_b ? "yes" : "no") << " F'<=F=" << (r.b_in_a ? "yes" : "no")
          << " vertices " << (r.same_vertices ? "equal" : "differ") << " edges "
          << (r.same_edges ? "equal" : "differ") << "\n";
    }
  }
  if (o.json) {
    out << (all.size() == 1 ? all.front() : all).dump() << "\n";
  } else if (edim) {
    out << "internal nodes " << total_internal << ", without a child of smaller or equal e " << total_bad << "\n";
  }
  return kOk;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical semigroups: invariants, transforms, trees, censuses and Wilf scans", "numsg"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1U, 1024U));

  auto* info = app.add_subcommand("info", "invariants of one semigroup");
  o.input.attach(*info);
  info->add_flag("--json", o.json);

  auto* transform = app.add_subcommand("transform", "iterate f1, f2, f3, A or B");
  o.input.attach(*transform);
  transform->add_option("--kind", o.transform_kind, "f1|f2|f3|a|b");
  transform->add_option("--steps", o.steps, "number of steps or 'all'");
  transform->add_flag("--json", o.json);

  auto* tree = app.add_subcommand("tree", "build T_{g,n} (A) or T'_{g,n} (B)");
  tree->add_option("--kind", o.tree_kind, "A|B");
  tree->add_option("--genus", o.genus)->required();
  tree->add_option("--left", o.left)->required();
  tree->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json", "count"}));
  tree->add_option("--label", o.label)->check(CLI::IsMember({"gaps", "gens"}));
  tree->add_flag("--leaves-only", o.leaves_only);
  tree->add_option("--max-nodes", o.max_nodes);

  auto* census_cmd = app.add_subcommand("census", "count semigroups of one genus by left count");
  census_cmd->add_option("--genus", o.genus)->required();
  census_cmd->add_option("--method", o.method, "b_trees|oracle|walk");
  census_cmd->add_flag("--check", o.check, "also run the oracle and compare");
  census_cmd->add_flag("--dump", o.dump, "print the oracle population as JSON lines");
  census_cmd->add_flag("--json", o.json);

  auto* wilf = app.add_subcommand("wilf", "Wilf checks: one semigroup, one (g,n) class, or a genus scan");
  o.input.attach(*wilf);
  wilf->add_option("--max-genus", o.max_genus);
  wilf->add_option("--min-genus", o.min_genus);
  wilf->add_flag("--eliahou", o.eliahou, "scan Eliahou numbers; Wilf only where E < 0");
  wilf->add_flag("--leaf-strategy", o.leaf_strategy, "check non-precertified classes through tree leaves");
  wilf->add_flag("--stretch-43", o.stretch, "allow genus up to 43 (hours)");
  wilf->add_option("--findings", o.findings, "write findings as JSON lines to this file");
  wilf->add_option("--kind", o.tree_kind, "A|B");
  wilf->add_option("--genus", o.genus);
  wilf->add_option("--left", o.left);
  wilf->add_flag("--skip-known", o.skip_known, "skip classes with n <= 12 or 3n >= g");
  wilf->add_flag("--json", o.json);

  auto* experiment = app.add_subcommand("experiment", "child-edim or leaf-overlap");
  experiment->add_option("name", o.experiment)->required();
  experiment->add_option("--genus", o.genus);
  experiment->add_option("--left", o.left);
  experiment->add_option("--max-genus", o.max_genus, "aggregate over 4 < g <= max, 2 <= n <= g-2");
  experiment->add_flag("--json", o.json);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (CLI::CallForAllHelp const& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "numsg: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (transform->parsed()) return cmd_transform(o, out, err);
    if (tree->parsed()) return cmd_tree(o, out);
    if (census_cmd->parsed()) return cmd_census(o, out, err);
    if (wilf->parsed()) return cmd_wilf(o, out, err);
    if (experiment->parsed()) return cmd_experiment(o, out);
  } catch (LimitExceeded const& e) {
    err << "numsg: " << e.what() << " (partial result discarded)\n";
    return kUsage;
  } catch (Error const& e) {
    err << "numsg: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace numsg::cli
