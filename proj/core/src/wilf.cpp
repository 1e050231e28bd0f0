#include "numsg/wilf.hpp"

#include "numsg/errors.hpp"
#include "numsg/transforms.hpp"

namespace numsg {

EliahouRecord eliahou(NumericalSemigroup const& s) {
  if (s.is_naturals()) throw DomainError("Eliahou number undefined for N");
  const int c = s.conductor();
  const int m = s.multiplicity();
  EliahouRecord r;
  r.q = (c + m - 1) / m;
  r.rho = r.q * m - c;
  std::vector<char> generator(static_cast<std::size_t>(c + m), 0);
  for (int x : s.minimal_generators()) {
    if (x < s.frobenius()) r.q_set.push_back(x);
    generator[static_cast<std::size_t>(x)] = 1;
  }
  for (int x = c; x < c + m; ++x) {
    if (!generator[static_cast<std::size_t>(x)]) r.d_set.push_back(x);
  }
  const long long n = s.left_count();
  r.value = static_cast<long long>(r.q_set.size()) * n - static_cast<long long>(r.q) * static_cast<long long>(r.d_set.size()) + r.rho;
  return r;
}

long long eliahou_number(NumericalSemigroup const& s) { return eliahou(s).value; }

WilfRecord wilf_check(NumericalSemigroup const& s) {
  WilfRecord r;
  r.e = s.embedding_dimension();
  r.n = s.left_count();
  r.frobenius = s.frobenius();
  r.genus = s.genus();
  const long long e = r.e;
  const long long n = r.n;
  r.wilf_holds = e * n >= r.frobenius + 1LL;
  const bool other = (e - 1) * n >= r.genus;
  if (other != r.wilf_holds) throw InternalError("Wilf forms disagree on " + to_string(s));
  if (!s.is_naturals()) r.eliahou = eliahou(s);
  return r;
}

bool class_precertified(int g, int n) { return n <= 12 || 3 * n >= g; }

namespace {

bool full_interval(NumericalSemigroup const& s) {
  for (int x = s.frobenius() - s.multiplicity() + 1; x < s.frobenius(); ++x) {
    if (!s.contains(x)) return false;
  }
  return true;
}

bool wilf_holds(NumericalSemigroup const& s) {
  return static_cast<long long>(s.embedding_dimension()) * s.left_count() >= s.conductor();
}

}  // namespace

LeafReductionReport leaf_reduction_check(TreeKind kind, int g, int n, LeafReductionOptions const& options) {
  check_tree_params(kind, g, n);
  LeafReductionReport r;
  r.kind = kind;
  r.genus = g;
  r.left = n;
  if (options.skip_precertified && class_precertified(g, n)) {
    r.skipped = true;
    r.certified = true;
    return r;
  }
  BuildOptions build;
  build.leaves_only = true;
  build.threads = options.threads;
  auto tree = build_tree(kind, g, n, build);
  for (auto const& node : tree.nodes) {
    auto const& leaf = node.semigroup;
    ++r.leaves_checked;
    if (!wilf_holds(leaf)) r.violations.push_back(leaf);
    if (kind == TreeKind::A && full_interval(leaf) && in_domain(leaf, TransformKind::A)) {
      auto image = transform_a(leaf);
      ++r.images_checked;
      if (!wilf_holds(image)) r.violations.push_back(image);
    }
  }
  r.certified = r.violations.empty();
  if (g <= options.brute_force_limit) {
    std::size_t nodes = 0;
    bool all_hold = true;
    visit_tree(kind, g, n, [&](NumericalSemigroup const& s, int, bool) {
      ++nodes;
      all_hold = all_hold && wilf_holds(s);
    });
    r.brute_force_nodes = nodes;
    r.brute_force_agrees = all_hold == r.certified;
  }
  return r;
}

Json to_json(EliahouRecord const& r) {
  Json j;
  j["E"] = r.value;
  j["q"] = r.q;
  j["rho"] = r.rho;
  j["Q_size"] = r.q_set.size();
  j["D_size"] = r.d_set.size();
  j["Q"] = r.q_set;
  j["D"] = r.d_set;
  return j;
}

Json to_json(WilfRecord const& r) {
  Json j;
  j["e"] = r.e;
  j["n"] = r.n;
  j["F"] = r.frobenius;
  j["g"] = r.genus;
  j["wilf_holds"] = r.wilf_holds;
  j["eliahou"] = r.eliahou ? to_json(*r.eliahou) : Json(nullptr);
  return j;
}

Json to_json(LeafReductionReport const& r) {
  Json j;
  j["kind"] = std::string(name(r.kind));
  j["genus"] = r.genus;
  j["left"] = r.left;
  j["skipped"] = r.skipped;
  j["leaves_checked"] = r.leaves_checked;
  j["images_checked"] = r.images_checked;
  Json bad = Json::array();
  for (auto const& s : r.violations) bad.push_back(s.minimal_generators());
  j["violations"] = std::move(bad);
  j["certified"] = r.certified;
  j["brute_force_nodes"] = r.brute_force_nodes ? Json(*r.brute_force_nodes) : Json(nullptr);
  j["brute_force_agrees"] = r.brute_force_agrees ? Json(*r.brute_force_agrees) : Json(nullptr);
  return j;
}

Json to_json(Finding const& f) {
  Json j;
  j["genus"] = f.genus;
  j["left"] = f.left;
  j["generators"] = f.generators;
  j["e"] = f.e;
  j["n"] = f.n;
  j["F"] = f.frobenius;
  j["E"] = f.eliahou;
  j["wilf_holds"] = f.wilf_holds;
  return j;
}

Json to_json(ScanReport const& r) {
  Json j;
  j["max_genus"] = r.max_genus;
  j["min_genus"] = r.min_genus;
  j["eliahou_only"] = r.eliahou_only;
  j["leaf_strategy"] = r.leaf_strategy;
  Json per = Json::array();
  for (std::size_t g = 0; g < r.counts.size(); ++g) {
    std::uint64_t total = 0;
    for (auto c : r.counts[g]) total += c;
    per.push_back(total);
  }
  j["count_by_genus"] = std::move(per);
  j["scanned"] = r.scanned;
  j["wilf_checked"] = r.wilf_checked;
  j["wilf_violations"] = r.wilf_violations;
  j["negative_eliahou"] = r.negative_eliahou;
  j["eliahou_inconsistent"] = r.eliahou_inconsistent;
  j["min_negative_genus"] = r.min_negative_genus ? Json(*r.min_negative_genus) : Json(nullptr);
  j["findings"] = r.findings.size();
  j["findings_truncated"] = r.findings_truncated;
  if (r.leaf_strategy) {
    Json classes = Json::array();
    for (auto [g, n] : r.classes_checked) classes.push_back(Json::array({g, n}));
    j["classes_checked"] = std::move(classes);
    j["classes_skipped"] = r.classes_skipped;
  }
  return j;
}

}  // namespace numsg
