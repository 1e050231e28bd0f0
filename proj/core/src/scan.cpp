#include <algorithm>
#include <tuple>

#include "numsg/genus_walk.hpp"
#include "numsg/wilf.hpp"

namespace numsg {

namespace {

struct ScanVisitor {
  int min_genus = 0;
  bool full_wilf = true;
  std::size_t max_findings = 0;
  std::vector<std::vector<std::uint64_t>> counts;
  std::uint64_t scanned = 0;
  std::uint64_t wilf_checked = 0;
  std::uint64_t wilf_violations = 0;
  std::uint64_t negative = 0;
  std::uint64_t inconsistent = 0;
  int min_negative_genus = -1;
  std::vector<Finding> findings;
  bool truncated = false;

  void operator()(WalkNode const& node) {
    if (node.genus < min_genus) return;
    const int n = node.left();
    ++counts[static_cast<std::size_t>(node.genus)][static_cast<std::size_t>(n)];
    ++scanned;
    if (node.conductor == 0) {
      ++wilf_checked;  // N: e = n = 1 > F + 1 = 0
      return;
    }
    const long long c = node.conductor;
    const long long m = node.multiplicity;
    const long long q = (c + m - 1) / m;
    const long long rho = q * m - c;
    const long long q_size = node.embedding_dimension - node.high_generators;
    const long long d_size = m - node.high_generators;
    const long long e_value = q_size * n - q * d_size + rho;
    const bool negative_e = e_value < 0;
    bool holds = true;
    if (full_wilf || negative_e) {
      ++wilf_checked;
      holds = static_cast<long long>(node.embedding_dimension) * n >= c;
      if (!holds) ++wilf_violations;
      if (!holds && !negative_e) ++inconsistent;
    }
    if (negative_e) {
      ++negative;
      if (min_negative_genus < 0 || node.genus < min_negative_genus) min_negative_genus = node.genus;
    }
    if (negative_e || !holds) {
      if (findings.size() >= max_findings) {
        truncated = true;
        return;
      }
      findings.push_back(Finding{node.genus, n, node.generators(), node.embedding_dimension, n,
                                 node.frobenius(), e_value, holds});
    }
  }

  void merge(ScanVisitor const& o) {
    for (std::size_t g = 0; g < counts.size(); ++g) {
      for (std::size_t n = 0; n < counts[g].size(); ++n) counts[g][n] += o.counts[g][n];
    }
    scanned += o.scanned;
    wilf_checked += o.wilf_checked;
    wilf_violations += o.wilf_violations;
    negative += o.negative;
    inconsistent += o.inconsistent;
    if (o.min_negative_genus >= 0 && (min_negative_genus < 0 || o.min_negative_genus < min_negative_genus)) {
      min_negative_genus = o.min_negative_genus;
    }
    for (auto const& f : o.findings) {
      if (findings.size() >= max_findings) {
        truncated = true;
        break;
      }
      findings.push_back(f);
    }
    truncated = truncated || o.truncated;
  }
};

}  // namespace

ScanReport scan(int max_genus, ScanOptions const& options) {
  if (max_genus < 0) throw DomainError("scan needs max_genus >= 0");
  ScanVisitor proto;
  proto.min_genus = options.min_genus;
  proto.full_wilf = !options.eliahou_only && !options.leaf_strategy;
  proto.max_findings = options.max_findings;
  proto.counts.assign(static_cast<std::size_t>(max_genus) + 1,
                      std::vector<std::uint64_t>(static_cast<std::size_t>(max_genus) + 2, 0));
  auto v = walk_classical_tree(max_genus, options.threads, proto);

  ScanReport r;
  r.max_genus = max_genus;
  r.min_genus = options.min_genus;
  r.eliahou_only = options.eliahou_only;
  r.leaf_strategy = options.leaf_strategy;
  r.counts = std::move(v.counts);
  r.scanned = v.scanned;
  r.wilf_checked = v.wilf_checked;
  r.wilf_violations = v.wilf_violations;
  r.negative_eliahou = v.negative;
  r.eliahou_inconsistent = v.inconsistent;
  r.findings = std::move(v.findings);
  r.findings_truncated = v.truncated;
  if (v.min_negative_genus >= 0) r.min_negative_genus = v.min_negative_genus;

  if (options.leaf_strategy) {
    for (int g = std::max(options.min_genus, 4); g <= max_genus; ++g) {
      for (int n = 2; n <= g; ++n) {
        if (class_precertified(g, n)) {
          ++r.classes_skipped;
          continue;
        }
        LeafReductionOptions lr;
        lr.threads = options.threads;
        lr.brute_force_limit = 0;
        auto report = leaf_reduction_check(TreeKind::B, g, n, lr);
        r.classes_checked.emplace_back(g, n);
        r.wilf_checked += report.leaves_checked;
        for (auto const& s : report.violations) {
          ++r.wilf_violations;
          const int e = s.embedding_dimension();
          r.findings.push_back(Finding{g, n, s.minimal_generators(), e, n, s.frobenius(), eliahou_number(s), false});
        }
      }
    }
  }

  auto key = [](Finding const& f) { return std::tie(f.genus, f.left, f.generators); };
  std::sort(r.findings.begin(), r.findings.end(), [&](Finding const& a, Finding const& b) { return key(a) < key(b); });
  // A semigroup can be reported by both the walk and the leaf pass.
  r.findings.erase(std::unique(r.findings.begin(), r.findings.end(),
                               [&](Finding const& a, Finding const& b) { return key(a) == key(b); }),
                   r.findings.end());
  return r;
}

}  // namespace numsg
