#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "numsg/json.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/trees.hpp"

namespace numsg {

// E(S) = |Q| n - q |D| + rho with c = F + 1 = q m - rho, 0 <= rho < m.
// Q: minimal generators strictly below F. D: elements of [c, c + m - 1]
// that are not minimal generators.
struct EliahouRecord {
  long long value = 0;
  int q = 0;
  int rho = 0;
  std::vector<int> q_set;
  std::vector<int> d_set;
};

struct WilfRecord {
  int e = 0;
  int n = 0;
  int frobenius = 0;
  int genus = 0;
  bool wilf_holds = true;  // e n >= F + 1
  std::optional<EliahouRecord> eliahou;  // absent for N
};

// Both forms e n >= F + 1 and (e - 1) n >= g are evaluated; disagreement
// throws InternalError.
WilfRecord wilf_check(NumericalSemigroup const& s);

// DomainError on N.
EliahouRecord eliahou(NumericalSemigroup const& s);
long long eliahou_number(NumericalSemigroup const& s);

// Wilf holds on the whole class once it is known for n <= 12, or 3n >= g.
bool class_precertified(int g, int n);

struct LeafReductionOptions {
  // Return without building the tree when class_precertified(g, n).
  bool skip_precertified = false;
  unsigned threads = 1;
  // Evaluate Wilf on every node when g is at most this.
  int brute_force_limit = 14;
};

struct LeafReductionReport {
  TreeKind kind = TreeKind::A;
  int genus = 0;
  int left = 0;
  bool skipped = false;  // precertified, tree not built
  std::size_t leaves_checked = 0;
  // A trees: images A(L) of leaves L with [F - m + 1, F) inside L.
  std::size_t images_checked = 0;
  std::vector<NumericalSemigroup> violations;
  // True when every checked semigroup satisfies Wilf, which covers the whole
  // (g, n) class.
  bool certified = false;
  std::optional<std::size_t> brute_force_nodes;
  std::optional<bool> brute_force_agrees;
};

LeafReductionReport leaf_reduction_check(TreeKind kind, int g, int n, LeafReductionOptions const& options = {});

struct ScanOptions {
  // Evaluate Wilf only where E(S) < 0 (elsewhere it follows from E >= 0).
  bool eliahou_only = false;
  // Check Wilf per (g, n) class through T'_{g,n} leaves, skipping
  // precertified classes. Implies the per-semigroup Wilf test is reduced as
  // for eliahou_only.
  bool leaf_strategy = false;
  unsigned threads = 1;
  // Statistics and findings only for genus >= min_genus.
  int min_genus = 0;
  std::size_t max_findings = 100000;
};

struct Finding {
  int genus = 0;
  int left = 0;
  std::vector<int> generators;
  int e = 0;
  int n = 0;
  int frobenius = 0;
  long long eliahou = 0;
  bool wilf_holds = true;
};

struct ScanReport {
  int max_genus = 0;
  int min_genus = 0;
  bool eliahou_only = false;
  bool leaf_strategy = false;
  std::vector<std::vector<std::uint64_t>> counts;  // [genus][left]
  std::uint64_t scanned = 0;
  std::uint64_t wilf_checked = 0;
  std::uint64_t wilf_violations = 0;
  std::uint64_t negative_eliahou = 0;
  // Semigroups with E >= 0 that fail Wilf; must stay 0.
  std::uint64_t eliahou_inconsistent = 0;
  std::optional<int> min_negative_genus;
  // Sorted by (genus, left, generators).
  std::vector<Finding> findings;
  bool findings_truncated = false;
  std::vector<std::pair<int, int>> classes_checked;
  std::uint64_t classes_skipped = 0;
};

ScanReport scan(int max_genus, ScanOptions const& options = {});

Json to_json(EliahouRecord const& r);
Json to_json(WilfRecord const& r);
Json to_json(LeafReductionReport const& r);
Json to_json(Finding const& f);
// Summary without the findings list.
Json to_json(ScanReport const& r);

}  // namespace numsg
