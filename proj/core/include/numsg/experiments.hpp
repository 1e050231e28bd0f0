#pragma once

#include <vector>

#include "numsg/json.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

// Does every non-leaf node of T_{g,n} have a child C with e(C) <= e(node)?
// Reported per node; no answer is assumed.
struct ChildEdimRow {
  NumericalSemigroup node;
  int e = 0;
  int min_child_e = 0;
  bool has_child_not_above = false;
};

struct ChildEdimReport {
  int genus = 0;
  int left = 0;
  std::size_t internal_nodes = 0;
  std::vector<ChildEdimRow> rows;  // internal nodes, tree order
  std::vector<NumericalSemigroup> counterexamples;
};

ChildEdimReport experiment_child_edim(int g, int n, unsigned threads = 1);

// Leaf sets of T_{g,n} (A) and T'_{g,n} (B), compared as sets.
struct LeafOverlapReport {
  int genus = 0;
  int left = 0;
  std::size_t leaves_a = 0;
  std::size_t leaves_b = 0;
  std::size_t common = 0;
  bool a_in_b = false;
  bool b_in_a = false;
  bool same_vertices = false;
  // Same parent for every non-root node.
  bool same_edges = false;
};

LeafOverlapReport experiment_leaf_overlap(int g, int n, unsigned threads = 1);

Json to_json(ChildEdimReport const& report);
Json to_json(LeafOverlapReport const& report);

}  // namespace numsg
