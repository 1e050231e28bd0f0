#include "numsg/experiments.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include "numsg/trees.hpp"

namespace numsg {

ChildEdimReport experiment_child_edim(int g, int n, unsigned threads) {
  BuildOptions opts;
  opts.threads = threads;
  auto tree = build_tree(TreeKind::A, g, n, opts);
  ChildEdimReport report;
  report.genus = g;
  report.left = n;
  for (auto const& node : tree.nodes) {
    if (node.children.empty()) continue;
    ChildEdimRow row{node.semigroup, node.semigroup.embedding_dimension(), 0, false};
    row.min_child_e = tree.nodes[node.children.front()].semigroup.embedding_dimension();
    for (auto c : node.children) {
      row.min_child_e = std::min(row.min_child_e, tree.nodes[c].semigroup.embedding_dimension());
    }
    row.has_child_not_above = row.min_child_e <= row.e;
    if (!row.has_child_not_above) report.counterexamples.push_back(node.semigroup);
    report.rows.push_back(std::move(row));
  }
  report.internal_nodes = report.rows.size();
  return report;
}

namespace {

struct Shape {
  std::set<NumericalSemigroup> vertices;
  std::set<NumericalSemigroup> leaves;
  std::map<NumericalSemigroup, NumericalSemigroup> parent;
};

Shape shape_of(SemigroupTree const& tree) {
  Shape s;
  for (auto const& node : tree.nodes) {
    s.vertices.insert(node.semigroup);
    if (node.children.empty()) s.leaves.insert(node.semigroup);
    if (node.parent) s.parent.emplace(node.semigroup, tree.nodes[*node.parent].semigroup);
  }
  return s;
}

}  // namespace

LeafOverlapReport experiment_leaf_overlap(int g, int n, unsigned threads) {
  check_tree_params(TreeKind::A, g, n);
  BuildOptions opts;
  opts.threads = threads;
  auto a = shape_of(build_tree(TreeKind::A, g, n, opts));
  auto b = shape_of(build_tree(TreeKind::B, g, n, opts));
  LeafOverlapReport r;
  r.genus = g;
  r.left = n;
  r.leaves_a = a.leaves.size();
  r.leaves_b = b.leaves.size();
  std::vector<NumericalSemigroup> common;
  std::set_intersection(a.leaves.begin(), a.leaves.end(), b.leaves.begin(), b.leaves.end(),
                        std::back_inserter(common));
  r.common = common.size();
  r.a_in_b = r.common == r.leaves_a;
  r.b_in_a = r.common == r.leaves_b;
  r.same_vertices = a.vertices == b.vertices;
  r.same_edges = r.same_vertices && a.parent == b.parent;
  return r;
}

Json to_json(ChildEdimReport const& report) {
  Json j;
  j["genus"] = report.genus;
  j["left"] = report.left;
  j["internal_nodes"] = report.internal_nodes;
  Json rows = Json::array();
  for (auto const& row : report.rows) {
    Json r;
    r["generators"] = row.node.minimal_generators();
    r["e"] = row.e;
    r["min_child_e"] = row.min_child_e;
    r["has_child_not_above"] = row.has_child_not_above;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  Json bad = Json::array();
  for (auto const& s : report.counterexamples) bad.push_back(s.minimal_generators());
  j["counterexamples"] = std::move(bad);
  return j;
}

Json to_json(LeafOverlapReport const& report) {
  Json j;
  j["genus"] = report.genus;
  j["left"] = report.left;
  j["leaves_a"] = report.leaves_a;
  j["leaves_b"] = report.leaves_b;
  j["common_leaves"] = report.common;
  j["a_leaves_in_b"] = report.a_in_b;
  j["b_leaves_in_a"] = report.b_in_a;
  j["same_vertices"] = report.same_vertices;
  j["same_edges"] = report.same_edges;
  return j;
}

}  // namespace numsg
