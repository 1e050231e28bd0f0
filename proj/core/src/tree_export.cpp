#include <sstream>

#include "numsg/trees.hpp"

namespace numsg {

namespace {

std::string join(std::vector<int> const& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string label_of(NumericalSemigroup const& s, DotLabel label) {
  if (label == DotLabel::Generators) return "<" + join(s.minimal_generators()) + ">";
  return "H={" + join(s.gaps()) + "}";
}

std::string edge_label(TreeKind kind, TreeNode const& node) {
  auto h = "h=" + std::to_string(node.h);
  auto y = "y=" + std::to_string(node.y);
  return kind == TreeKind::A ? h + "," + y : y + "," + h;
}

Json node_json(SemigroupTree const& tree, std::size_t index) {
  auto const& node = tree.nodes[index];
  Json j;
  j["semigroup"] = to_json(node.semigroup);
  if (node.parent) {
    Json e;
    e["h"] = node.h;
    e["y"] = node.y;
    j["edge"] = std::move(e);
  } else {
    j["edge"] = nullptr;
  }
  Json kids = Json::array();
  for (auto c : node.children) kids.push_back(node_json(tree, c));
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

std::string to_dot(SemigroupTree const& tree, DotLabel label) {
  std::ostringstream os;
  os << "digraph " << (tree.kind == TreeKind::A ? "T" : "Tprime") << "_" << tree.genus << "_" << tree.left
     << " {\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << label_of(tree.nodes[i].semigroup, label) << "\"];\n";
  }
  if (!tree.leaves_only) {
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      for (auto c : tree.nodes[i].children) {
        os << "  n" << i << " -> n" << c << " [label=\"" << edge_label(tree.kind, tree.nodes[c]) << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

Json to_json(SemigroupTree const& tree) {
  Json j;
  j["kind"] = std::string(name(tree.kind));
  j["genus"] = tree.genus;
  j["left"] = tree.left;
  j["node_count"] = tree.node_count;
  j["leaf_count"] = tree.leaf_count;
  if (tree.leaves_only) {
    Json leaves = Json::array();
    for (auto const& n : tree.nodes) leaves.push_back(to_json(n.semigroup));
    j["leaves"] = std::move(leaves);
  } else {
    j["root"] = node_json(tree, 0);
  }
  return j;
}

}  // namespace numsg
