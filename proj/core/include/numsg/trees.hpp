#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/json.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

// A: tree T_{g,n} over the non-special semigroups with genus g and left
//    count n (plus the root), edges S -> A(S). Needs g > 3, 2 <= n <= g-2.
// B: tree T'_{g,n} over all semigroups with genus g and left count n,
//    edges S -> B(S). Needs g > 3, 2 <= n <= g.
// Both are rooted at the almost-ordinary semigroup S_{g,n}.
enum class TreeKind { A, B };

std::string_view name(TreeKind kind);
TreeKind parse_tree_kind(std::string_view text);

// Throws DomainError when (g, n) is outside the range of `kind`.
void check_tree_params(TreeKind kind, int g, int n);

// One child of a node. For A trees the child is (T u {h}) \ {y}; for B
// trees it is (T \ {y}) u {h}. In both cases h is the child's multiplicity.
struct Child {
  NumericalSemigroup semigroup;
  int h = 0;
  int y = 0;
};

// Children in ascending (h, y) order. Every child C satisfies A(C) = T.
std::vector<Child> children_a(NumericalSemigroup const& t);
// Children in ascending (y, h) order. Every child C satisfies B(C) = T.
std::vector<Child> children_b(NumericalSemigroup const& t);
std::vector<Child> children(NumericalSemigroup const& t, TreeKind kind);

// True iff the node has no children. Checked builds also evaluate the
// explicit leaf criterion below and compare.
bool is_leaf(NumericalSemigroup const& t, TreeKind kind);

// Leaf criteria stated without enumerating children.
// A: every special gap h of T exceeds m(T), or every minimal generator y of
//    T u {h} with y != h, y < F lies below F/2 (T u {h} irreducible) or
//    below max(SG(T u {h}) \ {F}) (otherwise).
// B: no minimal generator y of T in (u(T), F), or for each such y every
//    special gap of T \ {y} is at least m(T).
bool leaf_criterion_a(NumericalSemigroup const& t);
bool leaf_criterion_b(NumericalSemigroup const& t);

struct TreeNode {
  NumericalSemigroup semigroup;
  std::optional<std::size_t> parent;  // index into SemigroupTree::nodes
  int h = 0;                          // edge annotation, meaningless at the root
  int y = 0;
  int depth = 0;
  std::vector<std::size_t> children;
};

struct BuildOptions {
  // Keep only the leaves in `nodes` (no edges); counts still describe the
  // whole tree.
  bool leaves_only = false;
  // Throw LimitExceeded once more nodes than this are generated.
  std::optional<std::size_t> max_nodes;
  unsigned threads = 1;
};

struct SemigroupTree {
  TreeKind kind = TreeKind::A;
  int genus = 0;
  int left = 0;
  bool leaves_only = false;
  // Depth-first preorder, children in generation order; nodes[0] is the root
  // unless leaves_only is set.
  std::vector<TreeNode> nodes;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t leaf_count = 0;
  int depth = 0;

  NumericalSemigroup const& root() const { return nodes.front().semigroup; }
};

// Full tree for (kind, g, n). Subtrees of the root's children are grown in
// parallel and spliced back in order, so the result is identical for every
// thread count.
SemigroupTree build_tree(TreeKind kind, int g, int n, BuildOptions const& options = {});

// Depth-first visit of every node without materialising the tree. The
// visitor gets (semigroup, depth, is_leaf).
template <class Visitor>
void visit_tree(TreeKind kind, int g, int n, Visitor&& visit);

enum class DotLabel { Gaps, Generators };

// Parent -> child edges labelled "h=..,y=.." (A) or "y=..,h=.." (B).
std::string to_dot(SemigroupTree const& tree, DotLabel label = DotLabel::Gaps);

// {"kind","genus","left","node_count","leaf_count","root":{...}} with
// recursive {"semigroup","edge","children"} nodes; leaves-only trees carry
// "leaves":[semigroup...] instead of "root".
Json to_json(SemigroupTree const& tree);

// ---------------------------------------------------------------------------

template <class Visitor>
void visit_tree(TreeKind kind, int g, int n, Visitor&& visit) {
  check_tree_params(kind, g, n);
  struct Frame {
    NumericalSemigroup s;
    int depth;
  };
  std::vector<Frame> stack{{almost_ordinary(g, n), 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    auto kids = children(f.s, kind);
    visit(f.s, f.depth, kids.empty());
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      stack.push_back({std::move(it->semigroup), f.depth + 1});
    }
  }
}

}  // namespace numsg
