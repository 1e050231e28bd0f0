#include "numsg/trees.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

#include "numsg/detail/parallel.hpp"
#include "numsg/transforms.hpp"

namespace numsg {

std::string_view name(TreeKind kind) { return kind == TreeKind::A ? "A" : "B"; }

TreeKind parse_tree_kind(std::string_view text) {
  if (text == "A" || text == "a") return TreeKind::A;
  if (text == "B" || text == "b") return TreeKind::B;
  throw ParseError("unknown tree kind '" + std::string(text) + "' (expected A or B)");
}

void check_tree_params(TreeKind kind, int g, int n) {
  const int max_left = kind == TreeKind::A ? g - 2 : g;
  if (g <= 3 || n < 2 || n > max_left) {
    throw DomainError(std::string(kind == TreeKind::A ? "T" : "T'") + "_{g,n} needs g > 3 and 2 <= n <= " +
                      (kind == TreeKind::A ? "g-2" : "g") + " (got g=" + std::to_string(g) +
                      ", n=" + std::to_string(n) + ")");
  }
}

namespace {

struct SpecialGapSummary {
  bool irreducible = false;
  int below_frobenius = -1;  // max(SG \ {F}), -1 when SG = {F}
};

SpecialGapSummary summarize(NumericalSemigroup const& u) {
  SpecialGapSummary out;
  auto sg = u.special_gaps();
  for (int x : sg) {
    if (x != u.frobenius()) out.below_frobenius = std::max(out.below_frobenius, x);
  }
  out.irreducible = sg.size() == 1 && sg.front() == u.frobenius();
  return out;
}

// y must lie strictly above F/2 (U irreducible) or above max(SG(U) \ {F}).
bool above_bound(int y, int f, SpecialGapSummary const& sg) {
  return sg.irreducible ? 2 * y > f : y > sg.below_frobenius;
}

void verify_parent([[maybe_unused]] NumericalSemigroup const& child,
                   [[maybe_unused]] NumericalSemigroup const& parent, [[maybe_unused]] TreeKind kind) {
#ifndef NDEBUG
  auto back = kind == TreeKind::A ? transform_a(child) : transform_b(child);
  if (back != parent) {
    throw InternalError("child " + to_string(child) + " does not map back to " + to_string(parent));
  }
#endif
}

}  // namespace

std::vector<Child> children_a(NumericalSemigroup const& t) {
  std::vector<Child> out;
  if (is_ordinary(t)) return out;
  const int f = t.frobenius();
  const int m = t.multiplicity();
  for (int h : t.special_gaps()) {
    if (h >= m) break;
    auto u = add_special_gap(t, h);
    auto sg = summarize(u);
    for (int y : u.minimal_generators()) {
      if (y >= f) break;
      if (y == h || !above_bound(y, f, sg)) continue;
      Child c{remove_minimal_generator(u, y), h, y};
      verify_parent(c.semigroup, t, TreeKind::A);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Child> children_b(NumericalSemigroup const& t) {
  std::vector<Child> out;
  if (is_ordinary(t)) return out;
  const int f = t.frobenius();
  const int m = t.multiplicity();
  const int u = t.sub_frobenius();
  for (int y : t.minimal_generators()) {
    if (y >= f) break;
    if (y <= u) continue;
    auto r = remove_minimal_generator(t, y);
    for (int h : r.special_gaps()) {
      if (h >= m) break;
      Child c{add_special_gap(r, h), h, y};
      verify_parent(c.semigroup, t, TreeKind::B);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Child> children(NumericalSemigroup const& t, TreeKind kind) {
  return kind == TreeKind::A ? children_a(t) : children_b(t);
}

bool leaf_criterion_a(NumericalSemigroup const& t) {
  const int f = t.frobenius();
  const int m = t.multiplicity();
  for (int h : t.special_gaps()) {
    if (h > m) continue;
    auto u = add_special_gap(t, h);
    auto sg = summarize(u);
    for (int y : u.minimal_generators()) {
      if (y == h || y >= f) continue;
      bool below = sg.irreducible ? 2 * y < f : y < sg.below_frobenius;
      if (!below) return false;
    }
  }
  return true;
}

// h = m(T) occurs when y = m(T) is removed from the almost-ordinary root;
// such an h never yields a child, hence >= rather than >.
bool leaf_criterion_b(NumericalSemigroup const& t) {
  if (is_ordinary(t)) return true;
  const int f = t.frobenius();
  const int m = t.multiplicity();
  const int u = t.sub_frobenius();
  for (int y : t.minimal_generators()) {
    if (y < u || y > f) continue;
    auto r = remove_minimal_generator(t, y);
    for (int h : r.special_gaps()) {
      if (h < m) return false;
    }
  }
  return true;
}

bool is_leaf(NumericalSemigroup const& t, TreeKind kind) {
  bool leaf = children(t, kind).empty();
#ifndef NDEBUG
  bool criterion = kind == TreeKind::A ? leaf_criterion_a(t) : leaf_criterion_b(t);
  if (criterion != leaf) throw InternalError("leaf criterion disagrees with child enumeration on " + to_string(t));
#endif
  return leaf;
}

namespace {

struct Subtree {
  std::vector<TreeNode> nodes;  // local indices
  std::size_t count = 0;
  std::size_t leaves = 0;
  int depth = 0;
};

class NodeBudget {
 public:
  explicit NodeBudget(std::optional<std::size_t> max) : max_(max) {}
  void take() {
    std::size_t now = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_ && now > *max_) {
      throw LimitExceeded("tree has more than max_nodes=" + std::to_string(*max_) + " nodes", now);
    }
  }

 private:
  std::optional<std::size_t> max_;
  std::atomic<std::size_t> used_{0};
};

Subtree grow(Child start, int start_depth, TreeKind kind, bool leaves_only, NodeBudget& budget) {
  struct Pending {
    Child c;
    std::optional<std::size_t> parent;
    int depth;
  };
  Subtree out;
  std::vector<Pending> stack;
  stack.push_back({std::move(start), std::nullopt, start_depth});
  while (!stack.empty()) {
    Pending p = std::move(stack.back());
    stack.pop_back();
    budget.take();
    auto kids = children(p.c.semigroup, kind);
    ++out.count;
    out.depth = std::max(out.depth, p.depth);
    if (kids.empty()) ++out.leaves;
    std::optional<std::size_t> self;
    if (!leaves_only || kids.empty()) {
      self = out.nodes.size();
      TreeNode node{std::move(p.c.semigroup), leaves_only ? std::nullopt : p.parent, p.c.h, p.c.y, p.depth, {}};
      out.nodes.push_back(std::move(node));
      if (!leaves_only && p.parent) out.nodes[*p.parent].children.push_back(*self);
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      stack.push_back({std::move(*it), self, p.depth + 1});
    }
  }
  return out;
}

}  // namespace

SemigroupTree build_tree(TreeKind kind, int g, int n, BuildOptions const& options) {
  check_tree_params(kind, g, n);
  SemigroupTree tree;
  tree.kind = kind;
  tree.genus = g;
  tree.left = n;
  tree.leaves_only = options.leaves_only;

  NodeBudget budget(options.max_nodes);
  budget.take();
  auto root = almost_ordinary(g, n);
  auto top = children(root, kind);

  std::vector<Subtree> parts(top.size());
  detail::parallel_for(top.size(), options.threads, [&](std::size_t i) {
    parts[i] = grow(top[i], 1, kind, options.leaves_only, budget);
  });

  tree.node_count = 1;
  tree.leaf_count = top.empty() ? 1 : 0;
  if (!options.leaves_only || top.empty()) {
    tree.nodes.push_back(TreeNode{root, std::nullopt, 0, 0, 0, {}});
  }
  for (auto& part : parts) {
    const std::size_t offset = tree.nodes.size();
    if (!options.leaves_only) tree.nodes.front().children.push_back(offset);
    for (auto& node : part.nodes) {
      if (!options.leaves_only) {
        node.parent = node.parent ? std::optional(*node.parent + offset) : std::optional<std::size_t>(0);
        for (auto& c : node.children) c += offset;
      }
      tree.nodes.push_back(std::move(node));
    }
    tree.node_count += part.count;
    tree.leaf_count += part.leaves;
    tree.depth = std::max(tree.depth, part.depth);
  }
  tree.edge_count = tree.node_count - 1;
  return tree;
}

}  // namespace numsg
