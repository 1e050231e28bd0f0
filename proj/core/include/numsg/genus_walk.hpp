#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <vector>

#include "numsg/detail/parallel.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

// Exhaustive depth-first walk of the classical semigroup tree: the children
// of S are S \ {x} for the minimal generators x > F(S), so every numerical
// semigroup of genus g appears exactly once at depth g.
//
// Each node carries, for every t in a fixed window, the number of
// decompositions t = a + b with a <= b and a, b in S (0 included). Then t is
// a member iff the count is positive and a minimal generator iff it is 1.
// Removing a generator x subtracts one from t exactly when t - x was a member
// of the parent, which keeps the per-child cost at one pass over the window.

inline constexpr int kWalkMaxGenus = 80;

struct WalkNode {
  static constexpr int kWindow = 256;

  std::array<std::uint8_t, kWindow> dec{};
  int conductor = 0;
  int genus = 0;
  int multiplicity = 1;
  int embedding_dimension = 1;
  int high_generators = 1;  // minimal generators >= conductor

  static WalkNode naturals() {
    WalkNode n;
    for (int t = 0; t < kWindow; ++t) n.dec[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(t / 2 + 1);
    return n;
  }

  bool contains(int x) const { return x >= conductor || (x >= 0 && dec[static_cast<std::size_t>(x)] > 0); }
  bool is_generator(int x) const { return x > 0 && dec[static_cast<std::size_t>(x)] == 1; }
  int frobenius() const { return conductor - 1; }
  int left() const { return conductor == 0 ? 1 : conductor - genus; }

  std::vector<int> generators() const {
    std::vector<int> out;
    for (int x = 1; x < std::max(conductor, 1) + multiplicity; ++x) {
      if (is_generator(x)) out.push_back(x);
    }
    return out;
  }

  NumericalSemigroup to_semigroup() const {
    if (conductor == 0) return NumericalSemigroup::naturals();
    std::vector<int> members;
    for (int x = 0; x < conductor; ++x) {
      if (contains(x)) members.push_back(x);
    }
    return NumericalSemigroup::from_small_elements(members, conductor);
  }
};

// Child S \ {x} of `parent` (x a minimal generator >= conductor). `above`
// is how many of the parent's generators >= conductor exceed x. Counts are
// kept exact below `limit`.
inline void make_child(WalkNode const& parent, int x, int above, int limit, WalkNode& child) {
  std::memcpy(child.dec.data(), parent.dec.data(), WalkNode::kWindow);
  std::uint8_t* __restrict out = child.dec.data();
  std::uint8_t const* __restrict in = parent.dec.data();
  for (int t = x; t < limit; ++t) {
    out[t] = static_cast<std::uint8_t>(in[t] - (in[t - x] != 0 ? 1 : 0));
  }
  child.conductor = x + 1;
  child.genus = parent.genus + 1;
  if (x == parent.multiplicity) {
    // Parent was {0, m, ->} (or N); the child is {0, m + 1, ->}.
    child.multiplicity = parent.multiplicity + 1;
    child.embedding_dimension = child.multiplicity;
    child.high_generators = child.multiplicity;
    return;
  }
  child.multiplicity = parent.multiplicity;
  // Only x + m can turn into a new generator: its decomposition m + x is
  // gone, everything below x + m is untouched, everything above is m + s.
  const int fresh = out[x + parent.multiplicity] == 1 ? 1 : 0;
  child.embedding_dimension = parent.embedding_dimension - 1 + fresh;
  child.high_generators = above + fresh;
}

// Window bound giving exact counts for every node up to max_genus: the
// generators of a genus-g node lie below c + m <= 3g + 1.
inline int walk_limit(int max_genus) { return std::min(3 * max_genus + 2, WalkNode::kWindow); }

// Visits every node of genus <= max_genus below `start` (inclusive), in
// preorder with children in ascending x.
template <class Visitor>
void walk_from(WalkNode const& start, int max_genus, Visitor& visit) {
  const int limit = walk_limit(max_genus);
  std::vector<WalkNode> stack;
  stack.reserve(static_cast<std::size_t>(max_genus + 1) * static_cast<std::size_t>(max_genus + 2));
  stack.push_back(start);
  std::array<int, WalkNode::kWindow> gens{};
  while (!stack.empty()) {
    WalkNode node = stack.back();
    stack.pop_back();
    visit(node);
    if (node.genus >= max_genus) continue;
    int count = 0;
    for (int x = std::max(node.conductor, 1); x < std::max(node.conductor, 1) + node.multiplicity; ++x) {
      if (node.dec[static_cast<std::size_t>(x)] == 1) gens[static_cast<std::size_t>(count++)] = x;
    }
    // Reverse push so children pop in ascending order.
    for (int i = count - 1; i >= 0; --i) {
      stack.emplace_back();
      make_child(node, gens[static_cast<std::size_t>(i)], count - 1 - i, limit, stack.back());
    }
  }
}

// Walks the whole tree up to max_genus. With threads > 1 the tree is cut at
// the first genus with enough nodes, each node there is walked as its own
// shard by a copy of `prototype`, and shard visitors are merged in shard
// order (after the visitor that saw the nodes above the cut). Visitors need
// `void operator()(WalkNode const&)` and `void merge(Visitor const&)`.
template <class Visitor>
Visitor walk_classical_tree(int max_genus, unsigned threads, Visitor const& prototype) {
  if (max_genus < 0) return prototype;
  if (max_genus > kWalkMaxGenus) throw DomainError("walk supports genus <= " + std::to_string(kWalkMaxGenus));
  Visitor head = prototype;
  if (threads <= 1) {
    walk_from(WalkNode::naturals(), max_genus, head);
    return head;
  }
  const int limit = walk_limit(max_genus);
  const std::size_t wanted = static_cast<std::size_t>(threads) * 64;
  std::vector<WalkNode> frontier{WalkNode::naturals()};
  while (frontier.size() < wanted && frontier.front().genus < max_genus) {
    std::vector<WalkNode> next;
    for (auto const& node : frontier) {
      head(node);
      std::vector<int> gens;
      for (int x = std::max(node.conductor, 1); x < std::max(node.conductor, 1) + node.multiplicity; ++x) {
        if (node.dec[static_cast<std::size_t>(x)] == 1) gens.push_back(x);
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        next.emplace_back();
        make_child(node, gens[i], static_cast<int>(gens.size() - 1 - i), limit, next.back());
      }
    }
    frontier = std::move(next);
  }
  std::vector<Visitor> shards(frontier.size(), prototype);
  detail::parallel_for(frontier.size(), threads,
                       [&](std::size_t i) { walk_from(frontier[i], max_genus, shards[i]); });
  for (auto const& s : shards) head.merge(s);
  return head;
}

}  // namespace numsg
