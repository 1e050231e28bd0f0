#include "numsg/oracle.hpp"

#include <numeric>

namespace numsg::oracle {

NaiveSemigroup::NaiveSemigroup(std::vector<char> member) : member_(std::move(member)) {
  if (member_.empty() || !member_[0]) throw InternalError("oracle semigroup must contain 0");
}

bool NaiveSemigroup::contains(int x) const {
  if (x < 0) return false;
  if (x > window()) {
    throw InternalError("oracle query " + std::to_string(x) + " outside window " + std::to_string(window()));
  }
  return member_[static_cast<std::size_t>(x)] != 0;
}

std::vector<int> NaiveSemigroup::members() const {
  std::vector<int> out;
  for (int x = 0; x <= window(); ++x) {
    if (member_[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

NaiveSemigroup naive_closure(std::span<const int> gens, int window) {
  int g = 0;
  for (int x : gens) {
    if (x <= 0) throw ParseError("generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw NotCofinite(g);
  std::vector<char> member(static_cast<std::size_t>(window) + 1, 0);
  member[0] = 1;
  for (int x = 1; x <= window; ++x) {
    for (int gen : gens) {
      if (gen <= x && member[static_cast<std::size_t>(x - gen)]) member[static_cast<std::size_t>(x)] = 1;
    }
  }
  return NaiveSemigroup(std::move(member));
}

NaiveSemigroup naive_from(NumericalSemigroup const& s) {
  const int window = 2 * (s.frobenius() + s.multiplicity()) + 2;
  std::vector<char> member(static_cast<std::size_t>(window) + 1);
  for (int x = 0; x <= window; ++x) member[static_cast<std::size_t>(x)] = s.contains(x) ? 1 : 0;
  return NaiveSemigroup(std::move(member));
}

int naive_frobenius(NaiveSemigroup const& s) {
  int f = -1;
  for (int x = 0; x <= s.window(); ++x) {
    if (!s.contains(x)) f = x;
  }
  return f;
}

int naive_multiplicity(NaiveSemigroup const& s) {
  for (int x = 1; x <= s.window(); ++x) {
    if (s.contains(x)) return x;
  }
  throw InternalError("oracle window holds no nonzero member");
}

std::vector<int> naive_gaps(NaiveSemigroup const& s) {
  std::vector<int> out;
  for (int x = 1; x <= s.window(); ++x) {
    if (!s.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<int> naive_min_generators(NaiveSemigroup const& s) {
  std::vector<int> out;
  for (int x = 1; x <= s.window(); ++x) {
    if (!s.contains(x)) continue;
    bool sum = false;
    for (int a = 1; a < x && !sum; ++a) sum = s.contains(a) && s.contains(x - a);
    if (!sum) out.push_back(x);
  }
  return out;
}

std::vector<int> naive_special_gaps(NaiveSemigroup const& s) {
  std::vector<int> out;
  for (int h : naive_gaps(s)) {
    bool special = s.contains(2 * h);
    for (int x = 1; special && x + h <= s.window(); ++x) {
      if (s.contains(x) && !s.contains(x + h)) special = false;
    }
    if (special) out.push_back(h);
  }
  return out;
}

std::vector<int> naive_closed_extensions(NaiveSemigroup const& s) {
  std::vector<int> out;
  const int w = s.window();
  for (int h : naive_gaps(s)) {
    auto in = [&](int x) { return x == h || s.contains(x); };
    bool closed = true;
    for (int a = 1; closed && a <= w; ++a) {
      for (int b = a; closed && a + b <= w; ++b) {
        if (in(a) && in(b) && !in(a + b)) closed = false;
      }
    }
    if (closed) out.push_back(h);
  }
  return out;
}

bool naive_is_irreducible(NaiveSemigroup const& s) {
  const int f = naive_frobenius(s);
  if (f < 0) return false;
  for (int x : naive_gaps(s)) {
    if (2 * x == f) continue;
    if (!s.contains(f - x)) return false;
  }
  return true;
}

NumericalSemigroup to_semigroup(NaiveSemigroup const& s) {
  const int conductor = naive_frobenius(s) + 1;
  if (conductor == 0) return NumericalSemigroup::naturals();
  std::vector<int> members;
  for (int x = 0; x < conductor; ++x) {
    if (s.contains(x)) members.push_back(x);
  }
  return NumericalSemigroup::from_small_elements(members, conductor);
}

std::vector<std::size_t> Population::counts() const {
  std::vector<std::size_t> out;
  for (auto const& level : by_genus) out.push_back(level.size());
  return out;
}

std::vector<NumericalSemigroup> Population::all() const {
  std::vector<NumericalSemigroup> out;
  for (auto const& level : by_genus) out.insert(out.end(), level.begin(), level.end());
  return out;
}

namespace {

// S \ {x} for a generator x > F, on a window sized for the child. Positions
// past the parent's window are members: that window extends past c.
NaiveSemigroup drop(NaiveSemigroup const& parent, int x) {
  const int m = naive_multiplicity(parent);
  const int child_m = x == m ? m + 1 : m;
  const int window = 2 * (x + child_m) + 2;
  std::vector<char> member(static_cast<std::size_t>(window) + 1, 1);
  for (int i = 0; i <= window && i <= parent.window(); ++i) {
    member[static_cast<std::size_t>(i)] = parent.contains(i) ? 1 : 0;
  }
  member[static_cast<std::size_t>(x)] = 0;
  return NaiveSemigroup(std::move(member));
}

}  // namespace

Population enumerate_all(int genus_max) {
  Population pop;
  if (genus_max < 0) return pop;
  pop.by_genus.resize(static_cast<std::size_t>(genus_max) + 1);
  std::vector<NaiveSemigroup> level{NaiveSemigroup(std::vector<char>{1, 1, 1})};
  for (int g = 0; g <= genus_max; ++g) {
    std::vector<NaiveSemigroup> next;
    for (auto const& s : level) {
      pop.by_genus[static_cast<std::size_t>(g)].push_back(to_semigroup(s));
      if (g == genus_max) continue;
      const int f = naive_frobenius(s);
      for (int x : naive_min_generators(s)) {
        if (x > f) next.push_back(drop(s, x));
      }
    }
    level = std::move(next);
  }
  return pop;
}

}  // namespace numsg::oracle
