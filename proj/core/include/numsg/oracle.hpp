#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "numsg/semigroup.hpp"

// Slow reference implementations for differential testing. Everything here
// works on an explicit membership table and evaluates definitions literally;
// nothing calls back into the NumericalSemigroup algorithms except the final
// conversion of a result into the canonical encoding.
namespace numsg::oracle {

// Explicit member table over [0, window].
class NaiveSemigroup {
 public:
  explicit NaiveSemigroup(std::vector<char> member);

  int window() const noexcept { return static_cast<int>(member_.size()) - 1; }
  // Throws InternalError for x above the window: a query the window was not
  // sized for is an oracle bug, never a silent "false".
  bool contains(int x) const;
  std::vector<int> members() const;

 private:
  std::vector<char> member_;
};

// Dynamic-programming reachability over [0, window]. NotCofinite when the
// gcd of gens is not 1.
NaiveSemigroup naive_closure(std::span<const int> gens, int window);

// Window 2(F + m) + 2, filled by membership queries only.
NaiveSemigroup naive_from(NumericalSemigroup const& s);

// The following assume the window covers every member query they issue;
// naive_from always satisfies that.
int naive_frobenius(NaiveSemigroup const& s);
int naive_multiplicity(NaiveSemigroup const& s);
std::vector<int> naive_gaps(NaiveSemigroup const& s);
// Members x > 0 in the window with no x = a + b, a, b nonzero members.
std::vector<int> naive_min_generators(NaiveSemigroup const& s);
// Gaps h with 2h a member and h + s a member for every nonzero member s in
// the window.
std::vector<int> naive_special_gaps(NaiveSemigroup const& s);
// Gaps h for which S u {h} is closed under addition inside the window.
std::vector<int> naive_closed_extensions(NaiveSemigroup const& s);
// F - x is a member for every gap x other than F/2.
bool naive_is_irreducible(NaiveSemigroup const& s);

NumericalSemigroup to_semigroup(NaiveSemigroup const& s);

// All numerical semigroups of genus <= genus_max, grown from N by removing
// minimal generators above the Frobenius number (each semigroup has exactly
// one such parent, S u {F}).
struct Population {
  std::vector<std::vector<NumericalSemigroup>> by_genus;

  std::vector<std::size_t> counts() const;
  std::vector<NumericalSemigroup> all() const;
};

Population enumerate_all(int genus_max);

}  // namespace numsg::oracle
