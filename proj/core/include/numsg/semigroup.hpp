#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numsg/errors.hpp"

namespace numsg {

// A numerical semigroup: an additive submonoid of N with finite complement.
//
// Canonical encoding is the conductor c (least element with [c, inf) inside
// S) plus a membership bit-vector over [0, c). Every x >= c is implicitly a
// member. Two semigroups are equal iff their encodings are equal.
//
// Values are immutable after construction; every invariant is computed on
// demand and nothing is cached, so instances may be shared freely between
// threads.
class NumericalSemigroup {
 public:
  // N itself (conductor 0).
  NumericalSemigroup();

  static NumericalSemigroup naturals() { return {}; }

  // members_below must start with 0 and be sorted; every listed member must
  // be below conductor. A trailing run of members just below the conductor
  // is absorbed, so the stored conductor is minimal.
  // Throws MissingZero, ClosureViolation, ParseError (unsorted/out of range).
  static NumericalSemigroup from_small_elements(std::span<const int> members_below,
                                                int conductor);

  // Smallest numerical semigroup containing gens. Throws NotCofinite when
  // gcd(gens) != 1 and ParseError on an empty or non-positive list.
  static NumericalSemigroup from_generators(std::span<const int> gens);

  // Complement given explicitly; must describe a semigroup.
  static NumericalSemigroup from_gaps(std::span<const int> gaps);

  int conductor() const noexcept { return conductor_; }
  bool contains(long long x) const noexcept;

  int frobenius() const noexcept { return conductor_ - 1; }
  int genus() const noexcept;
  int multiplicity() const noexcept;
  // Elements below F, counting 0. n(N) = 1 by convention.
  int left_count() const noexcept;

  std::vector<int> gaps() const;
  // Members in [0, c).
  std::vector<int> small_elements() const;
  std::vector<int> minimal_generators() const;
  int embedding_dimension() const { return static_cast<int>(minimal_generators().size()); }
  std::vector<int> special_gaps() const;
  bool is_special_gap(int h) const;
  bool is_minimal_generator(int x) const;

  // Second largest gap. DomainError when S is ordinary or N.
  int sub_frobenius() const;

  bool is_naturals() const noexcept { return conductor_ == 0; }

  // 64 membership bits starting at pos; negative positions read as absent.
  std::uint64_t member_word(long long pos) const noexcept;

  friend bool operator==(NumericalSemigroup const&, NumericalSemigroup const&) = default;
  // Orders by conductor, then lexicographically by membership words.
  friend bool operator<(NumericalSemigroup const& a, NumericalSemigroup const& b);

  std::size_t hash() const noexcept;

 private:
  NumericalSemigroup(int conductor, std::vector<std::uint64_t> words);

  bool bit(int i) const noexcept { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }

  int conductor_ = 0;
  std::vector<std::uint64_t> words_;
};

// Pair (a, b) of members with a + b below the conductor but missing, if any.
std::optional<std::pair<int, int>> find_closure_violation(std::span<const int> members_below,
                                                          int conductor);

// Raw (unvalidated) element list: members below conductor, plus everything
// from conductor on.
struct ElementList {
  std::vector<int> members_below;
  int conductor = 0;
};

// The set (S u {added}) \ {removed} as a raw list, with no validity check.
// The conductor is widened past `removed` when needed. Feed the result to
// NumericalSemigroup::from_small_elements to validate it.
ElementList modified_elements(NumericalSemigroup const& s, std::optional<int> added,
                              std::optional<int> removed);

// S u {h}; throws NotSpecialGap unless h is a special gap of S.
NumericalSemigroup add_special_gap(NumericalSemigroup const& s, int h);
// S \ {x}; throws NotMinimalGenerator unless x is a minimal generator of S.
NumericalSemigroup remove_minimal_generator(NumericalSemigroup const& s, int x);

// {0, g, g+1, ..., g+n-2, g+n, ->}: genus g, left count n, Frobenius g+n-1.
// Requires g >= 2 and 2 <= n <= g.
NumericalSemigroup almost_ordinary(int g, int n);
// {0, c, ->}. ordinary(0) is N.
NumericalSemigroup ordinary(int c);

bool is_ordinary(NumericalSemigroup const& s);
// Exactly one gap above the multiplicity.
bool is_almost_ordinary(NumericalSemigroup const& s);
// SG(S) = {F(S)}.
bool is_irreducible(NumericalSemigroup const& s);
bool is_symmetric(NumericalSemigroup const& s);
bool is_pseudo_symmetric(NumericalSemigroup const& s);
// No special gap other than F exceeds the multiplicity.
bool is_special(NumericalSemigroup const& s);

// Why a special semigroup is special, most specific first: "ordinary",
// "irreducible", "almost-ordinary". Empty for non-special input.
std::string special_kind(NumericalSemigroup const& s);

struct InvariantReport {
  int conductor = 0;
  int frobenius = -1;
  int genus = 0;
  int multiplicity = 1;
  int left = 1;
  int embedding_dimension = 1;
  std::vector<int> gaps;
  std::vector<int> min_generators;
  std::vector<int> special_gaps;
  std::optional<int> sub_frobenius;
};

InvariantReport report(NumericalSemigroup const& s);

// "{0,5,7,10,12,->}" style, the notation used throughout the literature.
std::string to_string(NumericalSemigroup const& s);
// "<5,7,13,16>"
std::string generators_string(NumericalSemigroup const& s);

}  // namespace numsg

template <>
struct std::hash<numsg::NumericalSemigroup> {
  std::size_t operator()(numsg::NumericalSemigroup const& s) const noexcept { return s.hash(); }
};
