#pragma once

#include <initializer_list>
#include <vector>

#include "numsg/oracle.hpp"
#include "numsg/semigroup.hpp"

namespace numsg::test {

inline NumericalSemigroup gens(std::initializer_list<int> g) {
  std::vector<int> v(g);
  return NumericalSemigroup::from_generators(v);
}

inline NumericalSemigroup small(std::initializer_list<int> members, int conductor) {
  std::vector<int> v(members);
  return NumericalSemigroup::from_small_elements(v, conductor);
}

inline NumericalSemigroup gaps(std::initializer_list<int> h) {
  std::vector<int> v(h);
  return NumericalSemigroup::from_gaps(v);
}

// Every semigroup of genus <= 12, built once per test binary.
inline oracle::Population const& population() {
  static const oracle::Population pop = oracle::enumerate_all(12);
  return pop;
}

inline std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

}  // namespace numsg::test
