#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "numsg/json.hpp"

namespace numsg {

// How a genus census is produced.
//  BTrees          1 (ordinary) + sum over n = 2..g of |T'_{g,n}|; for g <= 3
//                  the trees are undefined and the oracle is used instead.
//  ClassicalOracle the naive f1-reversal enumeration (oracle::enumerate_all).
//  ClassicalWalk   the decomposition-count walk (genus_walk.hpp).
enum class CensusMethod { BTrees, ClassicalOracle, ClassicalWalk };

std::string_view name(CensusMethod method);
CensusMethod parse_census_method(std::string_view text);

struct CensusCounts {
  CensusMethod method = CensusMethod::BTrees;
  // Indexed by left count n, 0..g (index 0 unused).
  std::vector<std::uint64_t> nodes_by_left;
  // Leaves of T'_{g,n} per n; only filled by BTrees for g > 3.
  std::vector<std::uint64_t> leaves_by_left;
  std::uint64_t total = 0;
};

struct CensusSummary {
  int genus = 0;
  std::vector<CensusCounts> methods;
  // True when every method reports the same per-n counts.
  bool agree = true;
  std::vector<int> disagreeing_left;
};

CensusCounts census_counts(int g, CensusMethod method, unsigned threads = 1);

// Runs each method and cross-checks the per-n counts.
CensusSummary census(int g, std::vector<CensusMethod> const& methods, unsigned threads = 1);

// Per-genus totals 0..max_genus from one walk.
std::vector<std::uint64_t> genus_counts(int max_genus, unsigned threads = 1);

Json to_json(CensusSummary const& summary);
// Plain-text table, one row per n plus a total row.
std::string to_table(CensusSummary const& summary);

}  // namespace numsg
