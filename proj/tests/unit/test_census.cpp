#include <doctest.h>

#include "numsg/census.hpp"
#include "numsg/experiments.hpp"
#include "numsg/trees.hpp"
#include "support.hpp"

using namespace numsg;

TEST_CASE("census totals for small genus") {
  const std::vector<std::uint64_t> want{1, 2, 4, 7, 12, 23, 39, 67, 118, 204};
  for (int g = 1; g <= 10; ++g) {
    CAPTURE(g);
    auto c = census(g, {CensusMethod::BTrees, CensusMethod::ClassicalOracle, CensusMethod::ClassicalWalk});
    CHECK(c.agree);
    for (auto const& m : c.methods) CHECK(m.total == want[static_cast<std::size_t>(g - 1)]);
  }
}

TEST_CASE("census split by left count") {
  auto c = census(8, {CensusMethod::BTrees, CensusMethod::ClassicalOracle});
  CHECK(c.agree);
  auto const& trees = c.methods[0];
  CHECK(trees.nodes_by_left[4] == 16);
  CHECK(trees.leaves_by_left[4] == 12);
  CHECK(trees.nodes_by_left[1] == 1);

  std::uint64_t symmetric = 0;
  for (auto const& s : numsg::test::population().by_genus[8]) symmetric += is_symmetric(s) ? 1 : 0;
  CHECK(trees.nodes_by_left[8] == symmetric);
  CHECK(build_tree(TreeKind::B, 8, 8).node_count == symmetric);
}

TEST_CASE("genus_counts from one walk") {
  auto counts = genus_counts(15, 1);
  CHECK(counts == std::vector<std::uint64_t>{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857});
  CHECK(genus_counts(15, 4) == counts);
  CHECK(genus_counts(-1, 1).empty());
}

TEST_CASE("census method names") {
  CHECK(parse_census_method("b_trees") == CensusMethod::BTrees);
  CHECK(parse_census_method("oracle") == CensusMethod::ClassicalOracle);
  CHECK(parse_census_method("classical-oracle") == CensusMethod::ClassicalOracle);
  CHECK(parse_census_method("walk") == CensusMethod::ClassicalWalk);
  CHECK_THROWS_AS(parse_census_method("guess"), ParseError);
}

TEST_CASE("census output is stable") {
  auto c = census(6, {CensusMethod::BTrees, CensusMethod::ClassicalOracle});
  auto table = to_table(c);
  CHECK(table.find("methods agree") != std::string::npos);
  auto j = to_json(c);
  CHECK(j["agree"] == true);
  CHECK(j["methods"][0]["total"] == 23);
  CHECK(j["methods"][0]["by_left"].size() == 6);
}

TEST_CASE("child embedding dimension experiment") {
  auto r = experiment_child_edim(8, 4);
  CHECK(r.internal_nodes == 4);  // root, S5, S8, S9
  CHECK(r.rows.size() == 4);
  for (auto const& row : r.rows) CHECK(row.has_child_not_above == (row.min_child_e <= row.e));
  CHECK(r.rows.front().node == almost_ordinary(8, 4));
}

TEST_CASE("leaf overlap experiment") {
  auto r = experiment_leaf_overlap(8, 4);
  CHECK(r.leaves_a == 12);
  CHECK(r.same_vertices);
  CHECK(r.a_in_b == (r.common == r.leaves_a));
  CHECK(r.b_in_a == (r.common == r.leaves_b));
  CHECK_THROWS_AS(experiment_leaf_overlap(8, 7), DomainError);
}
