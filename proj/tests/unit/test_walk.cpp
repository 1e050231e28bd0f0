#include <doctest.h>

#include <set>

#include "numsg/genus_walk.hpp"
#include "numsg/wilf.hpp"
#include "support.hpp"

using namespace numsg;

namespace {

struct Collect {
  std::vector<std::vector<NumericalSemigroup>> by_genus;
  std::size_t mismatches = 0;

  void operator()(WalkNode const& node) {
    auto s = node.to_semigroup();
    by_genus[static_cast<std::size_t>(node.genus)].push_back(s);
    const auto gens = s.minimal_generators();
    const int high =
        static_cast<int>(std::count_if(gens.begin(), gens.end(), [&](int x) { return x >= s.conductor(); }));
    const bool ok = node.conductor == s.conductor() && node.genus == s.genus() &&
                    node.multiplicity == s.multiplicity() && node.left() == s.left_count() &&
                    node.embedding_dimension == s.embedding_dimension() && node.generators() == gens &&
                    (s.is_naturals() || node.high_generators == high);
    if (!ok) ++mismatches;
  }
  void merge(Collect const& o) {
    for (std::size_t g = 0; g < by_genus.size(); ++g) {
      by_genus[g].insert(by_genus[g].end(), o.by_genus[g].begin(), o.by_genus[g].end());
    }
    mismatches += o.mismatches;
  }
};

}  // namespace

TEST_CASE("walk nodes agree with the canonical invariants") {
  Collect proto;
  proto.by_genus.resize(13);
  auto c = walk_classical_tree(12, 1, proto);
  CHECK(c.mismatches == 0);
  auto const& pop = numsg::test::population();
  for (std::size_t g = 0; g <= 12; ++g) {
    std::set<NumericalSemigroup> walked(c.by_genus[g].begin(), c.by_genus[g].end());
    std::set<NumericalSemigroup> want(pop.by_genus[g].begin(), pop.by_genus[g].end());
    CHECK(walked.size() == c.by_genus[g].size());
    CHECK(walked == want);
  }
}

TEST_CASE("parallel walk visits the same nodes in the same merged order") {
  Collect proto;
  proto.by_genus.resize(15);
  auto one = walk_classical_tree(14, 1, proto);
  auto four = walk_classical_tree(14, 4, proto);
  CHECK(four.mismatches == 0);
  for (std::size_t g = 0; g <= 14; ++g) {
    std::set<NumericalSemigroup> a(one.by_genus[g].begin(), one.by_genus[g].end());
    std::set<NumericalSemigroup> b(four.by_genus[g].begin(), four.by_genus[g].end());
    CHECK(a == b);
    CHECK(b.size() == four.by_genus[g].size());
  }
}

TEST_CASE("walk at depth beyond its window is refused") {
  struct Nop {
    void operator()(WalkNode const&) {}
    void merge(Nop const&) {}
  };
  CHECK_THROWS_AS(walk_classical_tree(kWalkMaxGenus + 1, 1, Nop{}), DomainError);
}

TEST_CASE("scan's Eliahou numbers agree with the direct formula") {
  struct Check {
    std::size_t bad = 0;
    void operator()(WalkNode const& node) {
      if (node.conductor == 0) return;
      auto s = node.to_semigroup();
      const long long c = node.conductor;
      const long long m = node.multiplicity;
      const long long q = (c + m - 1) / m;
      const long long value = (node.embedding_dimension - node.high_generators) * static_cast<long long>(node.left()) -
                              q * (m - node.high_generators) + (q * m - c);
      if (value != eliahou_number(s)) ++bad;
    }
    void merge(Check const& o) { bad += o.bad; }
  };
  CHECK(walk_classical_tree(15, 1, Check{}).bad == 0);
}
