#include <doctest.h>

#include "numsg/transforms.hpp"
#include "numsg/wilf.hpp"
#include "support.hpp"

using namespace numsg;
using numsg::test::gens;

using V = std::vector<int>;

TEST_CASE("Wilf on ordinary semigroups is tight") {
  for (int c = 2; c <= 12; ++c) {
    auto w = wilf_check(ordinary(c));
    CHECK(w.e == c);
    CHECK(w.n == 1);
    CHECK(w.frobenius == c - 1);
    CHECK(w.e * w.n == w.frobenius + 1);
    CHECK(w.wilf_holds);
  }
}

TEST_CASE("Wilf on small examples") {
  auto w = wilf_check(almost_ordinary(8, 4));
  CHECK(w.e == 7);
  CHECK(w.n == 4);
  CHECK(w.wilf_holds);

  auto s = wilf_check(gens({3, 5}));
  CHECK(s.e == 2);
  CHECK(s.n == 4);
  CHECK(s.frobenius == 7);
  CHECK(s.e * s.n == 8);
  CHECK(s.wilf_holds);

  auto n = wilf_check(NumericalSemigroup::naturals());
  CHECK(n.wilf_holds);
  CHECK_FALSE(n.eliahou);
}

TEST_CASE("Eliahou number") {
  auto e = eliahou(almost_ordinary(8, 4));
  CHECK(e.q == 2);
  CHECK(e.rho == 4);
  CHECK(e.q_set == V{8, 9, 10});
  CHECK(e.d_set == V{16, 17, 18, 19});
  CHECK(e.value == 8);
  CHECK(eliahou_number(almost_ordinary(8, 4)) == 8);

  for (int c = 2; c <= 10; ++c) {
    auto o = eliahou(ordinary(c));
    CHECK(o.q == 1);
    CHECK(o.rho == 0);
    CHECK(o.q_set.empty());
    CHECK(o.d_set.empty());
    CHECK(o.value == 0);
  }
  CHECK_THROWS_AS(eliahou(NumericalSemigroup::naturals()), DomainError);
}

TEST_CASE("Eliahou decomposition against a naive recount") {
  for (auto const& s : numsg::test::population().all()) {
    if (s.is_naturals()) continue;
    auto naive = oracle::naive_from(s);
    auto gens_list = oracle::naive_min_generators(naive);
    const int f = oracle::naive_frobenius(naive);
    const int m = oracle::naive_multiplicity(naive);
    int q = 0;
    while (q * m < f + 1) ++q;
    const int rho = q * m - (f + 1);
    V qs, ds;
    for (int x : gens_list) {
      if (x < f) qs.push_back(x);
    }
    for (int x = f + 1; x <= f + m; ++x) {
      if (std::find(gens_list.begin(), gens_list.end(), x) == gens_list.end()) ds.push_back(x);
    }
    const int n = f + 1 - static_cast<int>(oracle::naive_gaps(naive).size());
    auto e = eliahou(s);
    CHECK(e.q == q);
    CHECK(e.rho == rho);
    CHECK(e.q_set == qs);
    CHECK(e.d_set == ds);
    CHECK(e.value == static_cast<long long>(qs.size()) * n - static_cast<long long>(q) * static_cast<long long>(ds.size()) + rho);
    CHECK(0 <= e.rho);
    CHECK(e.rho < m);
  }
}

TEST_CASE("precertified classes") {
  CHECK(class_precertified(40, 12));
  CHECK(class_precertified(39, 13));
  CHECK_FALSE(class_precertified(40, 13));
  CHECK_FALSE(class_precertified(43, 14));
  CHECK(class_precertified(42, 14));
}

TEST_CASE("leaf reduction on T_{8,4} and T'_{8,4}") {
  auto a = leaf_reduction_check(TreeKind::A, 8, 4);
  CHECK_FALSE(a.skipped);
  CHECK(a.leaves_checked == 12);
  CHECK(a.violations.empty());
  CHECK(a.certified);
  REQUIRE(a.brute_force_agrees);
  CHECK(*a.brute_force_agrees);
  CHECK(*a.brute_force_nodes == 16);

  auto b = leaf_reduction_check(TreeKind::B, 8, 4);
  CHECK(b.images_checked == 0);
  CHECK(b.certified);
  CHECK(*b.brute_force_agrees);

  LeafReductionOptions skip;
  skip.skip_precertified = true;
  auto s = leaf_reduction_check(TreeKind::A, 8, 4, skip);
  CHECK(s.skipped);
  CHECK(s.leaves_checked == 0);
  CHECK_THROWS_AS(leaf_reduction_check(TreeKind::A, 8, 7), DomainError);
}

TEST_CASE("A-images are checked for leaves with a full interval") {
  std::size_t images = 0;
  for (int g = 5; g <= 11; ++g) {
    for (int n = 2; n <= g - 2; ++n) {
      auto r = leaf_reduction_check(TreeKind::A, g, n);
      CHECK(r.certified);
      CHECK(*r.brute_force_agrees);
      images += r.images_checked;
    }
  }
  CHECK(images > 0);
}

TEST_CASE("scan up to genus 16") {
  auto r = scan(16);
  CHECK(r.wilf_violations == 0);
  CHECK(r.negative_eliahou == 0);
  CHECK(r.eliahou_inconsistent == 0);
  CHECK(r.findings.empty());
  CHECK(r.scanned == 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204 + 343 + 592 + 1001 + 1693 + 2857 + 4806);
  CHECK(r.wilf_checked == r.scanned);

  ScanOptions threads;
  threads.threads = 3;
  auto r3 = scan(16, threads);
  CHECK(r3.counts == r.counts);
  CHECK(to_json(r3) == to_json(r));

  ScanOptions leaf;
  leaf.leaf_strategy = true;
  auto rl = scan(16, leaf);
  CHECK(rl.classes_checked.empty());  // every class at genus <= 16 is precertified
  CHECK(rl.classes_skipped > 0);
}

TEST_CASE("scan per-class counts match the census") {
  auto r = scan(10);
  auto const& pop = numsg::test::population();
  for (int g = 0; g <= 10; ++g) {
    std::vector<std::uint64_t> by_left(static_cast<std::size_t>(g) + 2, 0);
    for (auto const& s : pop.by_genus[static_cast<std::size_t>(g)]) ++by_left[static_cast<std::size_t>(s.left_count())];
    for (std::size_t n = 0; n < by_left.size(); ++n) CHECK(r.counts[static_cast<std::size_t>(g)][n] == by_left[n]);
  }
}

TEST_CASE("finding JSON layout") {
  Finding f{43, 20, {14, 22, 23}, 3, 20, 62, -1, true};
  auto j = to_json(f);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"genus", "left", "generators", "e", "n", "F", "E", "wilf_holds"});
}
