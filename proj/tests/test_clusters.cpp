#include "doctest.h"
#include "fixtures.hpp"
#include "wildclust/clusters.hpp"

using namespace wildclust;
using fixtures::I;

TEST_CASE("tree of the first example") {
  auto cf = fixtures::example1(5);
  ClusterTree t = build_cluster_tree(cf.roots);
  CHECK(t.genus() == 2);
  // whole set, the pair {0, lambda}, five singletons
  REQUIRE(t.size() == 7);
  const Cluster& R = t.node(0);
  CHECK(R.size() == 5);
  CHECK(R.d_plus == Q(0));
  CHECK(!R.d_minus);
  std::vector<int> ev = even_clusters(t);
  REQUIRE(ev.size() == 1);
  const Cluster& s = t.node(ev[0]);
  CHECK(s.members == std::vector<int>{0, 1});
  CHECK(s.d_plus == Q(5));
  CHECK(s.d_minus == Q(0));
  CHECK(s.delta() == Q(5));
  CHECK(t.cluster_at(0, Q(3)) == ev[0]);
  CHECK(t.cluster_at(0, Q(0)) == 0);
  CHECK(t.cluster_at(0, Q(6)) == t.singleton_of(0));
  CHECK(t.node(t.singleton_of(2)).d_minus == Q(0));
  CHECK(t.dist(0, 1) == Q(5));
  CHECK(t.dist(2, 3) == Q(0));
}

TEST_CASE("linked clusters") {
  auto cf = fixtures::example1(5);
  ClusterTree t = build_cluster_tree(cf.roots);
  int s = even_clusters(t)[0];
  CHECK(linked_clusters(Disc{cf.roots[0], Q(3)}, t) == std::vector<int>{s});
  CHECK(linked_clusters(Disc{cf.roots[0], Q(5)}, t).front() == s);
  auto l0 = linked_clusters(Disc{cf.roots[0], Q(0)}, t);
  CHECK(std::find(l0.begin(), l0.end(), 0) != l0.end());
  CHECK(std::find(l0.begin(), l0.end(), s) != l0.end());
  CHECK(linked_clusters(Disc{cf.roots[2], Q(1)}, t) == std::vector<int>{t.singleton_of(2)});
}

TEST_CASE("nested clusters and fractional depths") {
  auto c = make_field(2, 4, 60);
  auto p = [&](long k) { return Elem::pi_power(c, k); };
  std::vector<Elem> roots{I(c, 0), p(3), p(3) + p(9), Elem::lift(c, 1), Elem::lift(c, 2)};
  ClusterTree t = build_cluster_tree(roots);
  auto ev = even_clusters(t);
  REQUIRE(ev.size() == 1);
  CHECK(t.node(ev[0]).members == std::vector<int>{1, 2});
  CHECK(t.node(ev[0]).d_plus == make_q(9, 4));
  CHECK(t.node(ev[0]).d_minus == make_q(3, 4));
  int odd = t.node(ev[0]).parent;
  CHECK(t.node(odd).members == std::vector<int>{0, 1, 2});
  CHECK(t.node(odd).d_minus == Q(0));
}

TEST_CASE("rejected inputs") {
  auto c = make_field(2, 1, 40);
  CHECK_THROWS_AS(build_cluster_tree({I(c, 0), I(c, 1)}), Error);
  CHECK_THROWS_AS(build_cluster_tree({I(c, 0), I(c, 1), I(c, 1)}), Error);
  try {
    build_cluster_tree({I(c, 0), I(c, 1)});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EvenDegreeUnsupported);
  }
}
