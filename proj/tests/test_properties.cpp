// Randomized invariants, 1000 cases each.

#include "doctest.h"
#include "properties.hpp"

using namespace properties;

TEST_CASE("gauss valuation is multiplicative") {
  Result r = gauss_multiplicative(101);
  CHECK(r.bad == 0);
}

TEST_CASE("ultrametric inequality") {
  Result r = ultrametric(102);
  CHECK(r.bad == 0);
  CHECK(r.interesting > 100);
}

TEST_CASE("slopes of the valuation function count roots") {
  Result r = slope_counts_roots(103);
  CHECK(r.bad == 0);
  CHECK(r.interesting > 100);
}

TEST_CASE("good decomposition t does not depend on the lifts chosen") {
  Result r = t_unique(104);
  CHECK(r.bad == 0);
  CHECK(r.interesting > 100);
}

TEST_CASE("product of good decompositions") {
  Result r = product_rule(105);
  CHECK(r.bad == 0);
  CHECK(r.interesting > 100);
}

TEST_CASE("threshold is invariant under rescaling the cluster") {
  Result r = scaling_independence(106);
  CHECK(r.bad == 0);
  CHECK(r.interesting > 500);
}

TEST_CASE("odd clusters carry no valid discs") {
  Result r = odd_clusters(107);
  CHECK(r.bad == 0);
  CHECK(r.interesting > 50);
}
