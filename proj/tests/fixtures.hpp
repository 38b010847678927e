#pragma once

// Root configurations shared by the unit, property and acceptance tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "wildclust/clusters.hpp"
#include "wildclust/errors.hpp"
#include "wildclust/local_field.hpp"
#include "wildclust/valpoly.hpp"

namespace fixtures {

using namespace wildclust;

struct Config {
  FieldContext ctx;
  std::vector<Elem> roots;
};

inline Elem I(const FieldContext& c, long n) { return Elem::from_int(c, n); }

// Element of valuation v (v e integral) with unit part 1.
inline Elem of_valuation(const FieldContext& c, const Q& v) {
  Q k = v * c.e;
  check(q_is_integer(k), "valuation outside the value group");
  return Elem::pi_power(c, q_to_long(k));
}

// Residue-simple roots of h (integer coefficients) lifted from every residue root.
inline std::vector<Elem> all_hensel_roots(const FieldContext& c, const std::vector<long>& h) {
  FieldContext unr = c.with_e(1);
  std::vector<Elem> coeffs;
  ResPoly red;
  for (long x : h) {
    coeffs.push_back(Elem::from_int(unr, x));
    red.push_back(static_cast<ResElem>(x & 1));
  }
  ValPoly hp(unr, coeffs);
  std::vector<Elem> out;
  for (ResElem r = 0; r < c.k.size(); ++r)
    if (eval(c.k, red, r) == 0) out.push_back(hensel_lift_root(hp, r).reembed(c));
  return out;
}

// x (x - lambda) (x^3 + x^2 - 4x + 1), v(lambda) = v.
inline Config example1(const Q& v, int N = 60) {
  int e = static_cast<int>(mpz_class(v.get_den()).get_si());
  Config cf{make_field(3, e, N), {}};
  cf.roots.push_back(I(cf.ctx, 0));
  cf.roots.push_back(of_valuation(cf.ctx, v));
  for (auto& r : all_hensel_roots(cf.ctx, {1, -4, 1, 1})) cf.roots.push_back(r);
  return cf;
}

// x (x - lambda) (x^{2g-1} - 1).
inline Config example2(int g, const Q& v, int N = 60) {
  int n = 2 * g - 1;
  int m = 1;
  while (((1L << m) - 1) % n) ++m;
  int e = static_cast<int>(mpz_class(v.get_den()).get_si());
  Config cf{make_field(m, e, N), {}};
  cf.roots.push_back(I(cf.ctx, 0));
  cf.roots.push_back(of_valuation(cf.ctx, v));
  std::vector<long> h(n + 1, 0);
  h[0] = -1;
  h[n] = 1;
  for (auto& r : all_hensel_roots(cf.ctx, h)) cf.roots.push_back(r);
  return cf;
}

// g pairs {c_i, c_i + 2^{delta_i}} and one singleton, all at mutual distance 0.
inline Config example3(const std::vector<Q>& deltas, int N = 60) {
  const int g = static_cast<int>(deltas.size());
  int m = 1;
  while ((1 << m) < g + 1) ++m;
  long e = 1;
  for (const Q& d : deltas) e = lcm_long(e, mpz_class(d.get_den()).get_si());
  Config cf{make_field(m, static_cast<int>(e), N), {}};
  for (int i = 0; i < g; ++i) {
    Elem c = Elem::lift(cf.ctx, static_cast<ResElem>(i));
    cf.roots.push_back(c);
    cf.roots.push_back(c + of_valuation(cf.ctx, deltas[i]));
  }
  cf.roots.push_back(Elem::lift(cf.ctx, static_cast<ResElem>(g)));
  return cf;
}

// Random cluster picture over F_4: relative depths in (0, 8] with denominator
// <= 4, up to four children per cluster, genus 1..max_g.
struct RandomTree {
  std::vector<Q> depth;               // node depth (d_plus)
  std::vector<std::vector<int>> kids;
  std::vector<int> leaf_count;
};

inline Q random_relative_depth(std::mt19937_64& rng, int max_num = 32) {
  std::uniform_int_distribution<int> den(1, 4);
  int d = den(rng);
  std::uniform_int_distribution<int> num(1, std::min(max_num, 8 * d));
  return make_q(num(rng), d);
}

inline Config random_config(std::mt19937_64& rng, int max_g = 4, int max_num = 32, int N = 120) {
  std::uniform_int_distribution<int> gd(1, max_g);
  const int n = 2 * gd(rng) + 1;
  RandomTree t;
  // Build the shape top-down: node -> list of child sizes.
  struct Pending {
    int node, size;
  };
  t.depth.push_back(Q(0));
  t.kids.emplace_back();
  t.leaf_count.push_back(n);
  std::vector<Pending> todo{{0, n}};
  while (!todo.empty()) {
    Pending p = todo.back();
    todo.pop_back();
    if (p.size == 1) continue;
    std::uniform_int_distribution<int> kd(2, std::min(4, p.size));
    int k = kd(rng);
    // random composition of p.size into k positive parts
    std::vector<int> cuts(p.size - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    int prev = 0;
    for (int i = 0; i <= k - 1; ++i) {
      int next = i < k - 1 ? cuts[i] : p.size;
      int sz = next - prev;
      prev = next;
      int id = static_cast<int>(t.depth.size());
      t.depth.push_back(sz > 1 ? t.depth[p.node] + random_relative_depth(rng, max_num) : t.depth[p.node]);
      t.kids.emplace_back();
      t.leaf_count.push_back(sz);
      t.kids[p.node].push_back(id);
      todo.push_back({id, sz});
    }
  }
  long e = 1;
  for (const Q& d : t.depth) e = lcm_long(e, mpz_class(d.get_den()).get_si());
  Config cf{make_field(2, static_cast<int>(e), N), {}};
  std::uniform_int_distribution<int> dig(0, 3);
  std::vector<Elem> centers(t.depth.size(), Elem(cf.ctx));
  centers[0] = Elem::lift(cf.ctx, static_cast<ResElem>(dig(rng)));
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (t.kids[v].empty()) {
      // leaf: perturb below the parent's depth
      Q extra = t.depth[v] + make_q(std::uniform_int_distribution<int>(1, 8)(rng), static_cast<long>(e));
      Elem noise = Elem::lift(cf.ctx, static_cast<ResElem>(dig(rng))) * of_valuation(cf.ctx, extra);
      cf.roots.push_back(centers[v] + noise);
      continue;
    }
    std::vector<ResElem> digits{0, 1, 2, 3};
    std::shuffle(digits.begin(), digits.end(), rng);
    for (size_t i = 0; i < t.kids[v].size(); ++i) {
      int c = t.kids[v][i];
      centers[c] = centers[v] + Elem::lift(cf.ctx, digits[i]) * of_valuation(cf.ctx, t.depth[v]);
      stack.push_back(c);
    }
  }
  return cf;
}

}  // namespace fixtures
