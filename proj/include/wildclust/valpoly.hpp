#pragma once

// Polynomials over a local field, Gauss valuations and reductions at discs.

#include <optional>
#include <utility>
#include <vector>

#include "wildclust/gf2m.hpp"
#include "wildclust/local_field.hpp"
#include "wildclust/plfun.hpp"
#include "wildclust/rational.hpp"

namespace wildclust {

class ValPoly {
 public:
  ValPoly() = default;
  explicit ValPoly(const FieldContext& ctx) : ctx_(ctx) {}
  // coeffs[i] is the coefficient of z^i; all in the same tower.
  ValPoly(const FieldContext& ctx, std::vector<Elem> coeffs);

  // c * prod (z - a).
  static ValPoly from_roots(const std::vector<Elem>& roots, const Elem& leading);
  // prod (1 - u z).
  static ValPoly from_reciprocal_roots(const FieldContext& ctx, const std::vector<Elem>& us);
  static ValPoly monomial(const Elem& c, size_t deg);

  const FieldContext& ctx() const { return ctx_; }
  // Index of the highest coefficient that is nonzero at precision; -1 if none.
  int degree() const;
  size_t size() const { return c_.size(); }
  // Exact zero beyond the stored range.
  Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : Elem(ctx_); }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return degree() < 0; }

  ValPoly operator+(const ValPoly& o) const;
  ValPoly operator-(const ValPoly& o) const;
  ValPoly operator*(const ValPoly& o) const;
  ValPoly operator-() const;
  ValPoly scale(const Elem& c) const;
  Elem eval(const Elem& x) const;
  ValPoly derivative() const;
  ValPoly reembed(const FieldContext& bigger) const;

 private:
  FieldContext ctx_;
  std::vector<Elem> c_;
};

// Throws ZeroPolynomial.
Q gauss_valuation(const ValPoly& h);
// h(z + alpha).
ValPoly taylor_shift(const ValPoly& h, const Elem& alpha);
// h(beta z + alpha).
ValPoly transform(const ValPoly& h, const Elem& alpha, const Elem& beta);
// Reduction of pi^{-e v(h)} h.
ResPoly normalized_reduction(const ValPoly& h);

struct Disc {
  Elem center;
  Q depth;
};

// b, b + eps (side = +1) or b - eps (side = -1) for an infinitesimal eps > 0.
struct Depth {
  Q b;
  int side = 0;
};

// value + eps * infinitesimal; ordered lexicographically.
struct Tick {
  Q value;
  Q eps;
  bool operator<(const Tick& o) const { return value < o.value || (value == o.value && eps < o.eps); }
  bool operator==(const Tick& o) const { return value == o.value && eps == o.eps; }
  bool operator<=(const Tick& o) const { return !(o < *this); }
  Tick operator-(const Tick& o) const { return {value - o.value, eps - o.eps}; }
  Tick operator+(const Tick& o) const { return {value + o.value, eps + o.eps}; }
};

// Gauss valuation of p(z) on the circle v(z) = depth, as a tick, with the
// indices attaining it.
struct GaussTick {
  Tick tick;
  std::vector<int> active;
};
// nullopt when p vanishes identically. Inexact zero coefficients must be
// provably irrelevant below `horizon` (if given) or the call throws PrecisionExhausted.
std::optional<GaussTick> gauss_tick(const ValPoly& p, const Depth& d,
                                    std::optional<Q> horizon = std::nullopt);

// Lower envelope of v(H_i) + i b for H = h(z + alpha). Coefficients that vanish
// at precision are skipped.
PLFun disc_valuation_fn(const ValPoly& h, const Elem& alpha);
// Lowest and highest degree of the normalized reduction of h(beta z + alpha), v(beta) = b.
std::pair<int, int> reduction_degree_span(const ValPoly& h, const Elem& alpha, const Q& b);

// prod (z - (a - alpha)); differences that vanish at precision are taken as exact 0.
ValPoly centered_from_roots(const std::vector<Elem>& roots, const Elem& alpha);

// Root of h lifting r0 (coefficients over the unramified subring).
Elem hensel_lift_root(const ValPoly& h, ResElem r0);

}  // namespace wildclust
