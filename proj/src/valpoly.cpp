#include "wildclust/valpoly.hpp"

#include <algorithm>

#include "wildclust/errors.hpp"

namespace wildclust {

ValPoly::ValPoly(const FieldContext& ctx, std::vector<Elem> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!c.ctx().same_tower(ctx_)) fail(Errc::InternalInvariantViolation, "coefficient from another tower");
}

ValPoly ValPoly::from_roots(const std::vector<Elem>& roots, const Elem& leading) {
  const FieldContext& ctx = leading.ctx();
  std::vector<Elem> c{leading};
  for (const Elem& a : roots) {
    // multiply by (z - a)
    std::vector<Elem> n(c.size() + 1, Elem(ctx));
    for (size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      if (!(a.is_exact() && a.is_zero())) n[i] -= c[i] * a;
    }
    c = std::move(n);
  }
  return ValPoly(ctx, std::move(c));
}

ValPoly ValPoly::from_reciprocal_roots(const FieldContext& ctx, const std::vector<Elem>& us) {
  std::vector<Elem> c{Elem::from_int(ctx, 1)};
  for (const Elem& u : us) {
    std::vector<Elem> n(c.size() + 1, Elem(ctx));
    for (size_t i = 0; i < c.size(); ++i) {
      n[i] += c[i];
      n[i + 1] -= c[i] * u;
    }
    c = std::move(n);
  }
  return ValPoly(ctx, std::move(c));
}

ValPoly ValPoly::monomial(const Elem& c, size_t deg) {
  std::vector<Elem> v(deg + 1, Elem(c.ctx()));
  v[deg] = c;
  return ValPoly(c.ctx(), std::move(v));
}

int ValPoly::degree() const {
  for (size_t i = c_.size(); i-- > 0;)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

ValPoly ValPoly::operator+(const ValPoly& o) const {
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), Elem(ctx_));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return ValPoly(ctx_, std::move(r));
}

ValPoly ValPoly::operator-() const {
  std::vector<Elem> r;
  for (const auto& c : c_) r.push_back(-c);
  return ValPoly(ctx_, std::move(r));
}

ValPoly ValPoly::operator-(const ValPoly& o) const { return *this + (-o); }

ValPoly ValPoly::operator*(const ValPoly& o) const {
  if (c_.empty() || o.c_.empty()) return ValPoly(ctx_);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, Elem(ctx_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_exact() && c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_exact() && o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return ValPoly(ctx_, std::move(r));
}

ValPoly ValPoly::scale(const Elem& c) const {
  std::vector<Elem> r;
  for (const auto& x : c_) r.push_back(x * c);
  return ValPoly(ctx_, std::move(r));
}

Elem ValPoly::eval(const Elem& x) const {
  Elem acc(ctx_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

ValPoly ValPoly::derivative() const {
  std::vector<Elem> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Elem::from_int(ctx_, static_cast<long>(i)));
  return ValPoly(ctx_, std::move(r));
}

ValPoly ValPoly::reembed(const FieldContext& bigger) const {
  return ValPoly(bigger, reembed_all(c_, bigger));
}

Q gauss_valuation(const ValPoly& h) {
  std::optional<Q> best;
  for (const auto& c : h.coeffs()) {
    if (c.is_zero()) continue;
    Q v = c.val();
    if (!best || v < *best) best = v;
  }
  if (!best) fail(Errc::ZeroPolynomial, "Gauss valuation of the zero polynomial");
  return *best;
}

ValPoly taylor_shift(const ValPoly& h, const Elem& alpha) {
  std::vector<Elem> c = h.coeffs();
  if (alpha.is_exact() && alpha.is_zero()) return h;
  const size_t n = c.size();
  for (size_t k = 0; k + 1 < n; ++k)
    for (size_t i = n - 1; i > k; --i) c[i - 1] += c[i] * alpha;
  return ValPoly(h.ctx(), std::move(c));
}

ValPoly transform(const ValPoly& h, const Elem& alpha, const Elem& beta) {
  if (beta.is_zero()) fail(Errc::InternalInvariantViolation, "transform with beta = 0");
  ValPoly s = taylor_shift(h, alpha);
  std::vector<Elem> c = s.coeffs();
  Elem p = Elem::from_int(h.ctx(), 1);
  for (auto& x : c) {
    x *= p;
    p *= beta;
  }
  return ValPoly(h.ctx(), std::move(c));
}

ResPoly normalized_reduction(const ValPoly& h) {
  Q v = gauss_valuation(h);
  std::int64_t k = q_to_long(v * h.ctx().e);
  ResPoly r(h.size(), 0);
  for (size_t i = 0; i < h.size(); ++i) {
    const Elem& c = h.coeffs()[i];
    if (c.is_zero()) continue;
    if (c.vpi() == k) r[i] = c.unit_residue();
  }
  trim(r);
  return r;
}

std::optional<GaussTick> gauss_tick(const ValPoly& p, const Depth& d, std::optional<Q> horizon) {
  std::optional<GaussTick> best;
  std::vector<std::pair<int, Q>> bounds;
  for (size_t i = 0; i < p.size(); ++i) {
    const Elem& c = p.coeffs()[i];
    if (c.is_zero()) {
      if (!c.is_exact()) bounds.emplace_back(static_cast<int>(i), c.precision() + d.b * long(i));
      continue;
    }
    Tick t{c.val() + d.b * long(i), Q(long(i) * d.side)};
    if (!best || t < best->tick) {
      best = GaussTick{t, {static_cast<int>(i)}};
    } else if (t == best->tick) {
      best->active.push_back(static_cast<int>(i));
    }
  }
  for (const auto& [i, bv] : bounds) {
    if (horizon && bv > *horizon) continue;
    if (best && bv > best->tick.value) continue;
    fail(Errc::PrecisionExhausted, "coefficient of degree " + std::to_string(i) +
                                       " vanishes at precision " + q_to_string(bv) +
                                       " (depth-adjusted) which is not enough to decide the Gauss valuation");
  }
  return best;
}

PLFun disc_valuation_fn(const ValPoly& h, const Elem& alpha) {
  ValPoly s = taylor_shift(h, alpha);
  std::vector<std::pair<Q, Q>> lines;
  for (size_t i = 0; i < s.size(); ++i) {
    const Elem& c = s.coeffs()[i];
    if (c.is_zero()) continue;
    lines.emplace_back(Q(long(i)), c.val());
  }
  if (lines.empty()) fail(Errc::ZeroPolynomial, "valuation function of the zero polynomial");
  return PLFun::lower_envelope(lines);
}

std::pair<int, int> reduction_degree_span(const ValPoly& h, const Elem& alpha, const Q& b) {
  auto g = gauss_tick(taylor_shift(h, alpha), Depth{b, 0});
  if (!g) fail(Errc::ZeroPolynomial, "reduction of the zero polynomial");
  auto [lo, hi] = std::minmax_element(g->active.begin(), g->active.end());
  return {*lo, *hi};
}

ValPoly centered_from_roots(const std::vector<Elem>& roots, const Elem& alpha) {
  const FieldContext& ctx = alpha.ctx();
  std::vector<Elem> diffs;
  diffs.reserve(roots.size());
  for (const Elem& a : roots) {
    Elem d = a - alpha;
    diffs.push_back(d.is_zero() ? Elem(ctx) : d);
  }
  return ValPoly::from_roots(diffs, Elem::from_int(ctx, 1));
}

Elem hensel_lift_root(const ValPoly& h, ResElem r0) { return hensel_lift_root(h.coeffs(), r0); }

}  // namespace wildclust
