#include "wildclust/psd.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wildclust/errors.hpp"

namespace wildclust {

namespace {

const Q kCeiling(2);

// Recompute rho = h / sigma - q^2 and its tick data.
void refresh(PSD& p) {
  ValPoly hs = p.h.scale(p.sigma.inverse());
  p.rho = hs - p.q * p.q;
  Q horizon = p.h_tick.value + kCeiling;
  auto g = gauss_tick(p.rho, p.at, horizon);
  if (!g || g->tick.value > horizon) {
    p.t.reset();
    p.rho_active.clear();
    return;
  }
  p.t = g->tick - p.h_tick;
  p.rho_active = g->active;
  if (!(*p.t < Tick{kCeiling, 0})) {
    p.t.reset();
    p.rho_active.clear();
  }
}

void enlarge(PSD& p) {
  FieldContext big = enlarge_ramification(p.h.ctx(), p.h.ctx().e * 2);
  p.h = p.h.reembed(big);
  p.q = p.q.reembed(big);
  p.rho = p.rho.reembed(big);
  p.sigma = p.sigma.reembed(big);
}

Elem random_tail(const FieldContext& ctx, std::int64_t at_pi, std::mt19937_64& rng) {
  ResElem c = static_cast<ResElem>(rng() % ctx.k.size());
  return Elem::lift(ctx, c).mul_pi(at_pi);
}

}  // namespace

bool PSD::at_ceiling() const { return !t.has_value(); }

bool PSD::good() const {
  if (at_ceiling()) return true;
  for (int i : rho_active)
    if (i % 2) return true;
  return false;
}

Q PSD::truncated() const { return t ? std::min(t->value, kCeiling) : kCeiling; }

Q PSD::one_sided_slope() const {
  if (!t || at.side == 0) return 0;
  return t->eps * at.side;
}

bool is_square_reduction(const ResPoly& r) {
  for (size_t i = 1; i < r.size(); i += 2)
    if (r[i]) return false;
  return true;
}

PSD trivial_decomposition(const ValPoly& h, const Depth& d) {
  PSD p;
  p.h = h;
  p.at = d;
  auto g = gauss_tick(h, d);
  if (!g) fail(Errc::ZeroPolynomial, "decomposition of the zero polynomial");
  p.h_tick = g->tick;
  p.q = ValPoly(h.ctx());
  p.sigma = Elem::from_int(h.ctx(), 1);
  refresh(p);
  return p;
}

PSD improve_once(const PSD& in, const PsdOptions& opts) {
  if (in.good()) fail(Errc::NotImprovable, "reduction of rho is not a square");
  PSD p = in;
  const std::vector<int> act = p.rho_active;

  // Scalar step: rho reduces to a constant times the reduction of q^2.
  if (!p.q.is_zero()) {
    auto gq = gauss_tick(p.q, p.at);
    if (gq && gq->active.size() == act.size()) {
      bool same = true;
      std::optional<ResElem> kappa;
      std::int64_t kv = 0;
      const GF2m& k = p.h.ctx().k;
      for (size_t j = 0; j < act.size() && same; ++j) {
        int qi = gq->active[j];
        if (act[j] != 2 * qi) {
          same = false;
          break;
        }
        const Elem& r = p.rho.coeffs()[act[j]];
        const Elem& qc = p.q.coeffs()[qi];
        ResElem ratio = k.mul(r.unit_residue(), k.inv(k.sqr(qc.unit_residue())));
        if (kappa && *kappa != ratio) same = false;
        kappa = ratio;
        kv = r.vpi() - 2 * qc.vpi();
      }
      if (same && kappa && kv > 0) {
        Elem one = Elem::from_int(p.h.ctx(), 1);
        p.sigma = p.sigma * (one + Elem::lift(p.h.ctx(), *kappa).mul_pi(kv));
        refresh(p);
        ++p.iterations;
        return p;
      }
    }
  }

  for (;;) {
    bool odd = false;
    for (int i : act)
      if (p.rho.coeffs()[i].vpi() % 2) odd = true;
    if (!odd) break;
    if (p.h.ctx().e * 2 > opts.max_e)
      fail(Errc::IterationCapExceeded, "ramification index would exceed " + std::to_string(opts.max_e));
    enlarge(p);
  }
  const FieldContext& ctx = p.h.ctx();
  ValPoly q1(ctx);
  for (int i : act) {
    const Elem& r = p.rho.coeffs()[i];
    std::int64_t half = r.vpi() / 2;
    Elem d = sqrt_monomial(ctx, r.unit_residue(), make_q(r.vpi(), ctx.e));
    if (opts.jitter) d += random_tail(ctx, half + 1, *opts.jitter);
    q1 = q1 + ValPoly::monomial(d, static_cast<size_t>(i / 2));
  }
  p.q = p.q + q1;
  refresh(p);
  ++p.iterations;
  return p;
}

PSD good_decomposition_at(const ValPoly& h, const Depth& d, const PsdOptions& opts) {
  PSD p = trivial_decomposition(h, d);
  while (!p.good()) {
    if (p.iterations >= opts.max_iterations)
      fail(Errc::IterationCapExceeded, "no good decomposition after " + std::to_string(p.iterations) +
                                           " steps at depth " + q_to_string(d.b) + " (t = " +
                                           q_to_string(p.t->value) + ")");
    Tick before = *p.t;
    p = improve_once(p, opts);
    if (p.t && !(before < *p.t))
      fail(Errc::IterationCapExceeded, "improvement step did not raise t at depth " + q_to_string(d.b));
  }
  return p;
}

Q t_value(const ValPoly& h, const Q& b, const PsdOptions& opts) {
  return good_decomposition_at(h, Depth{b, 0}, opts).truncated();
}

Q t_value(const std::vector<Elem>& roots, const Disc& D, const PsdOptions& opts) {
  return t_value(centered_from_roots(roots, D.center), D.depth, opts);
}

TSample t_sample(const ValPoly& h, const Q& b, const PsdOptions& opts) {
  PSD l = good_decomposition_at(h, Depth{b, -1}, opts);
  PSD r = good_decomposition_at(h, Depth{b, +1}, opts);
  if (l.truncated() != r.truncated())
    fail(Errc::InconsistentSlope, "one-sided t values differ at " + q_to_string(b));
  return TSample{b, l.truncated(), l.one_sided_slope(), r.one_sided_slope()};
}

PLFun t_fun_reconstruct(const ValPoly& h, const Q& lo, const Q& hi, const PsdOptions& opts) {
  if (hi < lo) fail(Errc::InternalInvariantViolation, "empty reconstruction interval");
  std::map<Q, TSample> pts;
  auto sample = [&](const Q& x) -> const TSample& {
    auto it = pts.find(x);
    if (it == pts.end()) it = pts.emplace(x, t_sample(h, x, opts)).first;
    return it->second;
  };
  std::function<void(TSample, TSample, int)> rec = [&](TSample a, TSample b, int depth) {
    if (depth > 200) fail(Errc::InconsistentSlope, "reconstruction does not terminate");
    if (a.right_slope == b.left_slope && b.value - a.value == a.right_slope * (b.x - a.x)) return;
    if (a.right_slope <= b.left_slope)
      fail(Errc::InconsistentSlope, "t is not concave on [" + q_to_string(a.x) + ", " + q_to_string(b.x) + "]");
    Q x = (b.value - a.value + a.right_slope * a.x - b.left_slope * b.x) / (a.right_slope - b.left_slope);
    if (!(a.x < x && x < b.x))
      fail(Errc::InconsistentSlope, "tangent lines meet outside [" + q_to_string(a.x) + ", " + q_to_string(b.x) + "]");
    TSample s = sample(x);
    Q predicted = a.value + a.right_slope * (x - a.x);
    if (s.value == predicted) {
      if (s.left_slope != a.right_slope || s.right_slope != b.left_slope)
        fail(Errc::InconsistentSlope, "slopes at predicted breakpoint " + q_to_string(x) + " disagree");
      return;
    }
    if (s.value > predicted) fail(Errc::InconsistentSlope, "t exceeds its tangent at " + q_to_string(x));
    rec(a, s, depth + 1);
    rec(s, b, depth + 1);
  };
  TSample a = sample(lo);
  if (lo == hi) return PLFun::from_points({lo}, {a.value}, a.left_slope, a.right_slope);
  TSample b = sample(hi);
  rec(a, b, 0);
  std::vector<Q> xs, ys;
  for (const auto& [x, s] : pts) {
    xs.push_back(x);
    ys.push_back(s.value);
  }
  return PLFun::from_points(xs, ys, a.left_slope, b.right_slope);
}

PLFun t_fun_reconstruct(const std::vector<Elem>& roots, const Elem& alpha, const Q& lo, const Q& hi,
                        const PsdOptions& opts) {
  return t_fun_reconstruct(centered_from_roots(roots, alpha), lo, hi, opts);
}

}  // namespace wildclust
