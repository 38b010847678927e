#include "wildclust/local_field.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "wildclust/errors.hpp"

namespace wildclust {

namespace {

// Precision of an exact zero: far beyond anything compared in practice.
constexpr std::int64_t kExactZeroPrec = INT64_MAX / 8;

int ctz128(u128 x) {
  auto lo = static_cast<std::uint64_t>(x);
  if (lo) return std::countr_zero(lo);
  auto hi = static_cast<std::uint64_t>(x >> 64);
  return hi ? 64 + std::countr_zero(hi) : 128;
}

// Raw O_L arithmetic modulo 2^128 on slot vectors.
struct Raw {
  int e, m;
  std::uint32_t modulus;

  explicit Raw(const FieldContext& c) : e(c.e), m(c.m()), modulus(c.k.modulus()) {}

  size_t size() const { return size_t(e) * m; }

  // Reduce a length-(2m-1) convolution by the 0/1 lift of the modulus.
  void reduce_w(std::vector<u128>& a) const {
    for (int d = 2 * m - 2; d >= m; --d) {
      u128 c = a[d];
      if (!c) continue;
      a[d] = 0;
      for (int j = 0; j < m; ++j)
        if ((modulus >> j) & 1u) a[d - m + j] -= c;
    }
  }

  std::vector<u128> mul(const std::vector<u128>& x, const std::vector<u128>& y) const {
    std::vector<u128> acc(size_t(2 * e - 1) * (2 * m - 1), 0);
    const int w = 2 * m - 1;
    for (int i = 0; i < e; ++i) {
      for (int j = 0; j < e; ++j) {
        u128* dst = &acc[size_t(i + j) * w];
        const u128* a = &x[size_t(i) * m];
        const u128* b = &y[size_t(j) * m];
        for (int p = 0; p < m; ++p) {
          if (!a[p]) continue;
          for (int q = 0; q < m; ++q) dst[p + q] += a[p] * b[q];
        }
      }
    }
    std::vector<u128> out(size(), 0);
    std::vector<u128> tmp(w);
    for (int s = 0; s < 2 * e - 1; ++s) {
      std::copy(acc.begin() + size_t(s) * w, acc.begin() + size_t(s + 1) * w, tmp.begin());
      reduce_w(tmp);
      int slot = s < e ? s : s - e;
      int factor = s < e ? 0 : 1;  // pi^e = 2
      for (int p = 0; p < m; ++p) out[size_t(slot) * m + p] += tmp[p] << factor;
    }
    return out;
  }

  // min over slots of e * v2(slot) + i; large sentinel for zero.
  std::int64_t vpi(const std::vector<u128>& y) const {
    std::int64_t best = INT64_MAX;
    for (int i = 0; i < e; ++i) {
      int z = 128;
      for (int p = 0; p < m; ++p) z = std::min(z, ctz128(y[size_t(i) * m + p]));
      if (z < 128) best = std::min<std::int64_t>(best, std::int64_t(e) * z + i);
    }
    return best;
  }

  void mask(std::vector<u128>& y, std::int64_t relprec) const {
    for (int i = 0; i < e; ++i) {
      std::int64_t nb = relprec > i ? (relprec - i + e - 1) / e : 0;
      if (nb >= 128) continue;
      u128 mk = nb == 0 ? u128(0) : ((u128(1) << nb) - 1);
      for (int p = 0; p < m; ++p) y[size_t(i) * m + p] &= mk;
    }
  }

  void shl_bits(std::vector<u128>& y, std::int64_t q) const {
    if (q >= 128) {
      std::fill(y.begin(), y.end(), 0);
      return;
    }
    for (auto& v : y) v <<= q;
  }

  std::vector<u128> mul_pi(const std::vector<u128>& y, std::int64_t k) const {
    std::vector<u128> t = y;
    shl_bits(t, k / e);
    int r = static_cast<int>(k % e);
    if (r == 0) return t;
    std::vector<u128> out(size(), 0);
    for (int j = 0; j < e; ++j) {
      int src = j - r;
      bool wrap = src < 0;
      if (wrap) src += e;
      for (int p = 0; p < m; ++p) {
        u128 v = t[size_t(src) * m + p];
        out[size_t(j) * m + p] = wrap ? (v << 1) : v;
      }
    }
    return out;
  }

  // Exact division by pi^k; y must be divisible and masked (top bits clear).
  std::vector<u128> div_pi(const std::vector<u128>& y, std::int64_t k) const {
    std::vector<u128> t = y;
    std::int64_t q = k / e;
    for (auto& v : t) v = q >= 128 ? 0 : (v >> q);
    int r = static_cast<int>(k % e);
    if (r == 0) return t;
    std::vector<u128> out(size(), 0);
    for (int j = 0; j < e; ++j) {
      int src = j + r;
      bool wrap = src >= e;
      if (wrap) src -= e;
      for (int p = 0; p < m; ++p) {
        u128 v = t[size_t(src) * m + p];
        out[size_t(j) * m + p] = wrap ? (v >> 1) : v;
      }
    }
    return out;
  }
};

}  // namespace

FieldContext FieldContext::with_e(int e2) const {
  FieldContext c = *this;
  c.e = e2;
  return c;
}

FieldContext FieldContext::with_N(int n2) const {
  FieldContext c = *this;
  c.N = n2;
  return c;
}

FieldContext make_field(int m, int e, int N, std::optional<std::uint32_t> modulus) {
  if (m < 1 || m > 16) fail(Errc::UnsupportedDegree, "m must lie in 1..16");
  if (e < 1) fail(Errc::UnsupportedDegree, "e must be positive");
  if (N < 1) fail(Errc::PrecisionExhausted, "N must be positive");
  FieldContext c;
  c.k = GF2m(m, modulus ? *modulus : default_modulus(m));
  c.e = e;
  c.N = N;
  return c;
}

Elem::Elem(const FieldContext& ctx) : ctx_(ctx), shift_(kExactZeroPrec), prec_(kExactZeroPrec),
                                      exact_(true), y_(size_t(ctx.e) * ctx.m(), 0) {}

void Elem::normalize() {
  Raw R(ctx_);
  std::int64_t rel = prec_ - shift_;
  if (rel <= 0) {
    std::fill(y_.begin(), y_.end(), 0);
    shift_ = prec_;
    return;
  }
  R.mask(y_, rel);
  std::int64_t k = R.vpi(y_);
  if (k >= rel) {
    std::fill(y_.begin(), y_.end(), 0);
    shift_ = prec_;
    return;
  }
  if (k > 0) {
    y_ = R.div_pi(y_, k);
    shift_ += k;
  }
  R.mask(y_, prec_ - shift_);
}

Elem Elem::from_int(const FieldContext& ctx, long n) {
  Elem x(ctx);
  if (n == 0) return x;
  x.shift_ = 0;
  x.prec_ = ctx.cap_pi();
  x.y_[0] = static_cast<u128>(static_cast<__int128>(n));
  x.normalize();
  return x;
}

Elem Elem::from_literal(const FieldContext& ctx, const std::vector<std::vector<long>>& lit,
                        std::optional<std::int64_t> prec_pi) {
  Elem x(ctx);
  x.shift_ = 0;
  x.prec_ = std::min(prec_pi ? *prec_pi : ctx.work_prec_pi(), ctx.cap_pi());
  x.exact_ = false;
  for (size_t i = 0; i < lit.size() && i < size_t(ctx.e); ++i)
    for (size_t j = 0; j < lit[i].size() && j < size_t(ctx.m()); ++j)
      x.y_[i * ctx.m() + j] = static_cast<u128>(static_cast<__int128>(lit[i][j]));
  x.normalize();
  return x;
}

Elem Elem::pi_power(const FieldContext& ctx, std::int64_t k) {
  Elem x(ctx);
  std::fill(x.y_.begin(), x.y_.end(), 0);
  x.y_[0] = 1;
  x.shift_ = k;
  x.prec_ = k + ctx.cap_pi();
  return x;
}

Elem Elem::lift(const FieldContext& ctx, ResElem c) {
  Elem x(ctx);
  if (c == 0) return x;
  x.shift_ = 0;
  x.prec_ = ctx.cap_pi();
  for (int j = 0; j < ctx.m(); ++j) x.y_[j] = (c >> j) & 1u;
  x.normalize();
  return x;
}

bool Elem::is_zero() const {
  for (auto v : y_)
    if (v) return false;
  return true;
}

std::int64_t Elem::vpi() const {
  if (is_zero()) fail(Errc::PrecisionExhausted, "element indistinguishable from zero at precision " +
                                                    q_to_string(precision()));
  return shift_;
}

std::optional<Q> Elem::valuation() const {
  if (is_zero()) {
    if (exact_) return std::nullopt;
    fail(Errc::PrecisionExhausted, "element indistinguishable from zero at precision " +
                                       q_to_string(precision()));
  }
  return make_q(shift_, ctx_.e);
}

Q Elem::val() const { return make_q(vpi(), ctx_.e); }

Elem Elem::with_prec_pi(std::int64_t p) const {
  Elem x = *this;
  if (p < x.prec_) {
    x.prec_ = p;
    x.exact_ = false;
    x.normalize();
  }
  return x;
}

Elem Elem::reembed(const FieldContext& bigger) const {
  if (bigger.k != ctx_.k || bigger.e % ctx_.e != 0)
    fail(Errc::InternalInvariantViolation, "re-embedding into an incompatible tower");
  int r = bigger.e / ctx_.e;
  Elem x(bigger);
  if (exact_ && is_zero()) return x;
  x.exact_ = exact_;
  x.shift_ = shift_ * r;
  x.prec_ = prec_ * r;
  const int m = ctx_.m();
  for (int i = 0; i < ctx_.e; ++i)
    for (int p = 0; p < m; ++p) x.y_[size_t(i) * r * m + p] = y_[size_t(i) * m + p];
  return x;
}

Elem Elem::operator-() const {
  Elem x = *this;
  for (auto& v : x.y_) v = -v;
  x.normalize();
  return x;
}

Elem Elem::operator+(const Elem& o) const {
  if (!ctx_.same_tower(o.ctx_)) fail(Errc::InternalInvariantViolation, "mixing towers");
  Raw R(ctx_);
  Elem x(ctx_);
  x.shift_ = std::min(shift_, o.shift_);
  x.prec_ = std::min(prec_, o.prec_);
  x.exact_ = exact_ && o.exact_;
  std::vector<u128> a = shift_ > x.shift_ ? R.mul_pi(y_, shift_ - x.shift_) : y_;
  std::vector<u128> b = o.shift_ > x.shift_ ? R.mul_pi(o.y_, o.shift_ - x.shift_) : o.y_;
  for (size_t i = 0; i < a.size(); ++i) x.y_[i] = a[i] + b[i];
  x.normalize();
  return x;
}

Elem Elem::operator-(const Elem& o) const { return *this + (-o); }

Elem Elem::operator*(const Elem& o) const {
  if (!ctx_.same_tower(o.ctx_)) fail(Errc::InternalInvariantViolation, "mixing towers");
  Raw R(ctx_);
  Elem x(ctx_);
  x.shift_ = shift_ + o.shift_;
  x.prec_ = std::min({prec_ + o.shift_, o.prec_ + shift_, x.shift_ + ctx_.cap_pi()});
  x.exact_ = exact_ && o.exact_;
  x.y_ = R.mul(y_, o.y_);
  x.normalize();
  return x;
}

Elem Elem::inverse() const {
  if (is_zero()) fail(Errc::PrecisionExhausted, "inverting an element indistinguishable from zero");
  Raw R(ctx_);
  std::int64_t rel = prec_ - shift_;
  ResElem r = ctx_.k.inv(unit_residue());
  std::vector<u128> x(R.size(), 0);
  for (int j = 0; j < ctx_.m(); ++j) x[j] = (r >> j) & 1u;
  std::vector<u128> two(R.size(), 0);
  two[0] = 2;
  for (std::int64_t have = 1; have < rel; have *= 2) {
    std::vector<u128> yx = R.mul(y_, x);
    for (size_t i = 0; i < yx.size(); ++i) yx[i] = two[i] - yx[i];
    x = R.mul(x, yx);
  }
  Elem out(ctx_);
  out.exact_ = false;
  out.shift_ = -shift_;
  out.prec_ = -shift_ + rel;
  out.y_ = x;
  out.normalize();
  return out;
}

Elem Elem::operator/(const Elem& o) const { return *this * o.inverse(); }

Elem Elem::mul_pi(std::int64_t k) const {
  Elem x = *this;
  x.shift_ += k;
  x.prec_ += k;
  return x;
}

ResElem Elem::residue() const {
  if (is_zero()) {
    if (prec_ <= 0) fail(Errc::PrecisionExhausted, "residue of an element known only to precision <= 0");
    return 0;
  }
  if (shift_ < 0) fail(Errc::NegativeValuation, "residue of an element of negative valuation");
  if (shift_ > 0) return 0;
  return unit_residue();
}

ResElem Elem::unit_residue() const {
  ResElem r = 0;
  for (int j = 0; j < ctx_.m(); ++j)
    if (static_cast<std::uint64_t>(y_[j]) & 1u) r |= 1u << j;
  return r;
}

std::string Elem::debug() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(pi^" << prec_ << ")";
    return os.str();
  }
  os << "pi^" << shift_ << "*[";
  for (int i = 0; i < ctx_.e; ++i) {
    if (i) os << ";";
    for (int p = 0; p < ctx_.m(); ++p) {
      if (p) os << ",";
      os << static_cast<unsigned long long>(y_[size_t(i) * ctx_.m() + p]);
    }
  }
  os << "]+O(pi^" << prec_ << ")";
  return os.str();
}

ResElem residue(const Elem& x) { return x.residue(); }

Elem lift(const FieldContext& ctx, ResElem c) { return Elem::lift(ctx, c); }

ResElem residue_sqrt(const FieldContext& ctx, ResElem c) { return ctx.k.sqrt(c); }

Elem sqrt_monomial(const FieldContext& ctx, ResElem c, const Q& q) {
  Q half = q * ctx.e / 2;
  if (!q_is_integer(half))
    fail(Errc::ValueGroupGap, "valuation " + q_to_string(q / 2) + " not in the value group of e = " +
                                  std::to_string(ctx.e));
  return Elem::pi_power(ctx, q_to_long(half)) * Elem::lift(ctx, ctx.k.sqrt(c));
}

FieldContext enlarge_ramification(const FieldContext& ctx, int e2) {
  if (e2 % ctx.e != 0) fail(Errc::InternalInvariantViolation, "new ramification must be a multiple");
  return ctx.with_e(e2);
}

std::vector<Elem> reembed_all(const std::vector<Elem>& xs, const FieldContext& bigger) {
  std::vector<Elem> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.reembed(bigger));
  return out;
}

Elem hensel_lift_root(const std::vector<Elem>& h, ResElem r0) {
  if (h.empty()) fail(Errc::ZeroPolynomial, "hensel lift of the zero polynomial");
  const FieldContext& ctx = h[0].ctx();
  auto eval = [&](const Elem& x, bool deriv) {
    Elem acc(ctx);
    for (size_t i = h.size(); i-- > (deriv ? 1 : 0);) {
      Elem c = deriv ? h[i] * Elem::from_int(ctx, static_cast<long>(i)) : h[i];
      acc = acc * x + c;
    }
    return acc;
  };
  Elem r = Elem::lift(ctx, r0);
  if (eval(r, false).residue() != 0) fail(Errc::NotSimpleRoot, "residue is not a root");
  if (eval(r, true).residue() == 0) fail(Errc::NotSimpleRoot, "residue root is not simple");
  const std::int64_t target = ctx.work_prec_pi();
  for (int it = 0; it < 64; ++it) {
    Elem hr = eval(r, false);
    if (hr.is_zero() || hr.vpi() >= target) return r.with_prec_pi(target);
    r = r - hr / eval(r, true);
  }
  fail(Errc::PrecisionExhausted, "Newton iteration did not converge");
}

}  // namespace wildclust
