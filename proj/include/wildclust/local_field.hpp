#pragma once

// Arithmetic in L = W(F_{2^m})[pi]/(pi^e - 2) with absolute precision tracking.
//
// An element is pi^shift * y with y in O_L stored as e slots of unramified
// coefficients, each an m-vector over Z/2^128. Precision is absolute and counted
// in pi-units; everything at or beyond it is masked to zero so the stored
// representative is always a small exact integer vector.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildclust/gf2m.hpp"
#include "wildclust/rational.hpp"

namespace wildclust {

using u128 = unsigned __int128;

struct FieldContext {
  GF2m k;
  int e = 1;
  int N = 20;  // working precision in v-units (v(2) = 1)

  // Relative precision an element can carry, in v-units.
  static constexpr int kRelCap = 120;

  int m() const { return k.m(); }
  std::int64_t cap_pi() const { return std::int64_t(kRelCap) * e; }
  std::int64_t work_prec_pi() const { return std::int64_t(N < kRelCap ? N : kRelCap) * e; }
  Q v_pi() const { return make_q(1, e); }
  FieldContext with_e(int e2) const;
  FieldContext with_N(int n2) const;
  // Same residue field and ramification: elements may be mixed.
  bool same_tower(const FieldContext& o) const { return e == o.e && k == o.k; }
  bool operator==(const FieldContext& o) const { return same_tower(o) && N == o.N; }
};

// Throws ReduciblePresentation / UnsupportedDegree. modulus defaults to the
// smallest irreducible polynomial of degree m.
FieldContext make_field(int m, int e, int N, std::optional<std::uint32_t> modulus = {});

class Elem {
 public:
  Elem() = default;
  // Exact zero.
  explicit Elem(const FieldContext& ctx);

  static Elem from_int(const FieldContext& ctx, long n);
  // Literal sum_{i<e} a_i pi^i, a_i = sum_{j<m} lit[i][j] t^j; missing entries are 0.
  // Known to precision prec_pi (absolute, pi-units); default is the working precision N.
  static Elem from_literal(const FieldContext& ctx, const std::vector<std::vector<long>>& lit,
                           std::optional<std::int64_t> prec_pi = {});
  static Elem pi_power(const FieldContext& ctx, std::int64_t k);
  // Naive 0/1 lift of a residue-field element.
  static Elem lift(const FieldContext& ctx, ResElem c);

  const FieldContext& ctx() const { return ctx_; }
  bool is_zero() const;
  bool is_exact() const { return exact_; }
  // Valuation in pi-units. Throws PrecisionExhausted for a zero element.
  std::int64_t vpi() const;
  // nullopt means infinity (exact zero). Throws PrecisionExhausted for an inexact zero.
  std::optional<Q> valuation() const;
  Q val() const;  // like valuation() but requires nonzero
  std::int64_t prec_pi() const { return prec_; }
  Q precision() const { return make_q(prec_, ctx_.e); }
  // Lower bound on the valuation: the valuation if nonzero, else the precision.
  std::int64_t vpi_bound() const { return shift_; }

  Elem with_prec_pi(std::int64_t p) const;
  Elem reembed(const FieldContext& bigger) const;

  Elem operator-() const;
  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator/(const Elem& o) const;
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }
  Elem inverse() const;
  Elem mul_pi(std::int64_t k) const;  // exact multiplication by pi^k, k any sign

  // Requires valuation >= 0. Throws NegativeValuation / PrecisionExhausted.
  ResElem residue() const;
  // Residue of x / pi^{v(x)}; nonzero for nonzero x.
  ResElem unit_residue() const;

  // Agreement to the smaller of the two precisions.
  bool congruent(const Elem& o) const { return (*this - o).is_zero(); }

  std::string debug() const;

 private:
  void normalize();

  FieldContext ctx_;
  std::int64_t shift_ = 0;
  std::int64_t prec_ = 0;
  bool exact_ = true;
  std::vector<u128> y_;  // slot i component j at i*m + j
};

ResElem residue(const Elem& x);
Elem lift(const FieldContext& ctx, ResElem c);
ResElem residue_sqrt(const FieldContext& ctx, ResElem c);
// delta with v(delta) = q/2 and delta^2 = lift(c) 2^q modulo higher valuation.
// Throws ValueGroupGap if q/2 is not in (1/e)Z; enlarge first.
Elem sqrt_monomial(const FieldContext& ctx, ResElem c, const Q& q);

// Re-embedding into the tower with ramification e2 (e | e2).
FieldContext enlarge_ramification(const FieldContext& ctx, int e2);
std::vector<Elem> reembed_all(const std::vector<Elem>& xs, const FieldContext& bigger);

// Root of the polynomial with coefficients h (index = degree) lifting r0, by Newton
// iteration. Throws NotSimpleRoot.
Elem hensel_lift_root(const std::vector<Elem>& h, ResElem r0);

}  // namespace wildclust
