#include "doctest.h"
#include "wildclust/errors.hpp"
#include "wildclust/local_field.hpp"
#include "wildclust/valpoly.hpp"

using namespace wildclust;

TEST_CASE("make_field basics") {
  auto c = make_field(1, 1, 20);
  CHECK(c.v_pi() == 1);
  CHECK(make_field(1, 2, 20).v_pi() == make_q(1, 2));
  auto c3 = make_field(3, 1, 20);
  // x^3 + x^2 + 1 has a root in F_8
  ResPoly p{1, 0, 1, 1};
  int roots = 0;
  for (ResElem r = 0; r < 8; ++r) roots += eval(c3.k, p, r) == 0;
  CHECK(roots == 3);
  CHECK_THROWS_AS(make_field(17, 1, 20), Error);
  try {
    make_field(2, 1, 20, 0b101);  // x^2 + 1 = (x + 1)^2
    FAIL("accepted a reducible presentation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReduciblePresentation);
  }
}

TEST_CASE("valuation examples") {
  auto c1 = make_field(1, 1, 20);
  CHECK(Elem::from_int(c1, 2).val() == 1);
  CHECK(Elem::from_int(c1, 12).val() == 2);
  auto c2 = make_field(1, 2, 20);
  CHECK(Elem::pi_power(c2, 1).val() == make_q(1, 2));
  Elem x = Elem::from_int(c2, 3) * Elem::pi_power(c2, 3);
  CHECK(x.val() == make_q(3, 2));
  CHECK_FALSE(Elem(c1).valuation().has_value());
  Elem z = Elem::from_literal(c1, {{4}}, 2);  // 4 known mod 2^2
  CHECK(z.is_zero());
  CHECK_THROWS_AS(z.valuation(), Error);
}

TEST_CASE("residue and lift") {
  auto c1 = make_field(1, 1, 20);
  CHECK(residue(Elem::from_int(c1, 3)) == 1);
  CHECK(residue(Elem::from_int(c1, 2)) == 0);
  auto c3 = make_field(3, 1, 20);
  for (ResElem g = 0; g < 8; ++g) {
    CHECK(residue(lift(c3, g)) == g);
    CHECK(residue(lift(c3, g) * lift(c3, g)) == c3.k.sqr(g));
  }
  auto c2 = make_field(1, 2, 20);
  try {
    Elem::pi_power(c2, -1).residue();
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NegativeValuation);
  }
}

TEST_CASE("residue_sqrt") {
  for (int m = 1; m <= 16; ++m) {
    auto c = make_field(m, 1, 10);
    for (ResElem x : {0u, 1u, 2u, (1u << m) - 1, (1u << m) / 3 + 1}) {
      x &= (1u << m) - 1;
      ResElem s = residue_sqrt(c, x);
      CHECK(c.k.sqr(s) == x);
    }
  }
  auto c3 = make_field(3, 1, 10);
  CHECK(residue_sqrt(c3, 1) == 1);
  CHECK(residue_sqrt(c3, 0) == 0);
  ResElem g = 2;
  CHECK(residue_sqrt(c3, g) == c3.k.pow(g, 4));
}

TEST_CASE("sqrt_monomial") {
  auto c1 = make_field(1, 1, 20);
  CHECK(sqrt_monomial(c1, 1, 2).congruent(Elem::from_int(c1, 2)));
  auto c2 = make_field(1, 2, 20);
  CHECK(sqrt_monomial(c2, 1, 1).congruent(Elem::pi_power(c2, 1)));
  CHECK_THROWS_AS(sqrt_monomial(c1, 1, 1), Error);
  auto c3 = make_field(3, 1, 20);
  for (ResElem g = 1; g < 8; ++g) {
    Elem d = sqrt_monomial(c3, g, 0);
    // d^2 = lift(g) mod 2
    CHECK((d * d - lift(c3, g)).vpi_bound() >= 1);
  }
}

TEST_CASE("arithmetic against integers") {
  auto c = make_field(1, 1, 40);
  for (long a = -20; a <= 20; ++a)
    for (long b = -7; b <= 7; ++b) {
      Elem x = Elem::from_int(c, a), y = Elem::from_int(c, b);
      CHECK((x + y).congruent(Elem::from_int(c, a + b)));
      CHECK((x * y).congruent(Elem::from_int(c, a * b)));
      if (b != 0 && a != 0) CHECK(((x * y) / y).congruent(x));
    }
}

TEST_CASE("ramified arithmetic") {
  auto c = make_field(2, 3, 30);
  Elem pi = Elem::pi_power(c, 1);
  CHECK((pi * pi * pi).congruent(Elem::from_int(c, 2)));
  Elem u = Elem::from_literal(c, {{1, 1}, {0, 1}, {1}});
  CHECK(u.val() == 0);
  CHECK((u * u.inverse()).congruent(Elem::from_int(c, 1)));
  Elem w = u * Elem::pi_power(c, 5);
  CHECK(w.val() == make_q(5, 3));
  CHECK(w.mul_pi(-5).congruent(u));
}

TEST_CASE("enlarge_ramification") {
  auto c1 = make_field(1, 1, 20);
  auto c2 = enlarge_ramification(c1, 2);
  Elem two = Elem::from_int(c1, 2).reembed(c2);
  CHECK(two.congruent(Elem::pi_power(c2, 2)));
  CHECK(enlarge_ramification(c2, 2) == c2);
  auto c3 = make_field(2, 3, 30);
  auto c6 = enlarge_ramification(c3, 6);
  for (int i = 0; i < 10; ++i) {
    Elem x = Elem::from_literal(c3, {{i + 1, i}, {i % 3, 1}, {0, i}}) * Elem::pi_power(c3, i);
    Elem y = x.reembed(c6);
    CHECK(y.val() == x.val());
    CHECK((y * y).congruent((x * x).reembed(c6)));
  }
}

TEST_CASE("hensel_lift_root") {
  auto c = make_field(1, 1, 30);
  auto I = [&](long n) { return Elem::from_int(c, n); };
  // x - 5
  CHECK(hensel_lift_root(ValPoly(c, {I(-5), I(1)}), 1).congruent(I(5)));
  // x^2 - 9 has a double root mod 2: not residue-simple
  CHECK_THROWS_AS(hensel_lift_root(ValPoly(c, {I(-9), I(0), I(1)}), 1), Error);
  // x^2 + x - 6 = (x - 2)(x + 3)
  Elem r = hensel_lift_root(ValPoly(c, {I(-6), I(1), I(1)}), 1);
  CHECK(r.congruent(I(-3)));
  auto c3 = make_field(3, 1, 30);
  ValPoly h(c3, {Elem::from_int(c3, 1), Elem::from_int(c3, -4), Elem::from_int(c3, 1), Elem::from_int(c3, 1)});
  ResPoly red{1, 0, 1, 1};
  int found = 0;
  for (ResElem g = 0; g < 8; ++g) {
    if (eval(c3.k, red, g) != 0) continue;
    Elem root = hensel_lift_root(h, g);
    Elem hv = h.eval(root);
    CHECK((hv.is_zero() || hv.vpi() >= c3.work_prec_pi()));
    CHECK(residue(root) == g);
    ++found;
  }
  CHECK(found == 3);
}
