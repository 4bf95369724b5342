#include <doctest.h>

#include "homtqft/rings.hpp"

using namespace homtqft;

TEST_CASE("laurent arithmetic and normal form") {
  LaurentPoly t = LaurentPoly::t(1);
  LaurentPoly p = t + LaurentPoly::t(-1) - LaurentPoly::constant(2);
  CHECK(p.palindromic());
  CHECK(p.eval_one() == 0);
  LaurentPoly q = p * p;
  CHECK(q.coeff(2) == 1);
  CHECK(q.coeff(0) == 6);
  CHECK(q.coeff(-2) == 1);
  CHECK(q.coeff(1) == -4);
  // normalization flips the sign so the top coefficient is positive
  LaurentPoly m = -q;
  CHECK(m.normalized() == q);
}

TEST_CASE("quantum integers") {
  RingElement t = LaurentPoly::t(1);
  RingElement mt = ring_neg(t);
  CHECK(ring_eq(quantum_integer(1, mt), RingElement(LaurentPoly::constant(1))));
  // [2]_{-t} = -t - t^-1
  LaurentPoly expect = -(LaurentPoly::t(1) + LaurentPoly::t(-1));
  CHECK(ring_eq(quantum_integer(2, mt), RingElement(expect)));
  // [3]_q = q^2 + 1 + q^-2
  RingElement q = LaurentPoly::t(1);
  LaurentPoly e3 = LaurentPoly::t(2) + LaurentPoly::constant(1) + LaurentPoly::t(-2);
  CHECK(ring_eq(quantum_integer(3, q), RingElement(e3)));
}

TEST_CASE("mod-p cyclotomic ring basics") {
  // zeta = 1 + y, zeta^5 = 1 in F_5[y]/y^4
  CycModP z = CycModP::zeta(5);
  CHECK(z.pow(5) == CycModP::one(5));
  CHECK(CycModP::zeta_pow(-1, 5) * z == CycModP::one(5));
  // y_expand example: zeta -> (1,1,0,0)
  CHECK(z.coeffs() == std::vector<uint32_t>({1, 1, 0, 0}));
  // unit inverse
  CycModP u = CycModP::one(5) + CycModP::y(5).scaled(3);
  CHECK(u * u.inverse() == CycModP::one(5));
}

TEST_CASE("cyclotomic order-20 ring") {
  Cyc20 a = Cyc20::A_pow(1);
  CHECK(a.pow(20) == Cyc20::one());
  CHECK(a.pow(10) == -Cyc20::one());
  Cyc20 delta = Cyc20::loop_delta();
  CHECK(delta * Cyc20::loop_delta_inv() == Cyc20::one());
  // q = A^4 is a fifth root of unity
  Cyc20 q = Cyc20::A_pow(4);
  CHECK(q.pow(5) == Cyc20::one());
  // 1 + q + q^2 + q^3 + q^4 = 0
  Cyc20 s;
  for (int i = 0; i < 5; i++) s = s + q.pow((unsigned)i);
  CHECK(s.is_zero());
  // exact division round trip
  Cyc20 x = Cyc20::from_int(3) + Cyc20::A_pow(3) - Cyc20::A_pow(14);
  Cyc20 y = Cyc20::from_int(2) - Cyc20::A_pow(5);
  auto ratio = (x * y).divide_exact(y);
  REQUIRE(ratio.has_value());
  CHECK(*ratio == x);
}

TEST_CASE("zeta5 subring coercion and valuation") {
  // A^4k coerces, odd powers do not
  auto z = Cyc20::A_pow(4).to_zeta5();
  REQUIRE(z.has_value());
  CHECK(*z == Cyc5::zeta_pow(1));
  CHECK(!Cyc20::A_pow(1).to_zeta5().has_value());
  // Coercion is a ring map on a product
  Cyc20 u = Cyc20::A_pow(4) + Cyc20::from_int(2);
  Cyc20 v = Cyc20::A_pow(12) - Cyc20::from_int(1);
  auto uv = (u * v).to_zeta5();
  REQUIRE(uv.has_value());
  CHECK(*uv == (Cyc5::zeta_pow(1) + Cyc5::from_int(2)) *
                   (Cyc5::zeta_pow(3) - Cyc5::from_int(1)));

  CHECK(Cyc5::one().valuation() == 0);
  Cyc5 zm1 = Cyc5::zeta_pow(1) - Cyc5::one();
  CHECK((zm1 * zm1).valuation() == 2);
  CHECK(Cyc5::from_int(5).valuation() == 4);
  CHECK(!Cyc5().valuation().has_value());
  // x = zeta - zeta^-1 has valuation 1
  CHECK(Cyc5::x_element().valuation() == 1);
}

TEST_CASE("zeta5 reduction into F5[y]") {
  Cyc5 z = Cyc5::zeta_pow(1);
  CycModP r = z.reduce_mod5();
  CHECK(r == CycModP::zeta(5));
  CHECK(Cyc5::from_int(5).reduce_mod5().is_zero());
}

TEST_CASE("ring element dispatch") {
  RingElement a = Int(3), b = Int(4);
  CHECK(ring_eq(ring_mul(a, b), RingElement(Int(12))));
  CHECK_THROWS_AS(ring_add(a, RingElement(FpScalar(1, 5))), ring_mismatch);
  RingElement f = FpScalar(3, 7);
  CHECK(ring_eq(ring_pow(f, -1), RingElement(FpScalar(5, 7))));
}
