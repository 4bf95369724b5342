#include <doctest.h>

#include <random>

#include "homtqft/exterior.hpp"

using namespace homtqft;

namespace {
const RingTag kZ{RingKind::Integer, 0};
}

TEST_CASE("blade wedge signs") {
  // a1 ^ b1 = +a1b1, b1 ^ a1 = -a1b1, a1 ^ a1 = 0
  auto w = blade_wedge(slot_a(0), slot_b(0));
  REQUIRE(w.has_value());
  CHECK(w->first == 1);
  CHECK(w->second == handle_pair(0));
  auto w2 = blade_wedge(slot_b(0), slot_a(0));
  REQUIRE(w2.has_value());
  CHECK(w2->first == -1);
  CHECK(!blade_wedge(slot_a(0), slot_a(0)).has_value());
}

TEST_CASE("wedge bilinearity and unit") {
  unsigned g = 2;
  MultiVector omega = MultiVector::omega(g, kZ);
  MultiVector sq = wedge(omega, omega);
  // omega^2 = 2 a1b1a2b2 at genus 2
  MultiVector expect =
      MultiVector::blade(g, kZ, handle_pair(0) | handle_pair(1)).scaled(2);
  CHECK(sq == expect);
  MultiVector one = MultiVector::unit(g, kZ);
  MultiVector v = MultiVector::blade(g, kZ, slot_a(1));
  CHECK(wedge(one, v) == v);
  // (a1+a2) ^ (b1+b2) has four terms
  MultiVector s1 = MultiVector::blade(g, kZ, slot_a(0)) +
                   MultiVector::blade(g, kZ, slot_a(1));
  MultiVector s2 = MultiVector::blade(g, kZ, slot_b(0)) +
                   MultiVector::blade(g, kZ, slot_b(1));
  MultiVector pr = wedge(s1, s2);
  CHECK(pr.terms().size() == 4);
  CHECK(ring_eq(pr.coeff(slot_a(0) | slot_b(0)), RingElement(Int(1))));
  // a2 ^ b1: one transposition
  CHECK(ring_eq(pr.coeff(slot_a(1) | slot_b(0)), RingElement(Int(-1))));
}

TEST_CASE("graded commutativity and associativity") {
  unsigned g = 3;
  std::mt19937_64 rng(7);
  auto random_homog = [&](unsigned d) {
    MultiVector v(g, kZ);
    auto blades = [&] {
      std::vector<BladeMask> out;
      for (BladeMask m = 0; m < (1u << (2 * g)); m++)
        if (blade_degree(m) == d) out.push_back(m);
      return out;
    }();
    for (auto m : blades)
      v.add_term(m, Int((long)(rng() % 7) - 3));
    return v;
  };
  for (unsigned du = 0; du <= 3; du++)
    for (unsigned dv = 0; dv <= 3; dv++) {
      MultiVector u = random_homog(du), v = random_homog(dv);
      MultiVector uv = wedge(u, v), vu = wedge(v, u);
      if ((du * dv) % 2 == 1)
        CHECK(uv == -vu);
      else
        CHECK(uv == vu);
    }
  MultiVector a = random_homog(1), b = random_homog(2), c = random_homog(1);
  CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
}

TEST_CASE("lefschetz operators") {
  unsigned g = 3;
  // E(1) = omega
  MultiVector one = MultiVector::unit(g, kZ);
  CHECK(op_E(one) == MultiVector::omega(g, kZ));
  // E on the top blade vanishes
  BladeMask top = (1u << (2 * g)) - 1;
  CHECK(op_E(MultiVector::blade(g, kZ, top)).is_zero());
  // E(a1b1) at g=2: only the a2b2 wedge survives
  {
    MultiVector v = MultiVector::blade(2, kZ, handle_pair(0));
    MultiVector img = op_E(v);
    CHECK(img == MultiVector::blade(2, kZ, handle_pair(0) | handle_pair(1)));
  }
  // F(omega) = g * 1
  CHECK(op_F(MultiVector::omega(g, kZ)) == MultiVector::unit(g, kZ).scaled((long long)g));
  CHECK(op_F(one).is_zero());
  // H scales by degree - g
  CHECK(op_H(one) == one.scaled(-(long long)g));
  CHECK(op_H(MultiVector::blade(2, kZ, handle_pair(0) | handle_pair(1))) ==
        MultiVector::blade(2, kZ, handle_pair(0) | handle_pair(1)).scaled(2));
  // middle degree killed
  MultiVector mid = MultiVector::blade(2, kZ, slot_a(0) | slot_b(1));
  CHECK(op_H(mid).is_zero());
}

TEST_CASE("inner product") {
  unsigned g = 4;
  MultiVector omega = MultiVector::omega(g, kZ);
  CHECK(ring_eq(inner_product(omega, omega), RingElement(Int(4))));
  MultiVector one = MultiVector::unit(g, kZ);
  CHECK(ring_eq(inner_product(one, one), RingElement(Int(1))));
  CHECK(ring_eq(inner_product(MultiVector::blade(g, kZ, slot_a(0)),
                              MultiVector::blade(g, kZ, slot_b(0))),
                RingElement(Int(0))));
}

TEST_CASE("sl2 relations and adjointness on random vectors") {
  std::mt19937_64 rng(11);
  for (unsigned g = 1; g <= 5; g++) {
    MultiVector u(g, kZ), v(g, kZ);
    for (int t = 0; t < 20; t++) {
      BladeMask m = (BladeMask)(rng() % (1u << (2 * g)));
      u.add_term(m, Int((long)(rng() % 9) - 4));
      BladeMask m2 = (BladeMask)(rng() % (1u << (2 * g)));
      v.add_term(m2, Int((long)(rng() % 9) - 4));
    }
    // [E,F]u = EFu - FEu = H u
    CHECK(op_E(op_F(u)) - op_F(op_E(u)) == op_H(u));
    // adjointness <Eu, v> = <u, Fv>
    CHECK(ring_eq(inner_product(op_E(u), v), inner_product(u, op_F(v))));
  }
}
