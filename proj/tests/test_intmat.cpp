#include <doctest.h>

#include "homtqft/intmat.hpp"

using namespace homtqft;

TEST_CASE("integer kernel is saturated") {
  // rows: [2 4 2; 1 2 3] -> kernel generated by (-2, 1, 0)
  ZMat a(2, 3);
  a.at(0, 0) = 2; a.at(0, 1) = 4; a.at(0, 2) = 2;
  a.at(1, 0) = 1; a.at(1, 1) = 2; a.at(1, 2) = 3;
  ZMat k = a.kernel_basis();
  REQUIRE(k.cols() == 1);
  // must be primitive: gcd of entries 1
  Int g = gcd(gcd(k.at(0, 0), k.at(1, 0)), k.at(2, 0));
  CHECK(abs(g) == 1);
  // and actually in the kernel
  ZMat prod = a * k;
  CHECK(prod.is_zero());
}

TEST_CASE("rank and exterior traces") {
  ZMat m(3, 3);
  // [[1,2,0],[0,1,0],[3,0,2]]
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(1, 1) = 1; m.at(2, 0) = 3; m.at(2, 2) = 2;
  CHECK(m.rank_rational() == 3);
  auto e = m.exterior_traces();
  CHECK(e[0] == 1);
  CHECK(e[1] == 4);   // trace
  CHECK(e[3] == 2);   // det
  // e2 = sum of principal 2x2 minors: (1*1-0) + (1*2-0) + (1*2-0) = 5
  CHECK(e[2] == 5);
}

TEST_CASE("smith normal form") {
  ZMat m(2, 2);
  m.at(0, 0) = 2; m.at(0, 1) = 4;
  m.at(1, 0) = 6; m.at(1, 1) = 8;
  auto d = m.smith_diagonal();
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);  // det = -8, |d1*d2| = 8
  ZMat z(2, 3);
  auto dz = z.smith_diagonal();
  CHECK(dz == std::vector<Int>({0, 0}));
}

TEST_CASE("signature of symmetric matrices") {
  ZMat m(3, 3);
  m.at(0, 0) = 2;
  m.at(1, 1) = -3;
  // third row/col zero
  auto s = m.signature_symmetric();
  CHECK(s.pos == 1);
  CHECK(s.neg == 1);
  CHECK(s.zero == 1);
  // hyperbolic plane [[0,1],[1,0]] -> (+1,-1)
  ZMat h(2, 2);
  h.at(0, 1) = 1; h.at(1, 0) = 1;
  auto sh = h.signature_symmetric();
  CHECK(sh.pos == 1);
  CHECK(sh.neg == 1);
  CHECK(sh.zero == 0);
}

TEST_CASE("fp matrices") {
  FpMat m(3, 4, 5);
  m.set(0, 0, 1); m.set(0, 1, 2); m.set(0, 2, 3); m.set(0, 3, 4);
  m.set(1, 0, 2); m.set(1, 1, 4); m.set(1, 2, 6); m.set(1, 3, 8);
  m.set(2, 0, 0); m.set(2, 1, 1); m.set(2, 2, 0); m.set(2, 3, 1);
  CHECK(m.rank() == 2);
  FpMat k = m.kernel_basis();
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  // solve
  FpMat rhs(3, 1, 5);
  rhs.set(0, 0, 1); rhs.set(1, 0, 2); rhs.set(2, 0, 0);
  auto x = m.solve(rhs);
  REQUIRE(x.has_value());
  CHECK((m * *x) == rhs);
  // inconsistent
  rhs.set(1, 0, 3);
  CHECK(!m.solve(rhs).has_value());
}

TEST_CASE("rational solve") {
  ZMat a(2, 2);
  a.at(0, 0) = 2; a.at(0, 1) = 1; a.at(1, 0) = 1; a.at(1, 1) = 1;
  auto sol = solve_rational(a, {{Int(3), Int(2)}});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0][0] == Rat(1));
  CHECK((*sol)[0][1] == Rat(1));
}
