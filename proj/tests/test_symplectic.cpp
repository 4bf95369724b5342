#include <doctest.h>

#include <random>

#include "homtqft/lefschetz.hpp"
#include "homtqft/symplectic.hpp"

using namespace homtqft;

namespace {
const RingTag kZ{RingKind::Integer, 0};

SpMatrix random_word(unsigned g, std::mt19937_64& rng, int len = 5) {
  TwistWord w;
  w.genus = g;
  for (int i = 0; i < len; i++) {
    std::vector<Int> c(2 * g, 0);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : c) {
        long v = (long)(rng() % 3) - 1;
        x = v;
        if (v != 0) nonzero = true;
      }
    }
    long e = (long)(rng() % 2) + 1;
    if (rng() % 2) e = -e;
    w.twists.emplace_back(c, e);
  }
  return word_to_sp(w);
}
}  // namespace

TEST_CASE("transvections are symplectic") {
  // c = a1 at g=1 maps b -> b - a
  std::vector<Int> c = {Int(1), Int(0)};
  SpMatrix t = transvection(c, 1);
  CHECK(t.mat().at(0, 0) == 1);
  CHECK(t.mat().at(0, 1) == -1);
  CHECK(t.mat().at(1, 0) == 0);
  CHECK(t.mat().at(1, 1) == 1);
  // zero curve gives the identity
  std::vector<Int> z = {Int(0), Int(0)};
  CHECK(transvection(z, 1) == SpMatrix::identity(1));
  // T(c) c = c
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; trial++) {
    unsigned g = 1 + (unsigned)(rng() % 3);
    std::vector<Int> cv(2 * g);
    for (auto& x : cv) x = Int((long)(rng() % 5) - 2);
    SpMatrix t2 = transvection(cv, g);  // constructor asserts M^T J M = J
    std::vector<Int> img(2 * g, 0);
    for (unsigned i = 0; i < 2 * g; i++)
      for (unsigned j = 0; j < 2 * g; j++) img[i] += t2.mat().at(i, j) * cv[j];
    CHECK(img == cv);
  }
}

TEST_CASE("twist word parsing and composition") {
  TwistWord w = parse_twist_word(
      "curve = [1,0], exp = 1\n"
      "curve = [0,1], exp = 1\n");
  CHECK(w.genus == 1);
  SpMatrix m = word_to_sp(w);
  CHECK(m.trace() == 1);  // trefoil monodromy
  // word followed by its formal inverse is the identity
  TwistWord winv = w;
  std::reverse(winv.twists.begin(), winv.twists.end());
  for (auto& [c, e] : winv.twists) e = -e;
  TwistWord both = w;
  for (auto& t : winv.twists) both.twists.push_back(t);
  CHECK(word_to_sp(both) == SpMatrix::identity(1));
}

TEST_CASE("induced exterior powers") {
  std::mt19937_64 rng(17);
  for (unsigned g = 1; g <= 3; g++) {
    SpMatrix m = random_word(g, rng);
    // identity induces identities
    for (unsigned j = 0; j <= 2 * g; j++) {
      ZMat idj = induced_exterior(SpMatrix::identity(g), j);
      CHECK(idj == ZMat::identity(idj.rows()));
    }
    // top exterior power is det = 1
    ZMat top = induced_exterior(m, 2 * g);
    REQUIRE(top.rows() == 1);
    CHECK(top.at(0, 0) == 1);
    // degree 1 trace = matrix trace
    CHECK(induced_exterior(m, 1).trace() == m.trace());
    // functoriality
    SpMatrix m2 = random_word(g, rng);
    for (unsigned j = 0; j <= 2 * g && j <= 3; j++)
      CHECK(induced_exterior(m * m2, j) ==
            induced_exterior(m, j) * induced_exterior(m2, j));
  }
}

TEST_CASE("exterior action commutes with E") {
  std::mt19937_64 rng(23);
  for (unsigned g = 1; g <= 4; g++) {
    SpMatrix m = random_word(g, rng);
    MultiVector v(g, kZ);
    for (int t = 0; t < 8; t++)
      v.add_term((BladeMask)(rng() % (1u << (2 * g))), Int((long)(rng() % 5) - 2));
    CHECK(apply_exterior(m, op_E(v)) == op_E(apply_exterior(m, v)));
  }
}
