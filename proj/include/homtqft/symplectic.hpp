#pragma once

#include <string>
#include <vector>

#include "homtqft/exterior.hpp"
#include "homtqft/intmat.hpp"

namespace homtqft {

// Standard symplectic form in the a1,b1,...,ag,bg slot order, with
// <a_i, b_i> = +1:  J is block-diagonal [[0,1],[-1,0]].
ZMat symplectic_form(unsigned genus);

// Integer 2g x 2g matrix preserving J (checked on construction).
class SpMatrix {
 public:
  SpMatrix(ZMat m, unsigned genus);
  static SpMatrix identity(unsigned genus);

  unsigned genus() const { return genus_; }
  const ZMat& mat() const { return m_; }
  SpMatrix operator*(const SpMatrix& o) const;
  SpMatrix inverse() const;  // J^-1 M^T J
  bool operator==(const SpMatrix& o) const { return m_ == o.m_; }
  Int trace() const { return m_.trace(); }

 private:
  ZMat m_;
  unsigned genus_;
};

// Homology action of a Dehn twist about a curve with homology class c:
//   x  ->  x + <x, c>_J c.
SpMatrix transvection(const std::vector<Int>& c, unsigned genus);
// Power of a single transvection (T_c^n = x + n <x,c> c).
SpMatrix transvection_pow(const std::vector<Int>& c, long n, unsigned genus);

struct TwistWord {
  unsigned genus = 0;
  std::vector<std::pair<std::vector<Int>, long>> twists;  // (curve, exponent)
};

// Text format, one twist per line:  curve = [c1,...,c2g], exp = n
TwistWord parse_twist_word(const std::string& text);
TwistWord parse_twist_word_file(const std::string& path);

// Ordered product of transvection powers (first line is the leftmost factor).
SpMatrix word_to_sp(const TwistWord& w);

// Matrix of the exterior power of m on the degree-j blade basis
// (blades sorted by mask).
ZMat induced_exterior(const SpMatrix& m, unsigned j);

// Sorted list of degree-j blade masks at a given genus.
std::vector<BladeMask> degree_blades(unsigned genus, unsigned j);

// Apply the exterior-power action of m to an integer multivector.
MultiVector apply_exterior(const SpMatrix& m, const MultiVector& v);

// Image of a degree-1 column vector as a multivector over a given tag.
MultiVector column_multivector(const SpMatrix& m, unsigned slot, RingTag tag);

}  // namespace homtqft
