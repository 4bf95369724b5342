#pragma once

#include <map>
#include <optional>
#include <utility>

#include "homtqft/rings.hpp"

namespace homtqft {

// Basis monomials of the exterior algebra of H_1(Sigma_g) as bit sets.
// Slot order (fixed once, it pins every Koszul sign):
//   slot 2h   = a_{h+1},  slot 2h+1 = b_{h+1},   h = 0..g-1,
// so a_1 < b_1 < a_2 < b_2 < ... < a_g < b_g.
using BladeMask = uint32_t;

constexpr unsigned kMaxGenus = 15;  // masks stay inside one machine word

inline unsigned blade_degree(BladeMask m) { return (unsigned)__builtin_popcount(m); }
inline BladeMask slot_a(unsigned handle) { return BladeMask(1) << (2 * handle); }
inline BladeMask slot_b(unsigned handle) { return BladeMask(1) << (2 * handle + 1); }
inline BladeMask handle_pair(unsigned handle) {
  return slot_a(handle) | slot_b(handle);
}

// Koszul sign of merging two disjoint sorted blades (m1 first), with the
// result the sorted union: parity of |{(x,y) in m1 x m2 : x > y}|.
int blade_merge_sign(BladeMask m1, BladeMask m2);

// Exterior product of basis blades: nullopt when the masks intersect.
std::optional<std::pair<int, BladeMask>> blade_wedge(BladeMask b1, BladeMask b2);

// Sparse multivector over a run-time tagged coefficient ring.
class MultiVector {
 public:
  MultiVector() = default;
  MultiVector(unsigned genus, RingTag tag);
  static MultiVector unit(unsigned genus, RingTag tag);  // scalar 1
  static MultiVector blade(unsigned genus, RingTag tag, BladeMask m);
  // omega = sum_h a_h ^ b_h
  static MultiVector omega(unsigned genus, RingTag tag);

  unsigned genus() const { return genus_; }
  RingTag tag() const { return tag_; }
  const std::map<BladeMask, RingElement>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  // degree of a homogeneous multivector; throws on mixed degrees
  unsigned degree() const;
  bool homogeneous() const;

  void add_term(BladeMask m, const RingElement& c);
  RingElement coeff(BladeMask m) const;

  MultiVector operator+(const MultiVector& o) const;
  MultiVector operator-(const MultiVector& o) const;
  MultiVector operator-() const;
  MultiVector scaled(const RingElement& c) const;
  MultiVector scaled(long long k) const;
  bool operator==(const MultiVector& o) const;

  std::string to_string() const;

 private:
  unsigned genus_ = 0;
  RingTag tag_;
  std::map<BladeMask, RingElement> t_;
  friend MultiVector wedge(const MultiVector&, const MultiVector&);
};

void check_compatible(const MultiVector& u, const MultiVector& v);

MultiVector wedge(const MultiVector& u, const MultiVector& v);
MultiVector op_E(const MultiVector& v);  // v ^ omega
MultiVector op_F(const MultiVector& v);  // adjoint of E: drop full handles
MultiVector op_H(const MultiVector& v);  // scale degree-d part by (d - g)
RingElement inner_product(const MultiVector& u, const MultiVector& v);

}  // namespace homtqft
