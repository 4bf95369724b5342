#include "homtqft/exterior.hpp"

#include <sstream>

namespace homtqft {

int blade_merge_sign(BladeMask m1, BladeMask m2) {
  // Count pairs x in m1, y in m2 with x > y.
  int inversions = 0;
  BladeMask rest = m1;
  while (rest) {
    unsigned x = (unsigned)__builtin_ctz(rest);
    rest &= rest - 1;
    BladeMask below = (x == 0) ? 0 : (BladeMask)((BladeMask(1) << x) - 1);
    inversions += __builtin_popcount(m2 & below);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

std::optional<std::pair<int, BladeMask>> blade_wedge(BladeMask b1, BladeMask b2) {
  if (b1 & b2) return std::nullopt;
  return std::make_pair(blade_merge_sign(b1, b2), b1 | b2);
}

MultiVector::MultiVector(unsigned genus, RingTag tag) : genus_(genus), tag_(tag) {
  if (genus > kMaxGenus) throw limit_error("genus beyond supported limit");
}

MultiVector MultiVector::unit(unsigned genus, RingTag tag) {
  MultiVector v(genus, tag);
  v.t_[0] = ring_one(tag);
  return v;
}

MultiVector MultiVector::blade(unsigned genus, RingTag tag, BladeMask m) {
  if (m >> (2 * genus)) throw internal_error("blade outside genus");
  MultiVector v(genus, tag);
  v.t_[m] = ring_one(tag);
  return v;
}

MultiVector MultiVector::omega(unsigned genus, RingTag tag) {
  MultiVector v(genus, tag);
  for (unsigned h = 0; h < genus; h++) v.t_[handle_pair(h)] = ring_one(tag);
  return v;
}

unsigned MultiVector::degree() const {
  if (t_.empty()) throw internal_error("degree of zero multivector");
  unsigned d = blade_degree(t_.begin()->first);
  for (auto& [m, c] : t_)
    if (blade_degree(m) != d) throw internal_error("mixed-degree multivector");
  return d;
}

bool MultiVector::homogeneous() const {
  if (t_.empty()) return true;
  unsigned d = blade_degree(t_.begin()->first);
  for (auto& [m, c] : t_)
    if (blade_degree(m) != d) return false;
  return true;
}

void MultiVector::add_term(BladeMask m, const RingElement& c) {
  if (!(ring_tag_of(c) == tag_)) throw ring_mismatch("coefficient ring mismatch");
  auto it = t_.find(m);
  if (it == t_.end()) {
    if (!ring_is_zero(c)) t_[m] = c;
    return;
  }
  it->second = ring_add(it->second, c);
  if (ring_is_zero(it->second)) t_.erase(it);
}

RingElement MultiVector::coeff(BladeMask m) const {
  auto it = t_.find(m);
  return it == t_.end() ? ring_zero(tag_) : it->second;
}

void check_compatible(const MultiVector& u, const MultiVector& v) {
  if (u.genus() != v.genus()) throw ring_mismatch("genus mismatch");
  if (!(u.tag() == v.tag())) throw ring_mismatch("ring mismatch");
}

MultiVector MultiVector::operator+(const MultiVector& o) const {
  check_compatible(*this, o);
  MultiVector r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}
MultiVector MultiVector::operator-(const MultiVector& o) const {
  check_compatible(*this, o);
  MultiVector r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, ring_neg(c));
  return r;
}
MultiVector MultiVector::operator-() const {
  MultiVector r(genus_, tag_);
  for (auto& [m, c] : t_) r.t_[m] = ring_neg(c);
  return r;
}
MultiVector MultiVector::scaled(const RingElement& c) const {
  MultiVector r(genus_, tag_);
  if (ring_is_zero(c)) return r;
  for (auto& [m, x] : t_) {
    RingElement y = ring_mul(x, c);
    if (!ring_is_zero(y)) r.t_[m] = y;
  }
  return r;
}
MultiVector MultiVector::scaled(long long k) const {
  return scaled(ring_from_int(k, tag_));
}

bool MultiVector::operator==(const MultiVector& o) const {
  if (genus_ != o.genus_ || !(tag_ == o.tag_)) return false;
  if (t_.size() != o.t_.size()) return false;
  auto it = o.t_.begin();
  for (auto& [m, c] : t_) {
    if (it->first != m || !ring_eq(it->second, c)) return false;
    ++it;
  }
  return true;
}

std::string MultiVector::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    if (!first) os << " + ";
    os << "(" << ring_to_string(c) << ")";
    if (m != 0) {
      os << "*";
      BladeMask rest = m;
      while (rest) {
        unsigned s = (unsigned)__builtin_ctz(rest);
        rest &= rest - 1;
        os << (s % 2 == 0 ? "a" : "b") << (s / 2 + 1);
        if (rest) os << "^";
      }
    }
    first = false;
  }
  return os.str();
}

MultiVector wedge(const MultiVector& u, const MultiVector& v) {
  check_compatible(u, v);
  MultiVector r(u.genus(), u.tag());
  for (auto& [m1, c1] : u.t_) {
    for (auto& [m2, c2] : v.t_) {
      auto w = blade_wedge(m1, m2);
      if (!w) continue;
      RingElement c = ring_mul(c1, c2);
      if (w->first < 0) c = ring_neg(c);
      r.add_term(w->second, c);
    }
  }
  return r;
}

MultiVector op_E(const MultiVector& v) {
  MultiVector r(v.genus(), v.tag());
  for (auto& [m, c] : v.terms()) {
    for (unsigned h = 0; h < v.genus(); h++) {
      BladeMask hp = handle_pair(h);
      if (m & hp) continue;
      // a_h ^ b_h has even degree: no sign when commuting past blades.
      r.add_term(m | hp, c);
    }
  }
  return r;
}

MultiVector op_F(const MultiVector& v) {
  // On a blade B:  F(B) = sum over handles with both slots in B of
  // (B minus the pair), coefficient +1 in this slot order (adjoint of E
  // for the blade-orthonormal form).
  MultiVector r(v.genus(), v.tag());
  for (auto& [m, c] : v.terms()) {
    for (unsigned h = 0; h < v.genus(); h++) {
      BladeMask hp = handle_pair(h);
      if ((m & hp) != hp) continue;
      r.add_term(m & ~hp, c);
    }
  }
  return r;
}

MultiVector op_H(const MultiVector& v) {
  MultiVector r(v.genus(), v.tag());
  for (auto& [m, c] : v.terms()) {
    long d = (long)blade_degree(m) - (long)v.genus();
    RingElement s = ring_scale(d, c);
    if (!ring_is_zero(s)) r.add_term(m, s);
  }
  return r;
}

RingElement inner_product(const MultiVector& u, const MultiVector& v) {
  check_compatible(u, v);
  RingElement s = ring_zero(u.tag());
  for (auto& [m, c] : u.terms()) {
    auto it = v.terms().find(m);
    if (it != v.terms().end()) s = ring_add(s, ring_mul(c, it->second));
  }
  return s;
}

}  // namespace homtqft
