#include "homtqft/rings.hpp"

#include <algorithm>
#include <sstream>

namespace homtqft {

// ---------------------------------------------------------------------------
// FpScalar

FpScalar FpScalar::from_int(const Int& x, uint32_t p) {
  mpz_class m = x % (long)p;
  long v = m.get_si();
  if (v < 0) v += p;
  FpScalar r;
  r.v = (uint32_t)v;
  r.p = p;
  return r;
}

static void check_same_p(uint32_t a, uint32_t b) {
  if (a != b) throw ring_mismatch("modulus mismatch");
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
  check_same_p(p, o.p);
  return FpScalar((long long)v + o.v, p);
}
FpScalar FpScalar::operator-(const FpScalar& o) const {
  check_same_p(p, o.p);
  return FpScalar((long long)v - o.v, p);
}
FpScalar FpScalar::operator*(const FpScalar& o) const {
  check_same_p(p, o.p);
  return FpScalar((long long)v * o.v, p);
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
  if (a == 0) throw internal_error("inverse of zero mod p");
  long long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw internal_error("non-invertible element mod p");
  if (t < 0) t += p;
  return (uint32_t)t;
}

FpScalar FpScalar::inverse() const { return FpScalar(fp_inv(v, p), p); }

// ---------------------------------------------------------------------------
// LaurentPoly

void LaurentPoly::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0)
      it = c_.erase(it);
    else
      ++it;
  }
}

LaurentPoly LaurentPoly::constant(Int c) {
  LaurentPoly p;
  if (c != 0) p.c_[0] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Int c, long e) {
  LaurentPoly p;
  if (c != 0) p.c_[e] = std::move(c);
  return p;
}

Int LaurentPoly::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (c_.empty()) throw internal_error("min_exp of zero polynomial");
  return c_.begin()->first;
}
long LaurentPoly::max_exp() const {
  if (c_.empty()) throw internal_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.c_) r.c_[e] += c;
  r.trim();
  return r;
}
LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.c_) r.c_[e] -= c;
  r.trim();
  return r;
}
LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, c1] : c_)
    for (auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
  r.trim();
  return r;
}
LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}
LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r;
  for (auto& [e0, c] : c_) r.c_[e0 + e] = c;
  return r;
}
LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = constant(1);
  for (unsigned i = 0; i < n; i++) r = r * (*this);
  return r;
}
LaurentPoly operator*(const Int& k, const LaurentPoly& p) {
  LaurentPoly r;
  if (k == 0) return r;
  for (auto& [e, c] : p.c_) r.c_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (auto& [e, c] : c_) s += c;
  return s;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  long lo = min_exp(), hi = max_exp();
  long shift = -(lo + hi) / 2;
  LaurentPoly r = shifted(shift);
  if (r.c_.rbegin()->second < 0) r = -r;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : c_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0)
      os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// CycModP

CycModP CycModP::from_int(long long x, uint32_t p) {
  CycModP r(p);
  long long m = x % (long long)p;
  if (m < 0) m += p;
  r.c_[0] = (uint32_t)m;
  return r;
}
CycModP CycModP::y(uint32_t p) {
  CycModP r(p);
  if (p > 2) r.c_[1] = 1;
  return r;
}
CycModP CycModP::zeta(uint32_t p) {
  CycModP r = from_int(1, p);
  if (p > 2) r.c_[1] = 1;
  return r;
}
CycModP CycModP::zeta_pow(long e, uint32_t p) {
  long m = e % (long)p;
  if (m < 0) m += p;
  CycModP r = one(p);
  CycModP z = zeta(p);
  for (long i = 0; i < m; i++) r = r * z;
  return r;
}

bool CycModP::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

void CycModP::check(const CycModP& o) const { check_same_p(p_, o.p_); }

CycModP CycModP::operator+(const CycModP& o) const {
  check(o);
  CycModP r(p_);
  for (size_t i = 0; i < c_.size(); i++) r.c_[i] = (c_[i] + o.c_[i]) % p_;
  return r;
}
CycModP CycModP::operator-(const CycModP& o) const {
  check(o);
  CycModP r(p_);
  for (size_t i = 0; i < c_.size(); i++) r.c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  return r;
}
CycModP CycModP::operator*(const CycModP& o) const {
  check(o);
  CycModP r(p_);
  size_t n = c_.size();
  for (size_t i = 0; i < n; i++) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j + i < n; j++) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] = (uint32_t)((r.c_[i + j] + (uint64_t)c_[i] * o.c_[j]) % p_);
    }
  }
  return r;
}
CycModP CycModP::operator-() const {
  CycModP r(p_);
  for (size_t i = 0; i < c_.size(); i++) r.c_[i] = (p_ - c_[i]) % p_;
  return r;
}
CycModP CycModP::scaled(long long k) const {
  long long m = k % (long long)p_;
  if (m < 0) m += p_;
  CycModP r(p_);
  for (size_t i = 0; i < c_.size(); i++)
    r.c_[i] = (uint32_t)(((uint64_t)c_[i] * (uint64_t)m) % p_);
  return r;
}
CycModP CycModP::pow(unsigned n) const {
  CycModP r = one(p_);
  for (unsigned i = 0; i < n; i++) r = r * (*this);
  return r;
}
CycModP CycModP::inverse() const {
  if (c_[0] == 0) throw internal_error("CycModP inverse: not a unit");
  size_t n = c_.size();
  CycModP v(p_);
  uint32_t u0 = fp_inv(c_[0], p_);
  v.c_[0] = u0;
  for (size_t k = 1; k < n; k++) {
    uint64_t s = 0;
    for (size_t i = 1; i <= k; i++) s += (uint64_t)c_[i] * v.c_[k - i] % p_;
    s %= p_;
    v.c_[k] = (uint32_t)((uint64_t)(p_ - s) % p_ * u0 % p_);
  }
  return v;
}

std::string CycModP::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); i++) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "] mod (" << p_ << ", y^" << (p_ - 1) << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Cyc20: reduction by Phi_20(A) = A^8 - A^6 + A^4 - A^2 + 1,
// i.e. A^8 = A^6 - A^4 + A^2 - 1.

bool Cyc20::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

Cyc20 Cyc20::from_int(Int x) {
  Cyc20 r;
  r.c_[0] = std::move(x);
  return r;
}

static const std::array<std::array<int, 8>, 20>& a_power_table() {
  // A^k in the basis A^0..A^7 for k = 0..19.
  static std::array<std::array<int, 8>, 20> tab = [] {
    std::array<std::array<int, 8>, 20> t{};
    std::array<long, 8> cur{};
    cur[0] = 1;
    for (int k = 0; k < 20; k++) {
      for (int i = 0; i < 8; i++) t[k][i] = (int)cur[i];
      // multiply by A
      std::array<long, 8> nxt{};
      for (int i = 0; i < 7; i++) nxt[i + 1] = cur[i];
      long top = cur[7];
      if (top != 0) {
        nxt[6] += top;
        nxt[4] -= top;
        nxt[2] += top;
        nxt[0] -= top;
      }
      cur = nxt;
    }
    return t;
  }();
  return tab;
}

Cyc20 Cyc20::A_pow(long e) {
  long m = e % 20;
  if (m < 0) m += 20;
  Cyc20 r;
  auto& row = a_power_table()[(size_t)m];
  for (int i = 0; i < 8; i++) r.c_[i] = row[i];
  return r;
}

Cyc20 Cyc20::loop_delta() { return -(A_pow(2) + A_pow(-2)); }

Cyc20 Cyc20::loop_delta_inv() {
  // delta = -(A^2 + A^-2) is a unit: its inverse is 1 - A^2 - A^-2.
  Cyc20 inv = one() - A_pow(2) - A_pow(-2);
  return inv;
}

Cyc20 Cyc20::operator+(const Cyc20& o) const {
  Cyc20 r;
  for (int i = 0; i < 8; i++) r.c_[i] = c_[i] + o.c_[i];
  return r;
}
Cyc20 Cyc20::operator-(const Cyc20& o) const {
  Cyc20 r;
  for (int i = 0; i < 8; i++) r.c_[i] = c_[i] - o.c_[i];
  return r;
}
Cyc20 Cyc20::operator-() const {
  Cyc20 r;
  for (int i = 0; i < 8; i++) r.c_[i] = -c_[i];
  return r;
}
Cyc20 Cyc20::operator*(const Cyc20& o) const {
  std::array<Int, 15> prod;
  for (auto& x : prod) x = 0;
  for (int i = 0; i < 8; i++) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 8; j++) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  for (int d = 14; d >= 8; d--) {
    if (prod[d] == 0) continue;
    Int top = prod[d];
    prod[d] = 0;
    prod[d - 2] += top;
    prod[d - 4] -= top;
    prod[d - 6] += top;
    prod[d - 8] -= top;
  }
  Cyc20 r;
  for (int i = 0; i < 8; i++) r.c_[i] = prod[i];
  return r;
}
Cyc20 Cyc20::pow(unsigned n) const {
  Cyc20 r = one();
  for (unsigned i = 0; i < n; i++) r = r * (*this);
  return r;
}

std::optional<Cyc20> Cyc20::divide_exact(const Cyc20& d) const {
  if (d.is_zero()) return std::nullopt;
  // Solve d * x = this as an 8x8 rational linear system in the A-basis.
  // Column j of the matrix is d * A^j.
  std::array<Cyc20, 8> cols;
  for (int j = 0; j < 8; j++) cols[j] = d * A_pow(j);
  // Gaussian elimination over Q.
  std::array<std::array<Rat, 9>, 8> m;
  for (int i = 0; i < 8; i++) {
    for (int j = 0; j < 8; j++) m[i][j] = Rat(cols[j].c_[i]);
    m[i][8] = Rat(c_[i]);
  }
  int row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < 8 && row < 8; col++) {
    int pr = -1;
    for (int i = row; i < 8; i++)
      if (m[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    Rat inv = 1 / m[row][col];
    for (int j = col; j <= 8; j++) m[row][j] *= inv;
    for (int i = 0; i < 8; i++) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j <= 8; j++) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    row++;
  }
  for (int i = row; i < 8; i++)
    if (m[i][8] != 0) return std::nullopt;
  std::array<Rat, 8> x;
  for (auto& q : x) q = 0;
  for (int i = 0; i < row; i++) x[pivots[(size_t)i]] = m[i][8];
  Cyc20 q;
  for (int j = 0; j < 8; j++) {
    x[j].canonicalize();
    if (x[j].get_den() != 1) return std::nullopt;
    q.c_[j] = x[j].get_num();
  }
  if (!(d * q == *this)) return std::nullopt;
  return q;
}

std::optional<Cyc5> Cyc20::to_zeta5() const {
  // z = c0 + c1 q + c2 q^2 + c3 q^3 with q = A^4 expands in the A-basis as
  //   A^0: c0 - c2, A^2: c2 - c3, A^4: c1 - c2, A^6: c2, odd coeffs 0.
  for (int i = 1; i < 8; i += 2)
    if (c_[i] != 0) return std::nullopt;
  Int c2 = c_[6];
  Int c0 = c_[0] + c2;
  Int c3 = c2 - c_[2];
  Int c1 = c_[4] + c2;
  Cyc5 r;
  r = Cyc5::from_int(c0) + Cyc5::zeta_pow(1) * Cyc5::from_int(c1) +
      Cyc5::zeta_pow(2) * Cyc5::from_int(c2) +
      Cyc5::zeta_pow(3) * Cyc5::from_int(c3);
  return r;
}

std::string Cyc20::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 8; i++) {
    if (i) os << ",";
    os << c_[i].get_str();
  }
  os << "]_A";
  return os.str();
}

// ---------------------------------------------------------------------------
// Cyc5: reduction by 1 + z + z^2 + z^3 + z^4, i.e. z^4 = -(1+z+z^2+z^3).

bool Cyc5::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

Cyc5 Cyc5::from_int(Int x) {
  Cyc5 r;
  r.c_[0] = std::move(x);
  return r;
}

Cyc5 Cyc5::zeta_pow(long e) {
  long m = e % 5;
  if (m < 0) m += 5;
  Cyc5 r;
  if (m < 4)
    r.c_[(size_t)m] = 1;
  else
    for (int i = 0; i < 4; i++) r.c_[i] = -1;
  return r;
}

Cyc5 Cyc5::x_element() { return zeta_pow(1) - zeta_pow(-1); }

Cyc5 Cyc5::operator+(const Cyc5& o) const {
  Cyc5 r;
  for (int i = 0; i < 4; i++) r.c_[i] = c_[i] + o.c_[i];
  return r;
}
Cyc5 Cyc5::operator-(const Cyc5& o) const {
  Cyc5 r;
  for (int i = 0; i < 4; i++) r.c_[i] = c_[i] - o.c_[i];
  return r;
}
Cyc5 Cyc5::operator-() const {
  Cyc5 r;
  for (int i = 0; i < 4; i++) r.c_[i] = -c_[i];
  return r;
}
Cyc5 Cyc5::operator*(const Cyc5& o) const {
  std::array<Int, 7> prod;
  for (auto& x : prod) x = 0;
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) prod[i + j] += c_[i] * o.c_[j];
  for (int d = 6; d >= 4; d--) {
    if (prod[d] == 0) continue;
    Int top = prod[d];
    prod[d] = 0;
    for (int i = d - 4; i < d; i++) prod[i] -= top;
  }
  Cyc5 r;
  for (int i = 0; i < 4; i++) r.c_[i] = prod[i];
  return r;
}

Int Cyc5::augmentation() const { return c_[0] + c_[1] + c_[2] + c_[3]; }

std::optional<Cyc5> Cyc5::divide_by_zeta_minus_one() const {
  // (1-z)(1-z^2)(1-z^3)(1-z^4) = 5, so z/(z-1) division goes through
  // u = (1-z^2)(1-z^3)(1-z^4):  this/(z-1) = -(this * u)/5.
  static const Cyc5 u = [] {
    Cyc5 a = Cyc5::one() - Cyc5::zeta_pow(2);
    Cyc5 b = Cyc5::one() - Cyc5::zeta_pow(3);
    Cyc5 c = Cyc5::one() - Cyc5::zeta_pow(4);
    return a * b * c;
  }();
  Cyc5 w = (*this) * u;
  Cyc5 r;
  for (int i = 0; i < 4; i++) {
    if (w.c_[i] % 5 != 0) return std::nullopt;
    r.c_[i] = -w.c_[i] / 5;
  }
  return r;
}

std::optional<int> Cyc5::valuation() const {
  if (is_zero()) return std::nullopt;
  int v = 0;
  Cyc5 z = *this;
  while (true) {
    auto q = z.divide_by_zeta_minus_one();
    if (!q) return v;
    z = *q;
    v++;
    if (v > 100000) throw internal_error("runaway valuation");
  }
}

CycModP Cyc5::reduce_mod5() const {
  CycModP r(5);
  for (int i = 0; i < 4; i++) {
    Int m = c_[i] % 5;
    long v = m.get_si();
    if (v < 0) v += 5;
    if (v != 0) r = r + CycModP::zeta_pow(i, 5).scaled(v);
  }
  return r;
}

std::string Cyc5::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; i++) {
    if (i) os << ",";
    os << c_[i].get_str();
  }
  os << "]_zeta5";
  return os.str();
}

// ---------------------------------------------------------------------------
// RingElement dispatch

std::string RingTag::name() const {
  switch (kind) {
    case RingKind::Integer:
      return "Z";
    case RingKind::ModP:
      return "F" + std::to_string(p);
    case RingKind::Laurent:
      return "Z[t,t^-1]";
    case RingKind::CycP:
      return "F" + std::to_string(p) + "[zeta]";
    case RingKind::Cyc20:
      return "Z[A]/Phi20";
  }
  return "?";
}

RingTag ring_tag_of(const RingElement& e) {
  return std::visit(
      [](auto&& v) -> RingTag {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Int>)
          return {RingKind::Integer, 0};
        else if constexpr (std::is_same_v<T, FpScalar>)
          return {RingKind::ModP, v.p};
        else if constexpr (std::is_same_v<T, LaurentPoly>)
          return {RingKind::Laurent, 0};
        else if constexpr (std::is_same_v<T, CycModP>)
          return {RingKind::CycP, v.p()};
        else
          return {RingKind::Cyc20, 0};
      },
      e);
}

RingElement ring_zero(RingTag tag) { return ring_from_int(0, tag); }
RingElement ring_one(RingTag tag) { return ring_from_int(1, tag); }

RingElement ring_from_int(long long x, RingTag tag) {
  switch (tag.kind) {
    case RingKind::Integer:
      return Int((long)x);
    case RingKind::ModP:
      return FpScalar(x, tag.p);
    case RingKind::Laurent:
      return LaurentPoly::constant(Int((long)x));
    case RingKind::CycP:
      return CycModP::from_int(x, tag.p);
    case RingKind::Cyc20:
      return Cyc20::from_int(Int((long)x));
  }
  throw internal_error("bad ring tag");
}

bool ring_is_zero(const RingElement& e) {
  return std::visit(
      [](auto&& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Int>)
          return v == 0;
        else
          return v.is_zero();
      },
      e);
}

template <typename Op>
static RingElement binop(const RingElement& a, const RingElement& b, Op op) {
  if (!(ring_tag_of(a) == ring_tag_of(b)))
    throw ring_mismatch("ring mismatch: " + ring_tag_of(a).name() + " vs " +
                        ring_tag_of(b).name());
  return std::visit(
      [&](auto&& x) -> RingElement {
        using T = std::decay_t<decltype(x)>;
        return op(x, std::get<T>(b));
      },
      a);
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  return binop(a, b, [](auto& x, auto& y) -> RingElement { return x + y; });
}
RingElement ring_sub(const RingElement& a, const RingElement& b) {
  return binop(a, b, [](auto& x, auto& y) -> RingElement { return x - y; });
}
RingElement ring_mul(const RingElement& a, const RingElement& b) {
  return binop(a, b, [](auto& x, auto& y) -> RingElement { return x * y; });
}
RingElement ring_neg(const RingElement& a) {
  return std::visit([](auto&& v) -> RingElement { return -v; }, a);
}
RingElement ring_scale(long long k, const RingElement& a) {
  return ring_mul(ring_from_int(k, ring_tag_of(a)), a);
}

RingElement ring_pow(const RingElement& q, long e) {
  if (e >= 0) {
    RingElement r = ring_one(ring_tag_of(q));
    for (long i = 0; i < e; i++) r = ring_mul(r, q);
    return r;
  }
  // Negative exponents, only for the invertible cases that occur here.
  if (std::holds_alternative<LaurentPoly>(q)) {
    const auto& lp = std::get<LaurentPoly>(q);
    if (lp.coeffs().size() != 1) throw internal_error("non-monomial inverse");
    auto [exp, c] = *lp.coeffs().begin();
    if (c != 1 && c != -1) throw internal_error("non-unit monomial inverse");
    LaurentPoly inv = LaurentPoly::monomial(c, -exp);
    RingElement r = inv;
    return ring_pow(r, -e);
  }
  if (std::holds_alternative<CycModP>(q)) {
    RingElement inv = std::get<CycModP>(q).inverse();
    return ring_pow(inv, -e);
  }
  if (std::holds_alternative<Cyc20>(q)) {
    auto inv = Cyc20::one().divide_exact(std::get<Cyc20>(q));
    if (!inv) throw internal_error("non-unit Cyc20 inverse");
    RingElement r = *inv;
    return ring_pow(r, -e);
  }
  if (std::holds_alternative<FpScalar>(q)) {
    RingElement inv = std::get<FpScalar>(q).inverse();
    return ring_pow(inv, -e);
  }
  throw internal_error("inverse unavailable in Z");
}

bool ring_eq(const RingElement& a, const RingElement& b) {
  return ring_is_zero(ring_sub(a, b));
}

std::string ring_to_string(const RingElement& e) {
  return std::visit(
      [](auto&& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Int>)
          return v.get_str();
        else if constexpr (std::is_same_v<T, FpScalar>)
          return std::to_string(v.v) + " mod " + std::to_string(v.p);
        else
          return v.to_string();
      },
      e);
}

RingElement quantum_integer(int n, const RingElement& q) {
  if (n < 0) throw internal_error("quantum_integer: n < 0");
  RingElement s = ring_zero(ring_tag_of(q));
  for (int i = 0; i < n; i++) s = ring_add(s, ring_pow(q, n - 1 - 2 * i));
  return s;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

}  // namespace homtqft
