#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace homtqft {

struct ring_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Prime field scalar.  p is carried by the value; mixing moduli throws.

struct FpScalar {
  uint32_t v = 0;
  uint32_t p = 0;

  FpScalar() = default;
  FpScalar(long long x, uint32_t prime) : p(prime) {
    long long m = x % (long long)prime;
    if (m < 0) m += prime;
    v = (uint32_t)m;
  }
  static FpScalar from_int(const Int& x, uint32_t p);

  bool is_zero() const { return v == 0; }
  FpScalar operator+(const FpScalar& o) const;
  FpScalar operator-(const FpScalar& o) const;
  FpScalar operator*(const FpScalar& o) const;
  FpScalar operator-() const { return FpScalar(-(long long)v, p); }
  FpScalar inverse() const;
  bool operator==(const FpScalar& o) const { return v == o.v && p == o.p; }
};

uint32_t fp_inv(uint32_t a, uint32_t p);

// ---------------------------------------------------------------------------
// Integer Laurent polynomials in t.

class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(Int c);
  static LaurentPoly monomial(Int c, long e);
  static LaurentPoly t(long e = 1) { return monomial(1, e); }

  bool is_zero() const { return c_.empty(); }
  const std::map<long, Int>& coeffs() const { return c_; }
  Int coeff(long e) const;
  long min_exp() const;  // throws on zero
  long max_exp() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly shifted(long e) const;  // * t^e
  LaurentPoly pow(unsigned n) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  LaurentPoly reversed() const;  // t -> t^-1
  bool palindromic() const { return *this == reversed(); }
  Int eval_one() const;  // value at t = 1

  // +- t^s so that exponents are symmetric about 0 and the top coefficient
  // is positive; the Alexander polynomials produced here are palindromic so
  // s is always 0 and only the global sign is adjusted.
  LaurentPoly normalized() const;

  std::string to_string() const;

 private:
  std::map<long, Int> c_;  // exponent -> coefficient, no zeros stored
  void trim();
  friend LaurentPoly operator*(const Int& k, const LaurentPoly& p);
};

LaurentPoly operator*(const Int& k, const LaurentPoly& p);

// ---------------------------------------------------------------------------
// F_p[y] / y^(p-1) with zeta = 1 + y.  This is the mod-p cyclotomic ring:
// the p-th cyclotomic polynomial evaluated at 1+y is y^(p-1) mod p.

class CycModP {
 public:
  CycModP() = default;
  explicit CycModP(uint32_t p) : p_(p), c_(p - 1, 0) {}
  static CycModP from_int(long long x, uint32_t p);
  static CycModP one(uint32_t p) { return from_int(1, p); }
  static CycModP y(uint32_t p);
  static CycModP zeta(uint32_t p);             // 1 + y
  static CycModP zeta_pow(long e, uint32_t p); // (1+y)^e, e may be negative

  uint32_t p() const { return p_; }
  bool is_zero() const;
  const std::vector<uint32_t>& coeffs() const { return c_; }
  uint32_t coeff(size_t i) const { return c_.at(i); }
  uint32_t& at(size_t i) { return c_.at(i); }

  CycModP operator+(const CycModP& o) const;
  CycModP operator-(const CycModP& o) const;
  CycModP operator*(const CycModP& o) const;
  CycModP operator-() const;
  CycModP scaled(long long k) const;
  CycModP pow(unsigned n) const;
  // Inverse of a unit (nonzero constant term).
  CycModP inverse() const;
  bool operator==(const CycModP& o) const { return p_ == o.p_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  uint32_t p_ = 0;
  std::vector<uint32_t> c_;
  void check(const CycModP& o) const;
};

// ---------------------------------------------------------------------------
// Z[A] / Phi_20(A): A is a primitive 20th root of unity, A^4 a primitive
// fifth root.  All Kauffman bracket arithmetic lives here.

class Cyc5;

class Cyc20 {
 public:
  Cyc20() { c_.fill(0); }
  static Cyc20 from_int(Int x);
  static Cyc20 one() { return from_int(1); }
  static Cyc20 A_pow(long e);     // any integer exponent (A^20 = 1)
  static Cyc20 loop_delta();      // -A^2 - A^-2
  static Cyc20 loop_delta_inv();  // its inverse (a unit)

  bool is_zero() const;
  const std::array<Int, 8>& coeffs() const { return c_; }

  Cyc20 operator+(const Cyc20& o) const;
  Cyc20 operator-(const Cyc20& o) const;
  Cyc20 operator*(const Cyc20& o) const;
  Cyc20 operator-() const;
  Cyc20 pow(unsigned n) const;
  bool operator==(const Cyc20& o) const { return c_ == o.c_; }

  // Exact division; nullopt if the quotient is not in the ring.
  std::optional<Cyc20> divide_exact(const Cyc20& d) const;
  // Coercion into Z[zeta5] (A^4 = zeta5); nullopt if not in the subring.
  std::optional<Cyc5> to_zeta5() const;

  std::string to_string() const;

 private:
  std::array<Int, 8> c_;  // coefficients of A^0 .. A^7
};

// ---------------------------------------------------------------------------
// Z[zeta5] in the basis 1, z, z^2, z^3.

class Cyc5 {
 public:
  Cyc5() { c_.fill(0); }
  static Cyc5 from_int(Int x);
  static Cyc5 one() { return from_int(1); }
  static Cyc5 zeta_pow(long e);
  static Cyc5 x_element();  // zeta - zeta^-1

  bool is_zero() const;
  const std::array<Int, 4>& coeffs() const { return c_; }

  Cyc5 operator+(const Cyc5& o) const;
  Cyc5 operator-(const Cyc5& o) const;
  Cyc5 operator*(const Cyc5& o) const;
  Cyc5 operator-() const;
  bool operator==(const Cyc5& o) const { return c_ == o.c_; }

  Int augmentation() const;  // value at zeta = 1
  // Exact division by (zeta - 1); nullopt when not divisible.
  std::optional<Cyc5> divide_by_zeta_minus_one() const;
  // (zeta-1)-adic valuation; nullopt encodes +infinity (the zero element).
  std::optional<int> valuation() const;
  // Reduction into F_5[y]/y^4 via zeta -> 1 + y.
  CycModP reduce_mod5() const;

  std::string to_string() const;

 private:
  std::array<Int, 4> c_;
};

// ---------------------------------------------------------------------------
// Run-time tagged exact scalar and the ring tag carried by multivectors.

enum class RingKind { Integer, ModP, Laurent, CycP, Cyc20 };

struct RingTag {
  RingKind kind = RingKind::Integer;
  uint32_t p = 0;  // modulus for ModP / CycP, otherwise 0
  bool operator==(const RingTag& o) const { return kind == o.kind && p == o.p; }
  std::string name() const;
};

using RingElement = std::variant<Int, FpScalar, LaurentPoly, CycModP, Cyc20>;

RingTag ring_tag_of(const RingElement& e);
RingElement ring_zero(RingTag tag);
RingElement ring_one(RingTag tag);
RingElement ring_from_int(long long x, RingTag tag);
bool ring_is_zero(const RingElement& e);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_scale(long long k, const RingElement& a);
// q^e for any integer e; q must be invertible when e < 0.
RingElement ring_pow(const RingElement& q, long e);
bool ring_eq(const RingElement& a, const RingElement& b);
std::string ring_to_string(const RingElement& e);

// [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)  (division-free form).
RingElement quantum_integer(int n, const RingElement& q);

Int binomial(long n, long k);

}  // namespace homtqft
