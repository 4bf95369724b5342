#pragma once

#include <optional>
#include <vector>

#include "homtqft/rings.hpp"

namespace homtqft {

// Dense integer matrix (GMP entries).
class ZMat {
 public:
  ZMat() = default;
  ZMat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Int(0)) {}
  static ZMat identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Int& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

  ZMat operator*(const ZMat& o) const;
  ZMat operator+(const ZMat& o) const;
  ZMat operator-(const ZMat& o) const;
  bool operator==(const ZMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  ZMat transposed() const;
  Int trace() const;
  bool is_zero() const;

  // Basis of the integer kernel lattice {x : Ax = 0}; the kernel of an
  // integer matrix is automatically saturated.
  ZMat kernel_basis() const;  // columns = basis vectors

  size_t rank_rational() const;      // fraction-free elimination
  size_t rank_mod(uint32_t p) const;

  // Elementary symmetric functions e_0..e_n of the eigenvalues (n = size),
  // i.e. traces of the exterior powers; Newton's identities, exact.
  std::vector<Int> exterior_traces() const;

  // Diagonal of the Smith normal form (non-negative, divisibility chain).
  std::vector<Int> smith_diagonal() const;

  // Signature data (#positive, #negative, #zero eigenvalues) of a symmetric
  // matrix, computed by exact congruent diagonalization.
  struct Signature {
    int pos = 0, neg = 0, zero = 0;
  };
  Signature signature_symmetric() const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

// Dense rational Gaussian elimination helpers.
// Solve A x = b for possibly many right-hand sides; nullopt if inconsistent.
std::optional<std::vector<std::vector<Rat>>> solve_rational(
    const ZMat& a, const std::vector<std::vector<Int>>& rhs_cols);

// Dense matrix over F_p.
class FpMat {
 public:
  FpMat() = default;
  FpMat(size_t rows, size_t cols, uint32_t p)
      : r_(rows), c_(cols), p_(p), a_(rows * cols, 0) {}
  static FpMat identity(size_t n, uint32_t p);
  static FpMat from_int(const ZMat& m, uint32_t p);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  uint32_t p() const { return p_; }
  uint32_t& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  uint32_t at(size_t i, size_t j) const { return a_[i * c_ + j]; }
  void set(size_t i, size_t j, long long v) {
    long long m = v % (long long)p_;
    if (m < 0) m += p_;
    a_[i * c_ + j] = (uint32_t)m;
  }

  FpMat operator*(const FpMat& o) const;
  FpMat operator+(const FpMat& o) const;
  FpMat operator-(const FpMat& o) const;
  bool operator==(const FpMat& o) const {
    return r_ == o.r_ && c_ == o.c_ && p_ == o.p_ && a_ == o.a_;
  }
  FpMat transposed() const;
  uint32_t trace() const;
  bool is_zero() const;

  size_t rank() const;
  FpMat kernel_basis() const;  // columns span {x : Ax = 0}
  // Solve A X = B; nullopt if inconsistent.
  std::optional<FpMat> solve(const FpMat& b) const;
  std::optional<FpMat> inverse() const;

 private:
  size_t r_ = 0, c_ = 0;
  uint32_t p_ = 0;
  std::vector<uint32_t> a_;
  void check(const FpMat& o) const;
};

}  // namespace homtqft
