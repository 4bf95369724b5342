#include "homtqft/intmat.hpp"

#include <algorithm>

namespace homtqft {

ZMat ZMat::identity(size_t n) {
  ZMat m(n, n);
  for (size_t i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
  if (c_ != o.r_) throw internal_error("ZMat dim mismatch");
  ZMat r(r_, o.c_);
  for (size_t i = 0; i < r_; i++)
    for (size_t k = 0; k < c_; k++) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.c_; j++) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

ZMat ZMat::operator+(const ZMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw internal_error("ZMat dim mismatch");
  ZMat r(r_, c_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] + o.a_[i];
  return r;
}
ZMat ZMat::operator-(const ZMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw internal_error("ZMat dim mismatch");
  ZMat r(r_, c_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

ZMat ZMat::transposed() const {
  ZMat r(c_, r_);
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < c_; j++) r.at(j, i) = at(i, j);
  return r;
}

Int ZMat::trace() const {
  Int s = 0;
  for (size_t i = 0; i < std::min(r_, c_); i++) s += at(i, i);
  return s;
}

bool ZMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

ZMat ZMat::kernel_basis() const {
  // Column reduction A*U = H with U unimodular.  Rows are processed top to
  // bottom; "active" columns (not yet pivots) keep zeros in all processed
  // rows, so the active columns of U at the end span the integer kernel.
  ZMat h = *this;
  ZMat u = ZMat::identity(c_);
  size_t first_active = 0;
  auto col_sub = [&](size_t j, size_t k, const Int& q) {
    if (q == 0) return;
    for (size_t i = 0; i < r_; i++) h.at(i, j) -= q * h.at(i, k);
    for (size_t i = 0; i < c_; i++) u.at(i, j) -= q * u.at(i, k);
  };
  auto col_swap = [&](size_t j, size_t k) {
    if (j == k) return;
    for (size_t i = 0; i < r_; i++) std::swap(h.at(i, j), h.at(i, k));
    for (size_t i = 0; i < c_; i++) std::swap(u.at(i, j), u.at(i, k));
  };
  for (size_t row = 0; row < r_ && first_active < c_; row++) {
    while (true) {
      size_t best = c_;
      for (size_t j = first_active; j < c_; j++) {
        if (h.at(row, j) == 0) continue;
        if (best == c_ ||
            mpz_cmpabs(h.at(row, j).get_mpz_t(), h.at(row, best).get_mpz_t()) < 0)
          best = j;
      }
      if (best == c_) break;  // no pivot in this row
      bool leftover = false;
      for (size_t j = first_active; j < c_; j++) {
        if (j == best || h.at(row, j) == 0) continue;
        Int q = h.at(row, j) / h.at(row, best);
        col_sub(j, best, q);
        if (h.at(row, j) != 0) leftover = true;
      }
      if (!leftover) {
        col_swap(best, first_active);
        first_active++;
        break;
      }
    }
  }
  ZMat k(c_, c_ - first_active);
  for (size_t idx = 0; first_active + idx < c_; idx++)
    for (size_t i = 0; i < c_; i++) k.at(i, idx) = u.at(i, first_active + idx);
  return k;
}

size_t ZMat::rank_rational() const {
  // Fraction-free (Bareiss-style) elimination.
  ZMat m = *this;
  size_t rank = 0;
  Int prev = 1;
  for (size_t col = 0; col < c_ && rank < r_; col++) {
    size_t piv = r_;
    for (size_t i = rank; i < r_; i++)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == r_) continue;
    if (piv != rank)
      for (size_t j = 0; j < c_; j++) std::swap(m.at(piv, j), m.at(rank, j));
    for (size_t i = rank + 1; i < r_; i++) {
      for (size_t j = col + 1; j < c_; j++) {
        Int v = m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
      m.at(i, col) = 0;
    }
    prev = m.at(rank, col);
    rank++;
  }
  return rank;
}

size_t ZMat::rank_mod(uint32_t p) const { return FpMat::from_int(*this, p).rank(); }

std::vector<Int> ZMat::exterior_traces() const {
  if (r_ != c_) throw internal_error("exterior_traces: square only");
  size_t n = r_;
  // Power sums p_k = tr(M^k), then Newton's identities.
  std::vector<Int> psums(n + 1, 0);
  ZMat mk = ZMat::identity(n);
  for (size_t k = 1; k <= n; k++) {
    mk = mk * (*this);
    psums[k] = mk.trace();
  }
  std::vector<Int> e(n + 1, 0);
  e[0] = 1;
  for (size_t k = 1; k <= n; k++) {
    Int s = 0;
    for (size_t i = 1; i <= k; i++) {
      Int term = e[k - i] * psums[i];
      if (i % 2 == 0) term = -term;
      s += term;
    }
    mpz_divexact_ui(e[k].get_mpz_t(), s.get_mpz_t(), (unsigned long)k);
  }
  return e;
}

std::vector<Int> ZMat::smith_diagonal() const {
  ZMat m = *this;
  size_t n = std::min(r_, c_);
  std::vector<Int> diag;
  size_t top = 0;
  while (top < n) {
    // Find a nonzero entry in the submatrix starting at (top, top).
    size_t pi = r_, pj = c_;
    for (size_t i = top; i < r_ && pi == r_; i++)
      for (size_t j = top; j < c_; j++)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == r_) break;
    for (size_t j = 0; j < c_; j++) std::swap(m.at(pi, j), m.at(top, j));
    for (size_t i = 0; i < r_; i++) std::swap(m.at(i, pj), m.at(i, top));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = top + 1; i < r_; i++) {
        if (m.at(i, top) == 0) continue;
        Int q = m.at(i, top) / m.at(top, top);
        for (size_t j = 0; j < c_; j++) m.at(i, j) -= q * m.at(top, j);
        if (m.at(i, top) != 0) {
          for (size_t j = 0; j < c_; j++) std::swap(m.at(i, j), m.at(top, j));
          clean = false;
        }
      }
      for (size_t j = top + 1; j < c_; j++) {
        if (m.at(top, j) == 0) continue;
        Int q = m.at(top, j) / m.at(top, top);
        for (size_t i = 0; i < r_; i++) m.at(i, j) -= q * m.at(i, top);
        if (m.at(top, j) != 0) {
          for (size_t i = 0; i < r_; i++) std::swap(m.at(i, j), m.at(i, top));
          clean = false;
        }
      }
    }
    diag.push_back(abs(m.at(top, top)));
    top++;
  }
  // Enforce the divisibility chain.
  for (size_t i = 0; i + 1 < diag.size(); i++)
    for (size_t j = i + 1; j < diag.size(); j++) {
      if (diag[i] == 0) std::swap(diag[i], diag[j]);
      if (diag[j] % diag[i] != 0) {
        Int g = gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  while (diag.size() < n) diag.push_back(0);
  return diag;
}

ZMat::Signature ZMat::signature_symmetric() const {
  if (r_ != c_) throw internal_error("signature: square only");
  size_t n = r_;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) m[i][j] = Rat(at(i, j));
  std::vector<bool> done(n, false);
  Signature sig;
  size_t remaining = n;
  auto eliminate = [&](size_t k) {
    // Clear row/col k using the (now nonzero) diagonal pivot.
    for (size_t i = 0; i < n; i++) {
      if (done[i] || i == k || m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (size_t j = 0; j < n; j++) {
        if (done[j]) continue;
        m[i][j] -= f * m[k][j];
      }
      for (size_t j = 0; j < n; j++) {
        if (done[j]) continue;
        m[j][i] -= f * m[j][k];
      }
    }
  };
  while (remaining > 0) {
    // Prefer a nonzero diagonal pivot.
    size_t k = n;
    for (size_t i = 0; i < n; i++)
      if (!done[i] && m[i][i] != 0) {
        k = i;
        break;
      }
    if (k < n) {
      if (m[k][k] > 0)
        sig.pos++;
      else
        sig.neg++;
      eliminate(k);
      done[k] = true;
      remaining--;
      continue;
    }
    // All live diagonal entries are zero: find an off-diagonal pair.
    size_t a = n, b = n;
    for (size_t i = 0; i < n && a == n; i++) {
      if (done[i]) continue;
      for (size_t j = i + 1; j < n; j++)
        if (!done[j] && m[i][j] != 0) {
          a = i;
          b = j;
          break;
        }
    }
    if (a == n) {
      sig.zero += (int)remaining;
      break;
    }
    // Symmetric update a += b gives m[a][a] = 2 m[a][b] != 0; the hyperbolic
    // pair then contributes (+1,-1) through two ordinary pivot steps.
    for (size_t j = 0; j < n; j++)
      if (!done[j]) m[a][j] += m[b][j];
    for (size_t i = 0; i < n; i++)
      if (!done[i]) m[i][a] += m[i][b];
  }
  return sig;
}

std::optional<std::vector<std::vector<Rat>>> solve_rational(
    const ZMat& a, const std::vector<std::vector<Int>>& rhs_cols) {
  size_t r = a.rows(), c = a.cols(), k = rhs_cols.size();
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(c + k));
  for (size_t i = 0; i < r; i++) {
    for (size_t j = 0; j < c; j++) m[i][j] = Rat(a.at(i, j));
    for (size_t j = 0; j < k; j++) m[i][c + j] = Rat(rhs_cols[j][i]);
  }
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < c && row < r; col++) {
    size_t piv = r;
    for (size_t i = row; i < r; i++)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == r) continue;
    std::swap(m[piv], m[row]);
    Rat inv = 1 / m[row][col];
    for (size_t j = col; j < c + k; j++) m[row][j] *= inv;
    for (size_t i = 0; i < r; i++) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j < c + k; j++) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    row++;
  }
  for (size_t i = row; i < r; i++)
    for (size_t j = 0; j < k; j++)
      if (m[i][c + j] != 0) return std::nullopt;
  std::vector<std::vector<Rat>> x(k, std::vector<Rat>(c, Rat(0)));
  for (size_t i = 0; i < pivot_col.size(); i++)
    for (size_t j = 0; j < k; j++) x[j][pivot_col[i]] = m[i][c + j];
  return x;
}

// ---------------------------------------------------------------------------
// FpMat

FpMat FpMat::identity(size_t n, uint32_t p) {
  FpMat m(n, n, p);
  for (size_t i = 0; i < n; i++) m.at(i, i) = 1 % p;
  return m;
}

FpMat FpMat::from_int(const ZMat& m, uint32_t p) {
  FpMat r(m.rows(), m.cols(), p);
  for (size_t i = 0; i < m.rows(); i++)
    for (size_t j = 0; j < m.cols(); j++) {
      Int v = m.at(i, j) % (long)p;
      long x = v.get_si();
      if (x < 0) x += p;
      r.at(i, j) = (uint32_t)x;
    }
  return r;
}

void FpMat::check(const FpMat& o) const {
  if (p_ != o.p_) throw ring_mismatch("FpMat modulus mismatch");
}

FpMat FpMat::operator*(const FpMat& o) const {
  check(o);
  if (c_ != o.r_) throw internal_error("FpMat dim mismatch");
  FpMat r(r_, o.c_, p_);
  for (size_t i = 0; i < r_; i++)
    for (size_t k = 0; k < c_; k++) {
      uint64_t v = at(i, k);
      if (!v) continue;
      for (size_t j = 0; j < o.c_; j++)
        r.at(i, j) = (uint32_t)((r.at(i, j) + v * o.at(k, j)) % p_);
    }
  return r;
}
FpMat FpMat::operator+(const FpMat& o) const {
  check(o);
  FpMat r(r_, c_, p_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = (a_[i] + o.a_[i]) % p_;
  return r;
}
FpMat FpMat::operator-(const FpMat& o) const {
  check(o);
  FpMat r(r_, c_, p_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
  return r;
}
FpMat FpMat::transposed() const {
  FpMat r(c_, r_, p_);
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < c_; j++) r.at(j, i) = at(i, j);
  return r;
}
uint32_t FpMat::trace() const {
  uint64_t s = 0;
  for (size_t i = 0; i < std::min(r_, c_); i++) s += at(i, i);
  return (uint32_t)(s % p_);
}
bool FpMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](uint32_t x) { return x == 0; });
}

namespace {
// Row echelon over F_p; returns pivot columns. aug = augmented width kept
// in-place at the right end of each row.
size_t rref(std::vector<std::vector<uint32_t>>& m, uint32_t p, size_t cols,
            std::vector<size_t>* pivots) {
  size_t rows = m.size();
  size_t row = 0;
  size_t width = rows ? m[0].size() : 0;
  for (size_t col = 0; col < cols && row < rows; col++) {
    size_t piv = rows;
    for (size_t i = row; i < rows; i++)
      if (m[i][col]) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    uint64_t inv = fp_inv(m[row][col], p);
    for (size_t j = col; j < width; j++)
      m[row][j] = (uint32_t)(m[row][j] * inv % p);
    for (size_t i = 0; i < rows; i++) {
      if (i == row || !m[i][col]) continue;
      uint64_t f = p - m[i][col];
      for (size_t j = col; j < width; j++)
        m[i][j] = (uint32_t)((m[i][j] + f * m[row][j]) % p);
    }
    if (pivots) pivots->push_back(col);
    row++;
  }
  return row;
}
}  // namespace

size_t FpMat::rank() const {
  std::vector<std::vector<uint32_t>> m(r_, std::vector<uint32_t>(c_));
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < c_; j++) m[i][j] = at(i, j);
  return rref(m, p_, c_, nullptr);
}

FpMat FpMat::kernel_basis() const {
  std::vector<std::vector<uint32_t>> m(r_, std::vector<uint32_t>(c_));
  for (size_t i = 0; i < r_; i++)
    for (size_t j = 0; j < c_; j++) m[i][j] = at(i, j);
  std::vector<size_t> pivots;
  size_t rank = rref(m, p_, c_, &pivots);
  std::vector<size_t> free_cols;
  {
    size_t pi = 0;
    for (size_t j = 0; j < c_; j++) {
      if (pi < pivots.size() && pivots[pi] == j)
        pi++;
      else
        free_cols.push_back(j);
    }
  }
  FpMat k(c_, free_cols.size(), p_);
  for (size_t idx = 0; idx < free_cols.size(); idx++) {
    size_t f = free_cols[idx];
    k.at(f, idx) = 1;
    for (size_t i = 0; i < rank; i++) {
      uint32_t v = m[i][f];
      if (v) k.at(pivots[i], idx) = (p_ - v) % p_;
    }
  }
  return k;
}

std::optional<FpMat> FpMat::solve(const FpMat& b) const {
  check(b);
  if (b.rows() != r_) throw internal_error("FpMat solve dim mismatch");
  size_t k = b.cols();
  std::vector<std::vector<uint32_t>> m(r_, std::vector<uint32_t>(c_ + k));
  for (size_t i = 0; i < r_; i++) {
    for (size_t j = 0; j < c_; j++) m[i][j] = at(i, j);
    for (size_t j = 0; j < k; j++) m[i][c_ + j] = b.at(i, j);
  }
  std::vector<size_t> pivots;
  size_t rank = rref(m, p_, c_, &pivots);
  for (size_t i = rank; i < r_; i++)
    for (size_t j = 0; j < k; j++)
      if (m[i][c_ + j]) return std::nullopt;
  FpMat x(c_, k, p_);
  for (size_t i = 0; i < rank; i++)
    for (size_t j = 0; j < k; j++) x.at(pivots[i], j) = m[i][c_ + j];
  return x;
}

std::optional<FpMat> FpMat::inverse() const {
  if (r_ != c_) return std::nullopt;
  auto x = solve(identity(r_, p_));
  if (!x) return std::nullopt;
  if (!((*x) * (*this) == identity(r_, p_))) return std::nullopt;
  return x;
}

}  // namespace homtqft
