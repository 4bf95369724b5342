#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "homtqft/intmat.hpp"
#include "homtqft/symplectic.hpp"

namespace homtqft {

Int fibonacci(unsigned n);
// c(n,j) = C(n,j) - C(n,j-1), literally (may be negative).
Int catalan_number(long n, long j);

// ---------------------------------------------------------------------------
// Weight vectors: per-handle content in {-1,0,+1}.  A blade has content +1 on
// a handle carrying a alone, -1 for b alone, 0 for both-or-neither.

struct WeightVector {
  uint32_t plus = 0;   // handles with +1
  uint32_t minus = 0;  // handles with -1
  unsigned genus = 0;

  unsigned support() const {
    return (unsigned)__builtin_popcount(plus | minus);
  }
  unsigned zeros() const { return genus - support(); }
  bool operator<(const WeightVector& o) const {
    if (plus != o.plus) return plus < o.plus;
    return minus < o.minus;
  }
  std::vector<int> entries() const;
};

// All weight vectors of a genus, deterministic order.
std::vector<WeightVector> all_weights(unsigned genus);

// Blades of degree j with the given content; empty when unrealizable.
std::vector<BladeMask> weight_space_blades(unsigned genus, unsigned j,
                                           const WeightVector& lam);

// ---------------------------------------------------------------------------
// Canonical weight-class data: the kernel of the lowering operator F on the
// span of r-subsets of m interchangeable zero-handles.  Identical for every
// weight vector with the same (m, r), so it is computed once and shared.

struct WeightClassZ {
  unsigned m = 0, r = 0;
  std::vector<uint32_t> subsets;  // r-subsets of [m] as masks, ascending
  ZMat kernel;                    // columns = saturated kernel basis
  size_t dim() const { return kernel.cols(); }

  // Rational left inverse of `kernel` (dim x subsets.size()), lazy.
  const std::vector<std::vector<Rat>>& left_inverse() const;

 private:
  mutable std::shared_ptr<std::vector<std::vector<Rat>>> linv_;
};

const WeightClassZ& weight_class(unsigned m, unsigned r);

// Matrix of E^k from the (m, r) class to the (m, r+k) class; entry k! on
// each superset (all signs +1 in this slot order).
ZMat e_power_local(unsigned m, unsigned r, unsigned k);

// ---------------------------------------------------------------------------
// Primitive components V^(k)(Sigma_g) = ker F in degree g-k+1.

struct PrimitiveBlock {
  WeightVector lam;
  unsigned m = 0, r = 0;
  std::vector<BladeMask> blades;  // global blades, in local subset order
  const WeightClassZ* cls = nullptr;
};

struct PrimitiveBasis {
  unsigned g = 0, k = 0;
  int degree = -1;  // g-k+1, negative means the component vanishes
  std::vector<PrimitiveBlock> blocks;

  size_t dim() const;
  // Global basis vector (blocks in order, vectors inside each block in order).
  MultiVector vector(size_t idx, RingTag tag) const;
  std::vector<MultiVector> vectors(RingTag tag) const;
};

const PrimitiveBasis& primitive_basis(unsigned g, unsigned k);

// C(2g, g-k+1) - C(2g, g-k-1), zero when k > g+1.
Int dim_V(unsigned g, unsigned k);

// dim of (ker F) intersected with the weight space of degree j.
Int weight_kernel_dim(unsigned genus, unsigned j, const WeightVector& lam);

// ---------------------------------------------------------------------------
// Alexander polynomials of mapping-cylinder cobordisms.

// sum_j (-t)^(j-g) tr(exterior power j of phi), via Newton's identities.
LaurentPoly fn_alexander(const SpMatrix& phi);

// sum_{k=1}^{g+1} [k]_{-t} tr(phi restricted to V^(k)); equals fn_alexander.
LaurentPoly lefschetz_alexander(const SpMatrix& phi);

// Matrix of the action of phi on the primitive basis (exact integer solve;
// throws internal_error when the solve fails, which would signal a
// non-saturated basis).
ZMat restrict_to_primitive(const SpMatrix& phi, const PrimitiveBasis& basis);

}  // namespace homtqft
