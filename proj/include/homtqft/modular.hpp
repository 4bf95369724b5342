#pragma once

#include <string>
#include <vector>

#include "homtqft/lefschetz.hpp"

namespace homtqft {

// Canonical (m, r, p) reduction of a weight class: the saturated integer
// kernel reduced mod p (same dimension, by saturation), its Gram matrix in
// the orthonormal-blade pairing, and the radical of that form.
struct ModularClass {
  unsigned m = 0, r = 0;
  uint32_t p = 0;
  FpMat kernel;   // blades x dim
  FpMat gram;     // dim x dim, symmetric
  size_t gram_rank = 0;
  FpMat radical;  // dim x (dim - gram_rank), basis-coordinate columns
};

const ModularClass& modular_class(unsigned m, unsigned r, uint32_t p);

// E^e restricted to kernel bases: the matrix L with K_{m,r+e} L = E^e K_{m,r}
// over F_p.  Well-definedness (solvability) requires r+e-r == e and the
// congruence conditions of the modular theory; a solve failure throws.
const FpMat& modular_e_on_kernels(unsigned m, unsigned r, unsigned e, uint32_t p);

// F_p reduction of the full component V^(j)_p(Sigma_g).
struct ModularComponent {
  unsigned g = 0, j = 0;
  uint32_t p = 0;
  const PrimitiveBasis* basis = nullptr;
  std::vector<const ModularClass*> classes;  // parallel to basis->blocks

  size_t dim() const;
  size_t rank_gram() const;
  size_t radical_dim() const { return dim() - rank_gram(); }
  FpMat gram_global() const;
  FpMat radical_global() const;
  // basis vector as an F_p multivector
  MultiVector vector(size_t idx) const;
};

ModularComponent reduce_component(unsigned g, unsigned j, uint32_t p);

// Assembled matrix of E^kpow : V^(j)_p -> V^(j-2kpow)_p between the
// primitive bases (weight-preserving, block diagonal over weights).
FpMat ek_map(unsigned g, unsigned j, unsigned kpow, uint32_t p);

// ---------------------------------------------------------------------------
// Null-space quotients Vbar^(j)_p.

struct QuotientSpace {
  unsigned g = 0, j = 0;
  uint32_t p = 0;
  size_t ambient = 0;              // dim V^(j)_p
  FpMat radical;                   // ambient x n0
  std::vector<size_t> complement;  // coordinate lift of the quotient basis
  FpMat mix_inv;                   // inverse of [E_C | radical]

  size_t dim() const { return complement.size(); }
  FpMat to_quotient(const FpMat& cols) const;
  FpMat lift_cols(const FpMat& qcols) const;
  // Induced matrix of an ambient action that preserves the radical
  // (preservation is verified; violation throws).
  FpMat induced(const FpMat& x) const;
};

QuotientSpace null_quotient(const ModularComponent& c);

// ---------------------------------------------------------------------------
// Exactness of the complexes C(p,k).

struct StageReport {
  unsigned c = 0;    // component index of this stage
  int degree = 0;    // g - c + 1
  size_t dim = 0;
  size_t rank_in = 0;   // rank of the map arriving from the next stage
  size_t rank_out = 0;  // rank of the map leaving (stage 0: corank of gram)
  bool exact = true;
};

struct ComplexReport {
  uint32_t p = 0;
  unsigned k = 0, g = 0;
  std::vector<unsigned> stage_indices;  // c_0, c_1, ...
  std::vector<StageReport> stages;
  size_t weight_spaces_checked = 0;
  bool exact = true;
  std::vector<std::string> failures;
};

// c_i = i p + k for even i, (i+1) p - k for odd i.
unsigned complex_stage_index(uint32_t p, unsigned k, unsigned i);

ComplexReport complex_check(uint32_t p, unsigned k, unsigned g);

struct VbarDims {
  size_t rank_gram = 0;
  Int alternating = 0;
  bool agree = false;
};
VbarDims vbar_dim(unsigned g, unsigned k, uint32_t p);

// ---------------------------------------------------------------------------
// Modular Alexander image.

// Action of phi on V^(j)_p in the primitive basis, with exact verification
// that the image stays in the span.
FpMat restrict_to_primitive_modp(const SpMatrix& phi,
                                 const PrimitiveBasis& basis, uint32_t p);

// Trace of the induced action on Vbar^(k)_p (lift, apply, project).
FpScalar vbar_trace(const SpMatrix& phi, unsigned g, unsigned k, uint32_t p);

// sum_{k=1}^{p-1} [k]_{sign zeta_p} tr(Vbar^(k)_p action).  The '+' flavour
// uses [k] at +zeta_p and equals the integral trace formula evaluated at
// t = -zeta_p (that convention makes 2*Delta^+ match det(ker chi) mod y).
CycModP modular_alexander(const SpMatrix& phi, uint32_t p, char sign);

std::vector<uint32_t> y_expand(const CycModP& v);

}  // namespace homtqft
