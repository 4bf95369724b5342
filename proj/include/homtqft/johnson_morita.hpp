#pragma once

#include "homtqft/modular.hpp"

namespace homtqft {

// J applied slotwise:  a_h -> -b_h,  b_h -> a_h (the symplectic
// identification used by the contraction map).
MultiVector apply_J_slotwise(const MultiVector& x);

// Contraction mu(x): degree j -> degree j-3, defined by
//   <a, mu(x) b> = <(Jx) ^ a, b>.
MultiVector mu_apply(const MultiVector& x, const MultiVector& v);

// Matrix of mu(x) from the degree-j blade basis to the degree-(j-3) basis.
ZMat mu_matrix(const MultiVector& x, unsigned j);

// Data for the extension representation on Vbar^(k) (+) Vbar^(k+3).
struct JmSpaces {
  unsigned g = 0, k = 0;
  uint32_t p = 0;
  ModularComponent comp_k, comp_k3;
  QuotientSpace quot_k, quot_k3;
};

JmSpaces jm_spaces(unsigned g, unsigned k, uint32_t p);

// Induced map Vbar^(k)_p -> Vbar^(k+3)_p of the contraction; defined via the
// inner form (solve gram * z = pairings).  Throws when the defining system is
// inconsistent or the source radical is not killed.
FpMat mu_on_quotients(const MultiVector& x, const JmSpaces& sp);

// Quotient action of phi on Vbar^(k)_p.
FpMat vbar_action(const SpMatrix& phi, const ModularComponent& comp,
                  const QuotientSpace& quot);

// Block matrix of (x, m):  [[m, 0], [mu(x) m, m]] acting on
// Vbar^(k) (+) Vbar^(k+3).
FpMat jm_rep(const MultiVector& x, const SpMatrix& m, const JmSpaces& sp);

// Semidirect product law used for the homomorphism checks:
// (x1, m1)(x2, m2) = (x1 + m1.x2, m1 m2).
MultiVector sp_on_cubic(const SpMatrix& m, const MultiVector& x);

}  // namespace homtqft
