#include "homtqft/johnson_morita.hpp"

namespace homtqft {

MultiVector apply_J_slotwise(const MultiVector& x) {
  MultiVector out(x.genus(), x.tag());
  for (auto& [mask, c] : x.terms()) {
    MultiVector w = MultiVector::unit(x.genus(), x.tag());
    BladeMask rest = mask;
    while (rest && !w.is_zero()) {
      unsigned s = (unsigned)__builtin_ctz(rest);
      rest &= rest - 1;
      MultiVector img(x.genus(), x.tag());
      if (s % 2 == 0)  // a_h -> -b_h
        img.add_term(BladeMask(1) << (s + 1),
                     ring_neg(ring_one(x.tag())));
      else  // b_h -> a_h
        img.add_term(BladeMask(1) << (s - 1), ring_one(x.tag()));
      w = wedge(w, img);
    }
    out = out + w.scaled(c);
  }
  return out;
}

MultiVector mu_apply(const MultiVector& x, const MultiVector& v) {
  check_compatible(x, v);
  MultiVector jx = apply_J_slotwise(x);
  MultiVector out(v.genus(), v.tag());
  // mu(x) b = sum over blades W of Jx contained in b of
  //   coeff_W * sign(W, b \ W) * (b \ W)
  for (auto& [wmask, wc] : jx.terms()) {
    for (auto& [bmask, bc] : v.terms()) {
      if ((bmask & wmask) != wmask) continue;
      BladeMask c = bmask & ~wmask;
      int sign = blade_merge_sign(wmask, c);
      RingElement coeff = ring_mul(wc, bc);
      if (sign < 0) coeff = ring_neg(coeff);
      out.add_term(c, coeff);
    }
  }
  return out;
}

ZMat mu_matrix(const MultiVector& x, unsigned j) {
  if (j < 3) throw parse_error("mu needs degree >= 3");
  unsigned g = x.genus();
  auto src = degree_blades(g, j);
  auto dst = degree_blades(g, j - 3);
  std::map<BladeMask, size_t> dindex;
  for (size_t i = 0; i < dst.size(); i++) dindex[dst[i]] = i;
  ZMat r(dst.size(), src.size());
  RingTag ztag{RingKind::Integer, 0};
  for (size_t col = 0; col < src.size(); col++) {
    MultiVector img = mu_apply(x, MultiVector::blade(g, ztag, src[col]));
    for (auto& [mask, c] : img.terms())
      r.at(dindex.at(mask), col) = std::get<Int>(c);
  }
  return r;
}

JmSpaces jm_spaces(unsigned g, unsigned k, uint32_t p) {
  if (k == 0 || k + 3 >= p)
    throw parse_error("extension requires 0 < k < p-3");
  JmSpaces sp;
  sp.g = g;
  sp.k = k;
  sp.p = p;
  sp.comp_k = reduce_component(g, k, p);
  sp.comp_k3 = reduce_component(g, k + 3, p);
  sp.quot_k = null_quotient(sp.comp_k);
  sp.quot_k3 = null_quotient(sp.comp_k3);
  return sp;
}

FpMat mu_on_quotients(const MultiVector& x, const JmSpaces& sp) {
  uint32_t p = sp.p;
  size_t nk = sp.comp_k.dim();
  size_t nk3 = sp.comp_k3.dim();
  // Pairings <mu(x) v_i, u_j>_p for all source basis vectors v_i and target
  // basis vectors u_j.
  FpMat rhs(nk3, nk, p);
  for (size_t i = 0; i < nk; i++) {
    MultiVector w = mu_apply(x, sp.comp_k.vector(i));
    for (size_t jx = 0; jx < nk3; jx++) {
      RingElement pr = inner_product(w, sp.comp_k3.vector(jx));
      rhs.at(jx, i) = std::get<FpScalar>(pr).v;
    }
  }
  // The source radical must be killed.
  FpMat radk = sp.comp_k.radical_global();
  if (radk.cols() > 0 && !(rhs * radk).is_zero())
    throw internal_error("contraction does not kill the source null space");
  // Solve gram_{k+3} z = rhs; solutions are quotient-well-defined.
  FpMat gram = sp.comp_k3.gram_global();
  auto z = gram.solve(rhs);
  if (!z) throw internal_error("contraction pairings not realizable");
  // Map into quotient coordinates, restricted to quotient basis lifts.
  FpMat zq = sp.quot_k3.to_quotient(*z);
  // Columns correspond to source basis vectors; restrict to the lifts of the
  // quotient basis of Vbar^(k).
  FpMat out(sp.quot_k3.dim(), sp.quot_k.dim(), p);
  for (size_t c = 0; c < sp.quot_k.dim(); c++) {
    size_t src_index = sp.quot_k.complement[c];
    for (size_t r = 0; r < sp.quot_k3.dim(); r++)
      out.at(r, c) = zq.at(r, src_index);
  }
  return out;
}

FpMat vbar_action(const SpMatrix& phi, const ModularComponent& comp,
                  const QuotientSpace& quot) {
  FpMat x = restrict_to_primitive_modp(phi, *comp.basis, comp.p);
  return quot.induced(x);
}

FpMat jm_rep(const MultiVector& x, const SpMatrix& m, const JmSpaces& sp) {
  FpMat a = vbar_action(m, sp.comp_k, sp.quot_k);
  FpMat d = vbar_action(m, sp.comp_k3, sp.quot_k3);
  FpMat mu = mu_on_quotients(x, sp);
  FpMat corner = mu * a;
  size_t qk = sp.quot_k.dim(), qk3 = sp.quot_k3.dim();
  FpMat out(qk + qk3, qk + qk3, sp.p);
  for (size_t i = 0; i < qk; i++)
    for (size_t j = 0; j < qk; j++) out.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < qk3; i++)
    for (size_t j = 0; j < qk3; j++) out.at(qk + i, qk + j) = d.at(i, j);
  for (size_t i = 0; i < qk3; i++)
    for (size_t j = 0; j < qk; j++) out.at(qk + i, j) = corner.at(i, j);
  return out;
}

MultiVector sp_on_cubic(const SpMatrix& m, const MultiVector& x) {
  return apply_exterior(m, x);
}

}  // namespace homtqft
