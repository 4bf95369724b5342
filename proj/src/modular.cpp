#include "homtqft/modular.hpp"

#include <sstream>

namespace homtqft {

const ModularClass& modular_class(unsigned m, unsigned r, uint32_t p) {
  static std::map<std::tuple<unsigned, unsigned, uint32_t>, ModularClass> cache;
  auto key = std::make_tuple(m, r, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const WeightClassZ& z = weight_class(m, r);
  ModularClass c;
  c.m = m;
  c.r = r;
  c.p = p;
  c.kernel = FpMat::from_int(z.kernel, p);
  if (c.kernel.cols() > 0 && c.kernel.rank() != c.kernel.cols())
    throw internal_error("saturation violated: kernel degenerates mod p");
  c.gram = c.kernel.transposed() * c.kernel;
  c.gram_rank = c.gram.rank();
  c.radical = c.gram.kernel_basis();
  cache[key] = std::move(c);
  return cache[key];
}

const FpMat& modular_e_on_kernels(unsigned m, unsigned r, unsigned e,
                                  uint32_t p) {
  static std::map<std::tuple<unsigned, unsigned, unsigned, uint32_t>, FpMat>
      cache;
  auto key = std::make_tuple(m, r, e, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const ModularClass& src = modular_class(m, r, p);
  const ModularClass& dst = modular_class(m, r + e, p);
  FpMat image = FpMat::from_int(e_power_local(m, r, e), p) * src.kernel;
  auto sol = dst.kernel.solve(image);
  if (!sol)
    throw internal_error("E-power map not well defined on reduced kernels");
  cache[key] = std::move(*sol);
  return cache[key];
}

size_t ModularComponent::dim() const { return basis ? basis->dim() : 0; }

size_t ModularComponent::rank_gram() const {
  size_t s = 0;
  for (auto* c : classes) s += c->gram_rank;
  return s;
}

FpMat ModularComponent::gram_global() const {
  size_t n = dim();
  FpMat gmat(n, n, p);
  size_t off = 0;
  for (auto* c : classes) {
    size_t d = c->gram.rows();
    for (size_t i = 0; i < d; i++)
      for (size_t jx = 0; jx < d; jx++) gmat.at(off + i, off + jx) = c->gram.at(i, jx);
    off += d;
  }
  return gmat;
}

FpMat ModularComponent::radical_global() const {
  size_t n = dim();
  size_t total = n - rank_gram();
  FpMat rmat(n, total, p);
  size_t roff = 0, coff = 0;
  for (auto* c : classes) {
    for (size_t i = 0; i < c->radical.rows(); i++)
      for (size_t jx = 0; jx < c->radical.cols(); jx++)
        rmat.at(roff + i, coff + jx) = c->radical.at(i, jx);
    roff += c->radical.rows();
    coff += c->radical.cols();
  }
  return rmat;
}

MultiVector ModularComponent::vector(size_t idx) const {
  return basis->vector(idx, RingTag{RingKind::ModP, p});
}

ModularComponent reduce_component(unsigned g, unsigned j, uint32_t p) {
  ModularComponent c;
  c.g = g;
  c.j = j;
  c.p = p;
  c.basis = &primitive_basis(g, j);
  for (auto& blk : c.basis->blocks)
    c.classes.push_back(&modular_class(blk.m, blk.r, p));
  return c;
}

FpMat ek_map(unsigned g, unsigned j, unsigned kpow, uint32_t p) {
  if (kpow == 0 || kpow >= p)
    throw parse_error("E-power exponent must satisfy 0 < k < p");
  if (j % p != kpow % p)
    throw parse_error("E^k requires j == k mod p");
  const PrimitiveBasis& src = primitive_basis(g, j);
  const PrimitiveBasis& dst = primitive_basis(g, j - 2 * kpow);
  FpMat out(dst.dim(), src.dim(), p);
  // Match blocks by weight vector; both bases enumerate weights in the same
  // deterministic order, so a merge walk suffices.
  size_t scol = 0;
  size_t di = 0;
  size_t doff = 0;
  for (auto& sblk : src.blocks) {
    while (di < dst.blocks.size() && dst.blocks[di].lam < sblk.lam) {
      doff += dst.blocks[di].cls->dim();
      di++;
    }
    size_t sdim = sblk.cls->dim();
    bool matched = di < dst.blocks.size() && !(sblk.lam < dst.blocks[di].lam) &&
                   !(dst.blocks[di].lam < sblk.lam);
    const FpMat& l = modular_e_on_kernels(sblk.m, sblk.r, kpow, p);
    if (matched) {
      for (size_t i = 0; i < l.rows(); i++)
        for (size_t jx = 0; jx < l.cols(); jx++)
          out.at(doff + i, scol + jx) = l.at(i, jx);
    } else if (!l.is_zero()) {
      throw internal_error("E-power image hits a vanishing component");
    }
    scol += sdim;
  }
  return out;
}

// ---------------------------------------------------------------------------

FpMat QuotientSpace::to_quotient(const FpMat& cols) const {
  FpMat full = mix_inv * cols;
  FpMat q(dim(), cols.cols(), p);
  for (size_t i = 0; i < dim(); i++)
    for (size_t jx = 0; jx < cols.cols(); jx++) q.at(i, jx) = full.at(i, jx);
  return q;
}

FpMat QuotientSpace::lift_cols(const FpMat& qcols) const {
  FpMat v(ambient, qcols.cols(), p);
  for (size_t i = 0; i < dim(); i++)
    for (size_t jx = 0; jx < qcols.cols(); jx++)
      v.at(complement[i], jx) = qcols.at(i, jx);
  return v;
}

FpMat QuotientSpace::induced(const FpMat& x) const {
  if (radical.cols() > 0) {
    FpMat xr = x * radical;
    auto sol = radical.solve(xr);
    if (!sol) throw internal_error("action does not preserve the null space");
  }
  FpMat lifted = lift_cols(FpMat::identity(dim(), p));
  return to_quotient(x * lifted);
}

QuotientSpace null_quotient(const ModularComponent& c) {
  QuotientSpace q;
  q.g = c.g;
  q.j = c.j;
  q.p = c.p;
  q.ambient = c.dim();
  q.radical = c.radical_global();
  size_t n0 = q.radical.cols();
  // complement = non-pivot coordinates of the radical column space
  std::vector<bool> pivot(q.ambient, false);
  if (n0 > 0) {
    FpMat rt = q.radical.transposed();
    // row echelon to find pivot columns of radical^T (i.e. coordinates)
    std::vector<std::vector<uint32_t>> m(rt.rows(),
                                         std::vector<uint32_t>(rt.cols()));
    for (size_t i = 0; i < rt.rows(); i++)
      for (size_t jx = 0; jx < rt.cols(); jx++) m[i][jx] = rt.at(i, jx);
    size_t row = 0;
    for (size_t col = 0; col < rt.cols() && row < m.size(); col++) {
      size_t piv = m.size();
      for (size_t i = row; i < m.size(); i++)
        if (m[i][col]) {
          piv = i;
          break;
        }
      if (piv == m.size()) continue;
      std::swap(m[piv], m[row]);
      uint64_t inv = fp_inv(m[row][col], c.p);
      for (size_t jx = col; jx < rt.cols(); jx++)
        m[row][jx] = (uint32_t)(m[row][jx] * inv % c.p);
      for (size_t i = 0; i < m.size(); i++) {
        if (i == row || !m[i][col]) continue;
        uint64_t f = c.p - m[i][col];
        for (size_t jx = col; jx < rt.cols(); jx++)
          m[i][jx] = (uint32_t)((m[i][jx] + f * m[row][jx]) % c.p);
      }
      pivot[col] = true;
      row++;
    }
  }
  for (size_t i = 0; i < q.ambient; i++)
    if (!pivot[i]) q.complement.push_back(i);
  // mix = [E_C | radical]
  FpMat mix(q.ambient, q.ambient, c.p);
  for (size_t jx = 0; jx < q.complement.size(); jx++)
    mix.at(q.complement[jx], jx) = 1;
  for (size_t jx = 0; jx < n0; jx++)
    for (size_t i = 0; i < q.ambient; i++)
      mix.at(i, q.complement.size() + jx) = q.radical.at(i, jx);
  auto inv = mix.inverse();
  if (!inv) throw internal_error("null quotient complement is degenerate");
  q.mix_inv = std::move(*inv);
  return q;
}

// ---------------------------------------------------------------------------

unsigned complex_stage_index(uint32_t p, unsigned k, unsigned i) {
  return (i % 2 == 0) ? i * p + k : (i + 1) * p - k;
}

ComplexReport complex_check(uint32_t p, unsigned k, unsigned g) {
  if (k == 0 || k >= p) throw parse_error("complex requires 0 < k < p");
  ComplexReport rep;
  rep.p = p;
  rep.k = k;
  rep.g = g;

  // Stages up to and including the first vanishing one.
  std::vector<unsigned> cs;
  for (unsigned i = 0;; i++) {
    unsigned c = complex_stage_index(p, k, i);
    cs.push_back(c);
    if (dim_V(g, c) == 0) break;
    if (i > 64) throw internal_error("complex fails to terminate");
  }
  rep.stage_indices = cs;
  size_t nstages = cs.size();

  std::vector<StageReport> stages(nstages);
  for (size_t i = 0; i < nstages; i++) {
    stages[i].c = cs[i];
    stages[i].degree = (int)g - (int)cs[i] + 1;
    Int d = dim_V(g, cs[i]);
    stages[i].dim = (size_t)d.get_ui();
  }

  // Per weight space: dims and ranks, aggregated.
  for (const auto& lam : all_weights(g)) {
    rep.weight_spaces_checked++;
    unsigned s = lam.support();
    unsigned m = lam.zeros();
    auto r_of = [&](size_t i) -> std::optional<unsigned> {
      int deg = stages[i].degree;
      if (deg < (int)s || (deg - (int)s) % 2 != 0) return std::nullopt;
      unsigned r = (unsigned)((deg - (int)s) / 2);
      if (r > m) return std::nullopt;
      return r;
    };
    auto dim_of = [&](size_t i) -> size_t {
      auto r = r_of(i);
      if (!r) return 0;
      return weight_class(m, *r).dim();
    };
    // maps mu_i : stage i -> stage i-1, exponent e_i
    auto map_rank = [&](size_t i) -> size_t {  // rank of mu_i
      if (i >= nstages || dim_of(i) == 0) return 0;
      auto rs = r_of(i);
      auto rd = r_of(i - 1);
      if (!rs || !rd) return 0;
      unsigned e = (unsigned)((cs[i] - cs[i - 1]) / 2);
      return modular_e_on_kernels(m, *rs, e, p).rank();
    };
    for (size_t i = 0; i < nstages; i++) {
      size_t d = dim_of(i);
      size_t rin = map_rank(i + 1);
      size_t rout;
      if (i == 0) {
        // The outgoing map of stage 0 is the projection onto the null-space
        // quotient; its rank is the gram rank.
        auto r0 = r_of(0);
        rout = r0 ? modular_class(m, *r0, p).gram_rank : 0;
      } else {
        rout = map_rank(i);
      }
      stages[i].rank_in += rin;
      stages[i].rank_out += rout;
      bool ok = (rin + rout == d);
      if (!ok) {
        stages[i].exact = false;
        rep.exact = false;
        std::ostringstream os;
        os << "stage c=" << cs[i] << " weight (+" << lam.plus << ",-"
           << lam.minus << "): rank_in " << rin << " + rank_out " << rout
           << " != dim " << d;
        rep.failures.push_back(os.str());
      }
      // composite must vanish: checked at class level
      if (i >= 1 && i + 1 < nstages && dim_of(i) > 0 && dim_of(i + 1) > 0) {
        auto rs = r_of(i);
        auto rs_in = r_of(i + 1);
        unsigned e_out = (unsigned)((cs[i] - cs[i - 1]) / 2);
        unsigned e_in = (unsigned)((cs[i + 1] - cs[i]) / 2);
        const FpMat& min_ = modular_e_on_kernels(m, *rs_in, e_in, p);
        const FpMat& mout = modular_e_on_kernels(m, *rs, e_out, p);
        if (!(mout * min_).is_zero()) {
          stages[i].exact = false;
          rep.exact = false;
          rep.failures.push_back("composite of consecutive maps nonzero");
        }
      }
      // stage 0 extra condition: image of mu_1 lies in the gram radical
      if (i == 0 && dim_of(0) > 0 && nstages > 1 && dim_of(1) > 0) {
        auto r0 = r_of(0);
        auto r1 = r_of(1);
        if (r0 && r1) {
          unsigned e1 = (unsigned)((cs[1] - cs[0]) / 2);
          const FpMat& m1 = modular_e_on_kernels(m, *r1, e1, p);
          const FpMat& gmat = modular_class(m, *r0, p).gram;
          if (!(gmat * m1).is_zero()) {
            stages[0].exact = false;
            rep.exact = false;
            rep.failures.push_back("image of first map not in the null space");
          }
        }
      }
    }
  }
  rep.stages = std::move(stages);
  return rep;
}

VbarDims vbar_dim(unsigned g, unsigned k, uint32_t p) {
  VbarDims out;
  ModularComponent c = reduce_component(g, k, p);
  out.rank_gram = c.rank_gram();
  Int alt = 0;
  for (unsigned i = 0;; i++) {
    unsigned ci = complex_stage_index(p, k, i);
    Int d = dim_V(g, ci);
    if (d == 0) break;
    if (i % 2 == 0)
      alt += d;
    else
      alt -= d;
  }
  out.alternating = alt;
  out.agree = (Int((long)out.rank_gram) == alt);
  return out;
}

// ---------------------------------------------------------------------------

FpMat restrict_to_primitive_modp(const SpMatrix& phi,
                                 const PrimitiveBasis& basis, uint32_t p) {
  size_t n = basis.dim();
  FpMat x(n, n, p);
  if (n == 0) return x;
  RingTag tag{RingKind::ModP, p};
  unsigned g = basis.g;

  std::vector<MultiVector> vecs = basis.vectors(tag);
  std::vector<MultiVector> images;
  images.reserve(n);
  for (size_t i = 0; i < n; i++)
    images.push_back(apply_exterior(phi, vecs[i]));

  size_t row0 = 0;
  for (size_t bi = 0; bi < basis.blocks.size(); bi++) {
    const auto& blk = basis.blocks[bi];
    const ModularClass& cls = modular_class(blk.m, blk.r, p);
    size_t d = cls.kernel.cols();
    std::map<BladeMask, size_t> bindex;
    for (size_t i = 0; i < blk.blades.size(); i++) bindex[blk.blades[i]] = i;
    FpMat rhs(blk.blades.size(), n, p);
    for (size_t col = 0; col < n; col++)
      for (auto& [mask, cc] : images[col].terms()) {
        auto it = bindex.find(mask);
        if (it != bindex.end()) rhs.at(it->second, col) = std::get<FpScalar>(cc).v;
      }
    auto sol = cls.kernel.solve(rhs);
    if (!sol) throw internal_error("mod-p basis solve failed");
    for (size_t i = 0; i < d; i++)
      for (size_t col = 0; col < n; col++) x.at(row0 + i, col) = sol->at(i, col);
    row0 += d;
  }

  // Verify the image really lies in the span (all blade coordinates match).
  for (size_t col = 0; col < n; col++) {
    MultiVector recon(g, tag);
    for (size_t i = 0; i < n; i++) {
      if (x.at(i, col) == 0) continue;
      recon = recon + vecs[i].scaled((long long)x.at(i, col));
    }
    if (!(recon == images[col]))
      throw internal_error("mod-p image left the primitive span");
  }
  return x;
}

FpScalar vbar_trace(const SpMatrix& phi, unsigned g, unsigned k, uint32_t p) {
  const PrimitiveBasis& basis = primitive_basis(g, k);
  if (basis.dim() == 0) return FpScalar(0, p);
  FpMat x = restrict_to_primitive_modp(phi, basis, p);
  ModularComponent comp = reduce_component(g, k, p);
  FpMat rad = comp.radical_global();
  long long tr = x.trace();
  if (rad.cols() > 0) {
    FpMat xr = x * rad;
    auto y = rad.solve(xr);
    if (!y) throw internal_error("action does not preserve the null space");
    tr -= y->trace();
  }
  return FpScalar(tr, p);
}

CycModP modular_alexander(const SpMatrix& phi, uint32_t p, char sign) {
  if (sign != '+' && sign != '-') throw parse_error("sign must be + or -");
  unsigned g = phi.genus();
  CycModP q = CycModP::zeta(p);
  if (sign == '-') q = -q;
  CycModP result(p);
  RingElement qe = q;
  for (unsigned k = 1; k <= p - 1; k++) {
    if (dim_V(g, k) == 0) continue;
    FpScalar tr = vbar_trace(phi, g, k, p);
    RingElement term = quantum_integer((int)k, qe);
    result = result + std::get<CycModP>(term).scaled((long long)tr.v);
  }
  return result;
}

std::vector<uint32_t> y_expand(const CycModP& v) { return v.coeffs(); }

}  // namespace homtqft
