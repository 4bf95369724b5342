#include "homtqft/lefschetz.hpp"

#include <algorithm>

namespace homtqft {

Int fibonacci(unsigned n) {
  Int a = 0, b = 1;
  for (unsigned i = 0; i < n; i++) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return a;
}

Int catalan_number(long n, long j) { return binomial(n, j) - binomial(n, j - 1); }

std::vector<int> WeightVector::entries() const {
  std::vector<int> e(genus, 0);
  for (unsigned h = 0; h < genus; h++) {
    if (plus & (1u << h)) e[h] = 1;
    if (minus & (1u << h)) e[h] = -1;
  }
  return e;
}

std::vector<WeightVector> all_weights(unsigned genus) {
  std::vector<WeightVector> out;
  uint32_t full = (genus == 0) ? 0 : (1u << genus) - 1;
  for (uint32_t plus = 0;; plus++) {
    if (plus > full) break;
    uint32_t rest = full & ~plus;
    // iterate minus over subsets of rest
    uint32_t minus = 0;
    while (true) {
      out.push_back({plus, minus, genus});
      if (minus == rest) break;
      minus = (minus - rest) & rest;
    }
    if (plus == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BladeMask> weight_space_blades(unsigned genus, unsigned j,
                                           const WeightVector& lam) {
  std::vector<BladeMask> out;
  unsigned s = lam.support();
  if (j < s || (j - s) % 2 != 0) return out;
  unsigned r = (j - s) / 2;
  unsigned m = genus - s;
  if (r > m) return out;
  BladeMask fixed = 0;
  std::vector<unsigned> zero_handles;
  for (unsigned h = 0; h < genus; h++) {
    if (lam.plus & (1u << h))
      fixed |= slot_a(h);
    else if (lam.minus & (1u << h))
      fixed |= slot_b(h);
    else
      zero_handles.push_back(h);
  }
  const WeightClassZ& cls = weight_class(m, r);
  out.reserve(cls.subsets.size());
  for (uint32_t sub : cls.subsets) {
    BladeMask mask = fixed;
    uint32_t rest = sub;
    while (rest) {
      unsigned i = (unsigned)__builtin_ctz(rest);
      rest &= rest - 1;
      mask |= handle_pair(zero_handles[i]);
    }
    out.push_back(mask);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<uint32_t> subsets_of_size(unsigned m, unsigned r) {
  std::vector<uint32_t> out;
  uint32_t full = (m == 0) ? 0 : (1u << m) - 1;
  for (uint32_t x = 0; x <= full; x++) {
    if ((unsigned)__builtin_popcount(x) == r) out.push_back(x);
    if (x == full) break;
  }
  return out;
}

}  // namespace

const std::vector<std::vector<Rat>>& WeightClassZ::left_inverse() const {
  if (!linv_) {
    // Solve kernel^T * P^T = I (any rational left inverse will do; results
    // are verified against the full system afterwards).
    size_t d = kernel.cols();
    std::vector<std::vector<Int>> rhs(d, std::vector<Int>(d, 0));
    for (size_t i = 0; i < d; i++) rhs[i][i] = 1;
    auto sol = solve_rational(kernel.transposed(), rhs);
    if (!sol) throw internal_error("kernel basis has deficient rank");
    // sol[i] is column i of P^T, i.e. row i of P.
    linv_ = std::make_shared<std::vector<std::vector<Rat>>>(std::move(*sol));
  }
  return *linv_;
}

const WeightClassZ& weight_class(unsigned m, unsigned r) {
  static std::map<std::pair<unsigned, unsigned>, WeightClassZ> cache;
  auto key = std::make_pair(m, r);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  WeightClassZ cls;
  cls.m = m;
  cls.r = r;
  cls.subsets = subsets_of_size(m, r);
  if (r > m) {
    cls.kernel = ZMat(0, 0);
    cache[key] = std::move(cls);
    return cache[key];
  }
  auto targets = subsets_of_size(m, r == 0 ? 0 : r - 1);
  if (r == 0) {
    // F vanishes on the bottom layer.
    cls.kernel = ZMat::identity(cls.subsets.size());
  } else {
    std::map<uint32_t, size_t> tindex;
    for (size_t i = 0; i < targets.size(); i++) tindex[targets[i]] = i;
    ZMat f(targets.size(), cls.subsets.size());
    for (size_t col = 0; col < cls.subsets.size(); col++) {
      uint32_t s = cls.subsets[col];
      uint32_t rest = s;
      while (rest) {
        uint32_t bit = rest & (~rest + 1);
        rest &= rest - 1;
        f.at(tindex.at(s & ~bit), col) += 1;
      }
    }
    cls.kernel = f.kernel_basis();
  }
  Int expect = catalan_number(m, r);
  if (expect < 0) expect = 0;
  if (Int((long)cls.kernel.cols()) != expect)
    throw internal_error("weight class kernel dimension mismatch");
  cache[key] = std::move(cls);
  return cache[key];
}

ZMat e_power_local(unsigned m, unsigned r, unsigned k) {
  const auto& src = weight_class(m, r);
  const auto& dst = weight_class(m, r + k);
  std::map<uint32_t, size_t> dindex;
  for (size_t i = 0; i < dst.subsets.size(); i++) dindex[dst.subsets[i]] = i;
  ZMat e(dst.subsets.size(), src.subsets.size());
  Int factor = 1;
  for (unsigned i = 2; i <= k; i++) factor *= i;
  uint32_t full = (m == 0) ? 0 : (1u << m) - 1;
  for (size_t col = 0; col < src.subsets.size(); col++) {
    uint32_t s = src.subsets[col];
    uint32_t free = full & ~s;
    // enumerate k-subsets of free
    std::vector<unsigned> freelist;
    uint32_t rest = free;
    while (rest) {
      freelist.push_back((unsigned)__builtin_ctz(rest));
      rest &= rest - 1;
    }
    if (freelist.size() < k) continue;
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; i++) idx[i] = i;
    while (true) {
      uint32_t t = s;
      for (unsigned i = 0; i < k; i++) t |= 1u << freelist[idx[i]];
      e.at(dindex.at(t), col) += factor;
      // next combination
      int pos = (int)k - 1;
      while (pos >= 0 && idx[(size_t)pos] == freelist.size() - k + (unsigned)pos)
        pos--;
      if (pos < 0) break;
      idx[(size_t)pos]++;
      for (unsigned i = (unsigned)pos + 1; i < k; i++) idx[i] = idx[i - 1] + 1;
    }
  }
  return e;
}

// ---------------------------------------------------------------------------

size_t PrimitiveBasis::dim() const {
  size_t d = 0;
  for (auto& b : blocks) d += b.cls->dim();
  return d;
}

MultiVector PrimitiveBasis::vector(size_t idx, RingTag tag) const {
  for (auto& b : blocks) {
    size_t d = b.cls->dim();
    if (idx >= d) {
      idx -= d;
      continue;
    }
    MultiVector v((unsigned)g, tag);
    for (size_t row = 0; row < b.blades.size(); row++) {
      const Int& c = b.cls->kernel.at(row, idx);
      if (c == 0) continue;
      RingElement e;
      if (tag.kind == RingKind::Integer)
        e = c;
      else if (tag.kind == RingKind::ModP)
        e = FpScalar::from_int(c, tag.p);
      else
        throw internal_error("unsupported tag for primitive vector");
      if (!ring_is_zero(e)) v.add_term(b.blades[row], e);
    }
    return v;
  }
  throw internal_error("primitive basis index out of range");
}

std::vector<MultiVector> PrimitiveBasis::vectors(RingTag tag) const {
  std::vector<MultiVector> out;
  for (size_t i = 0; i < dim(); i++) out.push_back(vector(i, tag));
  return out;
}

const PrimitiveBasis& primitive_basis(unsigned g, unsigned k) {
  static std::map<std::pair<unsigned, unsigned>, PrimitiveBasis> cache;
  auto key = std::make_pair(g, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PrimitiveBasis basis;
  basis.g = g;
  basis.k = k;
  int degree = (int)g - (int)k + 1;
  basis.degree = degree;
  if (k >= 1 && degree >= 0 && degree <= (int)(2 * g)) {
    for (const auto& lam : all_weights(g)) {
      unsigned s = lam.support();
      if ((unsigned)degree < s || ((unsigned)degree - s) % 2 != 0) continue;
      unsigned r = ((unsigned)degree - s) / 2;
      unsigned m = lam.zeros();
      if (r > m) continue;
      const WeightClassZ& cls = weight_class(m, r);
      if (cls.dim() == 0) continue;
      PrimitiveBlock blk;
      blk.lam = lam;
      blk.m = m;
      blk.r = r;
      blk.blades = weight_space_blades(g, (unsigned)degree, lam);
      blk.cls = &cls;
      basis.blocks.push_back(std::move(blk));
    }
  }
  cache[key] = std::move(basis);
  return cache[key];
}

Int dim_V(unsigned g, unsigned k) {
  long d = (long)g - (long)k + 1;
  return binomial(2 * (long)g, d) - binomial(2 * (long)g, d - 2);
}

Int weight_kernel_dim(unsigned genus, unsigned j, const WeightVector& lam) {
  unsigned s = lam.support();
  if (j < s || (j - s) % 2 != 0) return 0;
  unsigned r = (j - s) / 2;
  unsigned m = genus - s;
  if (r > m) return 0;
  Int c = catalan_number(m, r);
  return c < 0 ? Int(0) : c;
}

// ---------------------------------------------------------------------------

LaurentPoly fn_alexander(const SpMatrix& phi) {
  unsigned g = phi.genus();
  auto e = phi.mat().exterior_traces();
  LaurentPoly r;
  for (unsigned j = 0; j <= 2 * g; j++) {
    Int c = e[j];
    if (((long)j - (long)g) % 2 != 0) c = -c;
    r = r + LaurentPoly::monomial(c, (long)j - (long)g);
  }
  return r;
}

ZMat restrict_to_primitive(const SpMatrix& phi, const PrimitiveBasis& basis) {
  unsigned g = basis.g;
  size_t n = basis.dim();
  ZMat x(n, n);
  if (n == 0) return x;
  RingTag ztag{RingKind::Integer, 0};

  // Images of all basis vectors.
  std::vector<MultiVector> vecs = basis.vectors(ztag);
  std::vector<MultiVector> images;
  images.reserve(n);
  for (size_t i = 0; i < n; i++)
    images.push_back(apply_exterior(phi, vecs[i]));

  // Solve block-by-block with the cached rational left inverses, then verify
  // the full system exactly.
  size_t row0 = 0;
  for (auto& blk : basis.blocks) {
    const auto& linv = blk.cls->left_inverse();
    size_t d = blk.cls->dim();
    std::map<BladeMask, size_t> bindex;
    for (size_t i = 0; i < blk.blades.size(); i++) bindex[blk.blades[i]] = i;
    for (size_t col = 0; col < n; col++) {
      // coordinates of image col on this block's blades
      std::vector<Int> w(blk.blades.size(), 0);
      for (auto& [mask, c] : images[col].terms()) {
        auto it = bindex.find(mask);
        if (it != bindex.end()) w[it->second] = std::get<Int>(c);
      }
      for (size_t i = 0; i < d; i++) {
        Rat s = 0;
        for (size_t jx = 0; jx < w.size(); jx++) {
          if (w[jx] == 0) continue;
          s += linv[i][jx] * Rat(w[jx]);
        }
        s.canonicalize();
        if (s.get_den() != 1)
          throw internal_error("primitive restriction is not integral");
        x.at(row0 + i, col) = s.get_num();
      }
    }
    row0 += d;
  }

  // Verification: B * X == images, including blades outside the basis span.
  for (size_t col = 0; col < n; col++) {
    MultiVector recon(g, ztag);
    for (size_t i = 0; i < n; i++) {
      if (x.at(i, col) == 0) continue;
      recon = recon + vecs[i].scaled(RingElement(x.at(i, col)));
    }
    if (!(recon == images[col]))
      throw internal_error("basis solve failure: image left the span");
  }
  return x;
}

LaurentPoly lefschetz_alexander(const SpMatrix& phi) {
  unsigned g = phi.genus();
  LaurentPoly sum;
  RingElement q = LaurentPoly::t(1);
  RingElement minus_t = ring_neg(q);
  for (unsigned k = 1; k <= g + 1; k++) {
    const PrimitiveBasis& basis = primitive_basis(g, k);
    if (basis.dim() == 0) continue;
    ZMat x = restrict_to_primitive(phi, basis);
    Int tr = x.trace();
    RingElement term =
        ring_mul(quantum_integer((int)k, minus_t), LaurentPoly::constant(tr));
    sum = sum + std::get<LaurentPoly>(term);
  }
  return sum;
}

}  // namespace homtqft
