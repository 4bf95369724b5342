#include "homtqft/symplectic.hpp"

#include <fstream>
#include <sstream>

namespace homtqft {

ZMat symplectic_form(unsigned genus) {
  ZMat j(2 * genus, 2 * genus);
  for (unsigned h = 0; h < genus; h++) {
    j.at(2 * h, 2 * h + 1) = 1;
    j.at(2 * h + 1, 2 * h) = -1;
  }
  return j;
}

SpMatrix::SpMatrix(ZMat m, unsigned genus) : m_(std::move(m)), genus_(genus) {
  if (m_.rows() != 2 * genus || m_.cols() != 2 * genus)
    throw internal_error("SpMatrix: wrong dimensions");
  ZMat j = symplectic_form(genus);
  if (!(m_.transposed() * j * m_ == j))
    throw internal_error("SpMatrix: M^T J M != J");
}

SpMatrix SpMatrix::identity(unsigned genus) {
  return SpMatrix(ZMat::identity(2 * genus), genus);
}

SpMatrix SpMatrix::operator*(const SpMatrix& o) const {
  if (genus_ != o.genus_) throw ring_mismatch("genus mismatch");
  return SpMatrix(m_ * o.m_, genus_);
}

SpMatrix SpMatrix::inverse() const {
  // M^-1 = J^-1 M^T J for symplectic M; J^-1 = -J here.
  ZMat j = symplectic_form(genus_);
  ZMat mj = m_.transposed() * j;
  ZMat inv(2 * genus_, 2 * genus_);
  // -J * (M^T J) = J^T M^T J
  ZMat r = j.transposed() * mj;
  return SpMatrix(r, genus_);
}

SpMatrix transvection(const std::vector<Int>& c, unsigned genus) {
  return transvection_pow(c, 1, genus);
}

SpMatrix transvection_pow(const std::vector<Int>& c, long n, unsigned genus) {
  if (c.size() != 2 * genus) throw parse_error("curve vector has wrong length");
  // T^n = I + n c (Jc)^T  (nilpotent correction since <c,c> = 0).
  ZMat j = symplectic_form(genus);
  std::vector<Int> jc(2 * genus, 0);
  for (unsigned i = 0; i < 2 * genus; i++)
    for (unsigned k = 0; k < 2 * genus; k++) jc[i] += j.at(i, k) * c[k];
  ZMat t = ZMat::identity(2 * genus);
  for (unsigned i = 0; i < 2 * genus; i++)
    for (unsigned k = 0; k < 2 * genus; k++) t.at(i, k) += n * c[i] * jc[k];
  return SpMatrix(t, genus);
}

TwistWord parse_twist_word(const std::string& text) {
  TwistWord w;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    bool blank = true;
    for (char ch : line)
      if (!isspace((unsigned char)ch)) blank = false;
    if (blank) continue;
    size_t lb = line.find('[');
    size_t rb = line.find(']');
    size_t eq = line.find("exp");
    if (line.find("curve") == std::string::npos || lb == std::string::npos ||
        rb == std::string::npos || eq == std::string::npos || rb < lb)
      throw parse_error("twist word line not in 'curve = [..], exp = n' form: " +
                        line);
    std::vector<Int> c;
    std::string inner = line.substr(lb + 1, rb - lb - 1);
    for (auto& ch : inner)
      if (ch == ',') ch = ' ';
    std::istringstream cs(inner);
    std::string tok;
    while (cs >> tok) c.push_back(Int(tok));
    size_t eq2 = line.find('=', eq);
    if (eq2 == std::string::npos) throw parse_error("missing exponent: " + line);
    long n = std::stol(line.substr(eq2 + 1));
    if (c.empty()) throw parse_error("empty curve vector");
    if (w.twists.empty()) {
      if (c.size() % 2 != 0) throw parse_error("curve length must be 2g");
      w.genus = (unsigned)(c.size() / 2);
    } else if (c.size() != 2 * w.genus) {
      throw parse_error("inconsistent curve lengths in twist word");
    }
    w.twists.emplace_back(std::move(c), n);
  }
  if (w.twists.empty()) throw parse_error("empty twist word");
  return w;
}

TwistWord parse_twist_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open twist word file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_twist_word(ss.str());
}

SpMatrix word_to_sp(const TwistWord& w) {
  SpMatrix m = SpMatrix::identity(w.genus);
  for (auto& [c, n] : w.twists) m = m * transvection_pow(c, n, w.genus);
  return m;
}

std::vector<BladeMask> degree_blades(unsigned genus, unsigned j) {
  std::vector<BladeMask> out;
  if (j > 2 * genus) return out;
  BladeMask full = (genus == 16) ? ~BladeMask(0) : ((BladeMask(1) << (2 * genus)) - 1);
  for (BladeMask m = 0; m <= full; m++) {
    if (blade_degree(m) == j) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

MultiVector column_multivector(const SpMatrix& m, unsigned slot, RingTag tag) {
  MultiVector v(m.genus(), tag);
  for (unsigned i = 0; i < 2 * m.genus(); i++) {
    const Int& e = m.mat().at(i, slot);
    if (e == 0) continue;
    RingElement c;
    switch (tag.kind) {
      case RingKind::Integer:
        c = e;
        break;
      case RingKind::ModP:
        c = FpScalar::from_int(e, tag.p);
        break;
      case RingKind::Laurent:
        c = LaurentPoly::constant(e);
        break;
      default:
        throw internal_error("unsupported coefficient ring for homology action");
    }
    if (!ring_is_zero(c)) v.add_term(BladeMask(1) << i, c);
  }
  return v;
}

MultiVector apply_exterior(const SpMatrix& m, const MultiVector& v) {
  MultiVector out(v.genus(), v.tag());
  for (auto& [mask, c] : v.terms()) {
    MultiVector w = MultiVector::unit(v.genus(), v.tag());
    BladeMask rest = mask;
    while (rest && !w.is_zero()) {
      unsigned s = (unsigned)__builtin_ctz(rest);
      rest &= rest - 1;
      w = wedge(w, column_multivector(m, s, v.tag()));
    }
    out = out + w.scaled(c);
  }
  return out;
}

ZMat induced_exterior(const SpMatrix& m, unsigned j) {
  unsigned g = m.genus();
  if (j > 2 * g) throw parse_error("exterior degree out of range");
  auto blades = degree_blades(g, j);
  std::map<BladeMask, size_t> index;
  for (size_t i = 0; i < blades.size(); i++) index[blades[i]] = i;
  ZMat r(blades.size(), blades.size());
  RingTag ztag{RingKind::Integer, 0};
  for (size_t col = 0; col < blades.size(); col++) {
    MultiVector img =
        apply_exterior(m, MultiVector::blade(g, ztag, blades[col]));
    for (auto& [mask, c] : img.terms())
      r.at(index.at(mask), col) = std::get<Int>(c);
  }
  return r;
}

}  // namespace homtqft
