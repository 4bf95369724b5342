#include "homtqft/linkdiag.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace homtqft {

void FramedLinkDiagram::build_maps() const {
  if (maps_built_) return;
  comp_of_.clear();
  succ_.clear();
  for (size_t ci = 0; ci < components.size(); ci++) {
    const auto& arcs = components[ci];
    for (size_t i = 0; i < arcs.size(); i++) {
      if (comp_of_.count(arcs[i]))
        throw parse_error("arc listed in two components");
      comp_of_[arcs[i]] = (int)ci;
      succ_[arcs[i]] = arcs[(i + 1) % arcs.size()];
    }
  }
  maps_built_ = true;
}

int FramedLinkDiagram::component_of_arc(int arc) const {
  build_maps();
  auto it = comp_of_.find(arc);
  if (it == comp_of_.end()) throw parse_error("unknown arc label");
  return it->second;
}

int FramedLinkDiagram::arc_successor(int arc) const {
  build_maps();
  auto it = succ_.find(arc);
  if (it == succ_.end()) throw parse_error("unknown arc label");
  return it->second;
}

int FramedLinkDiagram::crossing_sign(size_t i) const {
  const auto& x = crossings.at(i).arcs;
  if (x[1] == x[3] || x[0] == x[2])
    throw parse_error("strand meets a crossing at opposite ports");
  bool b_in = arc_successor(x[1]) == x[3];
  bool d_in = arc_successor(x[3]) == x[1];
  if (b_in == d_in) throw parse_error("over-strand orientation inconsistent");
  return d_in ? +1 : -1;
}

long FramedLinkDiagram::self_writhe(int comp) const {
  long w = 0;
  for (size_t i = 0; i < crossings.size(); i++) {
    const auto& x = crossings[i].arcs;
    if (component_of_arc(x[0]) == comp && component_of_arc(x[1]) == comp)
      w += crossing_sign(i);
  }
  return w;
}

long FramedLinkDiagram::linking(int c1, int c2) const {
  long s = 0;
  for (size_t i = 0; i < crossings.size(); i++) {
    const auto& x = crossings[i].arcs;
    int cu = component_of_arc(x[0]);
    int co = component_of_arc(x[1]);
    if ((cu == c1 && co == c2) || (cu == c2 && co == c1)) s += crossing_sign(i);
  }
  if (s % 2 != 0) throw internal_error("odd crossing sign sum between comps");
  return s / 2;
}

ZMat FramedLinkDiagram::linking_matrix() const {
  size_t n = components.size();
  ZMat m(n, n);
  for (size_t i = 0; i < n; i++) {
    m.at(i, i) = framings.at(i);
    for (size_t j = i + 1; j < n; j++) {
      long l = linking((int)i, (int)j);
      m.at(i, j) = l;
      m.at(j, i) = l;
    }
  }
  return m;
}

void FramedLinkDiagram::validate() const {
  if (framings.size() != components.size())
    throw parse_error("framing count does not match component count");
  // Every arc appears exactly twice among crossing corners.
  std::map<int, int> count;
  for (auto& x : crossings)
    for (int a : x.arcs) count[a]++;
  std::set<int> comp_arcs;
  for (auto& c : components)
    for (int a : c) comp_arcs.insert(a);
  for (auto& [a, n] : count) {
    if (n != 2) throw parse_error("arc does not appear exactly twice");
    if (!comp_arcs.count(a)) throw parse_error("crossing arc not in any component");
  }
  for (int a : comp_arcs)
    if (!count.count(a)) throw parse_error("component arc missing from crossings");
  // Under-strand consistency and over-strand orientation.
  for (size_t i = 0; i < crossings.size(); i++) {
    const auto& x = crossings[i].arcs;
    if (arc_successor(x[0]) != x[2])
      throw parse_error("under strand of a crossing is not consecutive");
    crossing_sign(i);  // throws if inconsistent
  }
  // Rotation system must have genus zero (faces via sigma-alpha orbits).
  if (!crossings.empty()) {
    size_t n = crossings.size();
    // darts: 4 per crossing; alpha: other occurrence of the same arc
    std::map<int, std::vector<size_t>> occ;
    for (size_t i = 0; i < n; i++)
      for (size_t p = 0; p < 4; p++)
        occ[crossings[i].arcs[p]].push_back(4 * i + p);
    std::vector<size_t> alpha(4 * n);
    for (auto& [a, ds] : occ) {
      alpha[ds[0]] = ds[1];
      alpha[ds[1]] = ds[0];
    }
    std::vector<bool> seen(4 * n, false);
    size_t faces = 0;
    for (size_t d0 = 0; d0 < 4 * n; d0++) {
      if (seen[d0]) continue;
      faces++;
      size_t d = d0;
      while (!seen[d]) {
        seen[d] = true;
        size_t e = alpha[d];
        d = (e & ~3ull) | ((e + 1) & 3ull);
      }
    }
    // connected components of the crossing graph
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; i++) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (auto& [a, ds] : occ) {
      size_t u = find(ds[0] / 4), v = find(ds[1] / 4);
      if (u != v) parent[u] = v;
    }
    std::set<size_t> comps;
    for (size_t i = 0; i < n; i++) comps.insert(find(i));
    long euler = (long)n - (long)(2 * n) + (long)faces;
    if (euler != 2 * (long)comps.size())
      throw parse_error("link diagram rotation system is not planar");
  }
}

// ---------------------------------------------------------------------------

FramedLinkDiagram parse_link_text(const std::string& text) {
  FramedLinkDiagram d;
  std::istringstream in(text);
  std::string line;
  size_t ncomp = 0;
  while (std::getline(in, line)) {
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "name") {
      std::string rest;
      std::getline(ls, rest);
      size_t b = rest.find_first_not_of(" \t");
      d.name = (b == std::string::npos) ? "" : rest.substr(b);
    } else if (tok == "components") {
      ls >> ncomp;
    } else if (tok == "framings") {
      long f;
      while (ls >> f) d.framings.push_back(f);
    } else if (tok == "order") {
      std::vector<int> arcs;
      int a;
      while (ls >> a) arcs.push_back(a);
      d.components.push_back(arcs);
    } else if (tok == "U") {
      d.components.push_back({});
    } else if (tok == "expect") {
      ExpectedValue e;
      ls >> e.quantity >> e.value >> e.provenance;
      std::string rest;
      std::getline(ls, rest);
      size_t b = rest.find_first_not_of(" \t\"");
      size_t eq = rest.find_last_not_of(" \t\"");
      if (b != std::string::npos) e.note = rest.substr(b, eq - b + 1);
      d.expected.push_back(e);
    } else if (tok.rfind("X(", 0) == 0 || tok == "X") {
      std::string body = tok == "X" ? "" : tok.substr(1);
      if (tok == "X") ls >> body;
      std::string rest;
      std::getline(ls, rest);
      body += rest;
      for (auto& ch : body)
        if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
      std::istringstream bs(body);
      PdCrossing x{};
      if (!(bs >> x.arcs[0] >> x.arcs[1] >> x.arcs[2] >> x.arcs[3]))
        throw parse_error("bad PD row: " + line);
      d.crossings.push_back(x);
    } else {
      throw parse_error("unknown link file directive: " + tok);
    }
  }
  if (ncomp != 0 && ncomp != d.components.size())
    throw parse_error("component count mismatch in link file");
  d.validate();
  return d;
}

FramedLinkDiagram parse_link_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open link file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_link_text(ss.str());
}

std::string serialize_link(const FramedLinkDiagram& d) {
  std::ostringstream os;
  os << "name " << d.name << "\n";
  os << "components " << d.components.size() << "\n";
  os << "framings";
  for (long f : d.framings) os << " " << f;
  os << "\n";
  for (auto& c : d.components) {
    if (c.empty()) {
      os << "U\n";
      continue;
    }
    os << "order";
    for (int a : c) os << " " << a;
    os << "\n";
  }
  for (auto& x : d.crossings)
    os << "X(" << x.arcs[0] << "," << x.arcs[1] << "," << x.arcs[2] << ","
       << x.arcs[3] << ")\n";
  for (auto& e : d.expected)
    os << "expect " << e.quantity << " " << e.value << " " << e.provenance
       << " \"" << e.note << "\"\n";
  return os.str();
}

FramedLinkDiagram delete_components(const FramedLinkDiagram& d,
                                    const std::vector<int>& keep) {
  std::set<int> keepset(keep.begin(), keep.end());
  // union-find over arcs for splices
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int a) -> int {
    if (!parent.count(a)) parent[a] = a;
    if (parent[a] != a) parent[a] = find(parent[a]);
    return parent[a];
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  FramedLinkDiagram out;
  out.name = d.name;
  for (size_t i = 0; i < d.crossings.size(); i++) {
    const auto& x = d.crossings[i].arcs;
    bool under_kept = keepset.count(d.component_of_arc(x[0])) > 0;
    bool over_kept = keepset.count(d.component_of_arc(x[1])) > 0;
    if (under_kept && over_kept) continue;  // crossing survives
    if (under_kept) unite(x[0], x[2]);
    if (over_kept) unite(x[1], x[3]);
  }
  for (size_t i = 0; i < d.crossings.size(); i++) {
    const auto& x = d.crossings[i].arcs;
    bool under_kept = keepset.count(d.component_of_arc(x[0])) > 0;
    bool over_kept = keepset.count(d.component_of_arc(x[1])) > 0;
    if (!(under_kept && over_kept)) continue;
    PdCrossing nx{};
    for (int p = 0; p < 4; p++) nx.arcs[(size_t)p] = find(x[(size_t)p]);
    out.crossings.push_back(nx);
  }
  for (int ci : keep) {
    const auto& arcs = d.components.at(ci);
    std::vector<int> mapped;
    for (int a : arcs) {
      int r = find(a);
      if (!mapped.empty() && mapped.back() == r) continue;
      mapped.push_back(r);
    }
    while (mapped.size() > 1 && mapped.front() == mapped.back())
      mapped.pop_back();
    // keep only arcs that still meet a crossing
    std::set<int> live;
    for (auto& x : out.crossings)
      for (int a : x.arcs) live.insert(a);
    std::vector<int> filtered;
    for (int a : mapped)
      if (live.count(a)) filtered.push_back(a);
    out.components.push_back(filtered);
    out.framings.push_back(d.framings.at(ci));
  }
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// BareDiagram

size_t BareDiagram::num_arcs() const {
  std::set<int> arcs;
  for (auto& n : nodes)
    for (int a : n.ports) arcs.insert(a);
  return arcs.size();
}

void BareDiagram::validate_planar() const {
  if (nodes.empty()) return;
  size_t n = nodes.size();
  std::map<int, std::vector<size_t>> occ;
  for (size_t i = 0; i < n; i++)
    for (size_t p = 0; p < 4; p++) occ[nodes[i].ports[p]].push_back(4 * i + p);
  for (auto& [a, ds] : occ)
    if (ds.size() != 2)
      throw internal_error("cabled arc does not appear exactly twice");
  std::vector<size_t> alpha(4 * n);
  for (auto& [a, ds] : occ) {
    alpha[ds[0]] = ds[1];
    alpha[ds[1]] = ds[0];
  }
  std::vector<bool> seen(4 * n, false);
  size_t faces = 0;
  for (size_t d0 = 0; d0 < 4 * n; d0++) {
    if (seen[d0]) continue;
    faces++;
    size_t dd = d0;
    while (!seen[dd]) {
      seen[dd] = true;
      size_t e = alpha[dd];
      dd = (e & ~3ull) | ((e + 1) & 3ull);
    }
  }
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; i++) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto& [a, ds] : occ) {
    size_t u = find(ds[0] / 4), v = find(ds[1] / 4);
    if (u != v) parent[u] = v;
  }
  std::set<size_t> comps;
  for (size_t i = 0; i < n; i++) comps.insert(find(i));
  long euler = (long)n - (long)(2 * n) + (long)faces;
  if (euler != 2 * (long)comps.size())
    throw internal_error("cabled diagram is not planar");
}

BareDiagram bare_from_diagram(const FramedLinkDiagram& d) {
  BareDiagram b;
  for (auto& x : d.crossings) {
    BareNode n;
    n.ports = x.arcs;
    n.is_gate = false;
    b.nodes.push_back(n);
  }
  for (auto& c : d.components)
    if (c.empty()) b.free_loops++;
  return b;
}

BareDiagram cable2_with_gates(const FramedLinkDiagram& d) {
  BareDiagram out;
  int next = 1;
  auto fresh = [&]() { return next++; };

  // Arc incidences in scan order: (crossing, side); end 0 = first occurrence.
  std::map<int, std::vector<std::pair<size_t, size_t>>> ends;
  for (size_t i = 0; i < d.crossings.size(); i++)
    for (size_t s = 0; s < 4; s++)
      ends[d.crossings[i].arcs[s]].push_back({i, s});

  // Cable channels: ch[arc][k] = arc id of the cable strand whose position in
  // the CCW side listing at end 0 is k (position 1-k at end 1).
  // Gate-split arcs get separate half ids per end.
  std::map<int, std::array<int, 2>> ch_end0, ch_end1;
  std::set<int> split;
  for (size_t ci = 0; ci < d.components.size(); ci++)
    if (!d.components[ci].empty()) split.insert(d.components[ci].front());
  for (auto& [a, es] : ends) {
    if (split.count(a)) {
      ch_end0[a] = {fresh(), fresh()};
      ch_end1[a] = {fresh(), fresh()};
    } else {
      int c0 = fresh(), c1 = fresh();
      ch_end0[a] = {c0, c1};
      ch_end1[a] = {c0, c1};
    }
  }

  // Gate nodes.  Ports CCW: (s0 end0-half, s1 end0-half, s1 end1-half,
  // s0 end1-half); identity term connects 0-3 and 1-2.
  for (int a : split) {
    BareNode gmat;
    gmat.is_gate = true;
    gmat.ports = {ch_end0[a][0], ch_end0[a][1], ch_end1[a][1], ch_end1[a][0]};
    out.nodes.push_back(gmat);
  }
  // Crossingless loop components: two circles joined by a gate.
  for (size_t ci = 0; ci < d.components.size(); ci++) {
    if (!d.components[ci].empty()) continue;
    int s0 = fresh(), s1 = fresh();
    BareNode gmat;
    gmat.is_gate = true;
    gmat.ports = {s0, s1, s1, s0};
    out.nodes.push_back(gmat);
  }

  // Grids per original crossing.
  for (size_t i = 0; i < d.crossings.size(); i++) {
    const auto& x = d.crossings[i].arcs;
    // side listings: position k of side s -> cable arc id
    auto side_arc = [&](size_t s, int k) -> int {
      int a = x[s];
      const auto& es = ends[a];
      bool is_end0 = (es[0] == std::make_pair(i, s));
      if (is_end0) return ch_end0[a][(size_t)k];
      return ch_end1[a][(size_t)(1 - k)];
    };
    // internal segments
    int v_mid[2] = {fresh(), fresh()};  // vseg(x=1..2, level 1)
    int h_mid[2] = {fresh(), fresh()};  // hseg(y=1..2, col 1)
    auto vseg = [&](int xx, int level) -> int {
      if (level == 1) return v_mid[xx - 1];
      if (level == 0) return side_arc(0, xx - 1);       // bottom: left-to-right
      return side_arc(2, 2 - xx);                       // top: right-to-left
    };
    auto hseg = [&](int yy, int col) -> int {
      if (col == 1) return h_mid[yy - 1];
      if (col == 2) return side_arc(1, yy - 1);         // right: bottom-to-top
      return side_arc(3, 2 - yy);                       // left: top-to-bottom
    };
    for (int yy = 1; yy <= 2; yy++)
      for (int xx = 1; xx <= 2; xx++) {
        BareNode nd;
        nd.is_gate = false;
        nd.ports = {vseg(xx, yy - 1), hseg(yy, xx), vseg(xx, yy),
                    hseg(yy, xx - 1)};
        out.nodes.push_back(nd);
      }
  }
  out.validate_planar();
  return out;
}

// ---------------------------------------------------------------------------
// MorseBuilder

int MorseBuilder::resolve(int arc) const {
  auto it = arc_alias_.find(arc);
  while (it != arc_alias_.end()) {
    arc = it->second;
    it = arc_alias_.find(arc);
  }
  return arc;
}

void MorseBuilder::alias(int a, int b) {
  a = resolve(a);
  b = resolve(b);
  if (a != b) arc_alias_[a] = b;
}

void MorseBuilder::cup(size_t pos, int comp) {
  if (pos > slots_.size()) throw internal_error("cup position out of range");
  int a = next_arc_++;
  slots_.insert(slots_.begin() + (long)pos, 2, Slot{a, comp});
  comp_arcs_[comp].push_back(a);
}

void MorseBuilder::cap(size_t pos) {
  if (pos + 1 >= slots_.size()) throw internal_error("cap position out of range");
  Slot l = slots_[pos], r = slots_[pos + 1];
  if (l.comp != r.comp) throw internal_error("cap joins different components");
  if (resolve(l.arc) == resolve(r.arc)) {
    // closed circle; crossingless if the arc never met a crossing
    loop_comp_count_[l.comp]++;
  } else {
    alias(l.arc, r.arc);
  }
  slots_.erase(slots_.begin() + (long)pos, slots_.begin() + (long)pos + 2);
}

void MorseBuilder::crossing(size_t pos, bool left_over) {
  if (pos + 1 >= slots_.size())
    throw internal_error("crossing position out of range");
  Slot l = slots_[pos], r = slots_[pos + 1];
  int ml = next_arc_++;  // new arc ending up at the left slot
  int mr = next_arc_++;  // new arc at the right slot
  PdCrossing x{};
  if (left_over) {
    // under: r -> ml, over: l -> mr
    x.arcs = {r.arc, mr, ml, l.arc};
  } else {
    // under: l -> mr, over: r -> ml
    x.arcs = {l.arc, r.arc, mr, ml};
  }
  crossings_.push_back(x);
  // strands swap slots
  slots_[pos] = Slot{ml, r.comp};
  slots_[pos + 1] = Slot{mr, l.comp};
  comp_arcs_[r.comp].push_back(ml);
  comp_arcs_[l.comp].push_back(mr);
}

FramedLinkDiagram MorseBuilder::finish(const std::string& name,
                                       const std::vector<long>& framings) {
  if (!slots_.empty()) throw internal_error("open strands remain");
  FramedLinkDiagram d;
  d.name = name;
  for (auto& x : crossings_) {
    PdCrossing nx{};
    for (int p = 0; p < 4; p++) nx.arcs[p] = resolve(x.arcs[p]);
    d.crossings.push_back(nx);
  }
  // arc incidences
  std::map<int, std::vector<std::pair<size_t, size_t>>> occ;
  for (size_t i = 0; i < d.crossings.size(); i++)
    for (size_t p = 0; p < 4; p++) occ[d.crossings[i].arcs[p]].push_back({i, p});
  // reconstruct component cycles by walking through crossings
  std::set<int> visited;
  std::vector<std::vector<int>> cycles;
  for (auto& [a0, es] : occ) {
    if (visited.count(a0)) continue;
    std::vector<int> cyc;
    int arc = a0;
    // enter the walk through incidence 0 of a0
    std::pair<size_t, size_t> at = es[0];
    while (true) {
      cyc.push_back(arc);
      visited.insert(arc);
      // continue through crossing `at`: partner port
      size_t partner = at.second ^ 2;
      int narc = d.crossings[at.first].arcs[partner];
      // find the other incidence of narc
      const auto& nes = occ[narc];
      std::pair<size_t, size_t> nat =
          (nes[0] == std::make_pair(at.first, partner)) ? nes[1] : nes[0];
      arc = narc;
      at = nat;
      if (arc == a0 && at == es[0]) break;
      if (cyc.size() > 4 * d.crossings.size() + 4)
        throw internal_error("component walk failed to close");
    }
    cycles.push_back(cyc);
  }
  // map cycles to builder components via the recorded arc ownership
  std::map<int, int> arc_to_comp;
  for (auto& [comp, arcs] : comp_arcs_)
    for (int a : arcs) arc_to_comp[resolve(a)] = comp;

  std::map<int, std::vector<int>> comp_cycle;
  for (auto& cyc : cycles) {
    int comp = -1;
    for (int a : cyc)
      if (arc_to_comp.count(a)) {
        comp = arc_to_comp[a];
        break;
      }
    if (comp < 0) throw internal_error("cycle with unknown component");
    if (comp_cycle.count(comp))
      throw internal_error("two cycles share a component id");
    comp_cycle[comp] = cyc;
  }
  // PD rows: rotate so the under-in matches the traversal direction.
  std::map<int, int> succ;
  for (auto& [comp, cyc] : comp_cycle)
    for (size_t i = 0; i < cyc.size(); i++) succ[cyc[i]] = cyc[(i + 1) % cyc.size()];
  for (auto& x : d.crossings) {
    if (succ.count(x.arcs[0]) && succ[x.arcs[0]] == x.arcs[2]) continue;
    std::swap(x.arcs[0], x.arcs[2]);
    std::swap(x.arcs[1], x.arcs[3]);
    if (!(succ.count(x.arcs[0]) && succ[x.arcs[0]] == x.arcs[2]))
      throw internal_error("under strand direction unresolvable");
  }
  // emit components in ascending component id, then crossingless loops
  std::vector<int> comp_ids;
  for (auto& [comp, arcs] : comp_arcs_) comp_ids.push_back(comp);
  std::sort(comp_ids.begin(), comp_ids.end());
  for (int comp : comp_ids) {
    if (comp_cycle.count(comp)) {
      d.components.push_back(comp_cycle[comp]);
    } else if (loop_comp_count_.count(comp)) {
      d.components.push_back({});
    } else {
      throw internal_error("component never closed");
    }
  }
  if (framings.size() != d.components.size())
    throw internal_error("framing count mismatch in builder");
  d.framings = framings;
  d.validate();
  return d;
}

}  // namespace homtqft
