#include "homtqft/skein.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace homtqft {

namespace {

// Node expansion terms: local pairing of the 4 ports plus a coefficient.
// Crossing with ports (a,b,c,d) CCW from an under port:
//   A * [(a,b),(c,d)]  +  A^-1 * [(a,d),(b,c)].
// Gate (Jones-Wenzl 2-projector), ports (s0 in, s1 in, s1 out, s0 out):
//   1 * [(0,3),(1,2)]  -  delta^-1 * [(0,1),(2,3)].
struct LocalTerm {
  Cyc20 coeff;
  std::array<std::pair<int, int>, 2> pairs;
};

const std::array<LocalTerm, 2>& crossing_terms() {
  static const std::array<LocalTerm, 2> t = {
      LocalTerm{Cyc20::A_pow(1), {{{0, 1}, {2, 3}}}},
      LocalTerm{Cyc20::A_pow(-1), {{{0, 3}, {1, 2}}}}};
  return t;
}

const std::array<LocalTerm, 2>& gate_terms() {
  static const std::array<LocalTerm, 2> t = {
      LocalTerm{Cyc20::one(), {{{0, 3}, {1, 2}}}},
      LocalTerm{-Cyc20::loop_delta_inv(), {{{0, 1}, {2, 3}}}}};
  return t;
}

const std::array<LocalTerm, 2>& node_terms(const BareNode& n) {
  return n.is_gate ? gate_terms() : crossing_terms();
}

}  // namespace

// ---------------------------------------------------------------------------
// Naive state sum.

Cyc20 naive_bracket(const BareDiagram& d) {
  size_t n = d.nodes.size();
  if (n > 24) throw limit_error("naive state sum supports at most 24 nodes");
  Cyc20 delta = Cyc20::loop_delta();
  Cyc20 total;
  // arc index map
  std::map<int, int> arc_index;
  for (auto& nd : d.nodes)
    for (int a : nd.ports)
      if (!arc_index.count(a)) {
        int id = (int)arc_index.size();
        arc_index[a] = id;
      }
  size_t narcs = arc_index.size();
  std::vector<int> parent(narcs);

  for (uint64_t state = 0; state < (1ull << n); state++) {
    for (size_t i = 0; i < narcs; i++) parent[i] = (int)i;
    std::function<int(int)> find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int merges_into_same = 0;
    Cyc20 coeff = Cyc20::one();
    for (size_t i = 0; i < n; i++) {
      const LocalTerm& t = node_terms(d.nodes[i])[(state >> i) & 1];
      coeff = coeff * t.coeff;
      for (auto& pr : t.pairs) {
        int u = find(arc_index.at(d.nodes[i].ports[(size_t)pr.first]));
        int v = find(arc_index.at(d.nodes[i].ports[(size_t)pr.second]));
        if (u == v)
          merges_into_same++;
        else
          parent[u] = v;
      }
    }
    // each arc has two endpoints, each merged exactly once, so the merge
    // graph is 2-regular: loops = components = merges that closed a cycle
    int loops = merges_into_same;
    Cyc20 term = coeff;
    for (int l = 0; l < loops; l++) term = term * delta;
    total = total + term;
  }
  for (int l = 0; l < d.free_loops; l++) total = total * delta;
  return total;
}

// ---------------------------------------------------------------------------
// Sweep evaluation.

namespace {

struct OrderPlan {
  std::vector<size_t> order;
  size_t peak = 0;
};

// Beam search for a node order with a small open-strand peak.
OrderPlan plan_order(const BareDiagram& d, size_t beam_width) {
  size_t n = d.nodes.size();
  // arc -> the set of nodes it touches (1 or 2, self-arcs once with count 2)
  std::map<int, std::vector<size_t>> touch;
  for (size_t i = 0; i < n; i++)
    for (int a : d.nodes[i].ports) touch[a].push_back(i);

  struct State {
    std::vector<uint64_t> done;
    std::vector<size_t> order;
    size_t open = 0;
    size_t peak = 0;
    bool has(size_t i) const { return (done[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { done[i >> 6] |= 1ull << (i & 63); }
  };
  size_t words = (n + 63) / 64;
  auto open_after = [&](const State& s, size_t node, size_t* transient) {
    // recompute delta of open arcs when adding `node`
    long delta = 0;
    long opening = 0;
    std::set<int> seen;
    for (int a : d.nodes[node].ports) {
      if (seen.count(a)) continue;
      seen.insert(a);
      const auto& ts = touch[a];
      if (ts.size() == 2 && ts[0] == ts[1]) continue;  // self-arc: never open
      size_t other = ts[0] == node ? ts[1] : ts[0];
      if (s.has(other))
        delta -= 1;  // closes
      else {
        delta += 1;  // opens
        opening += 1;
      }
    }
    *transient = s.open + (size_t)opening;
    return (long)s.open + delta;
  };

  std::vector<State> beam;
  State init;
  init.done.assign(words, 0);
  beam.push_back(init);
  for (size_t step = 0; step < n; step++) {
    std::vector<State> next;
    for (const auto& s : beam) {
      for (size_t cand = 0; cand < n; cand++) {
        if (s.has(cand)) continue;
        // prefer nodes adjacent to the current frontier (or any when empty)
        size_t transient = 0;
        long open2 = open_after(s, cand, &transient);
        State t = s;
        t.set(cand);
        t.order.push_back(cand);
        t.open = (size_t)open2;
        t.peak = std::max({t.peak, transient, (size_t)open2});
        next.push_back(std::move(t));
      }
    }
    std::sort(next.begin(), next.end(), [](const State& a, const State& b) {
      if (a.peak != b.peak) return a.peak < b.peak;
      if (a.open != b.open) return a.open < b.open;
      return a.done < b.done;
    });
    // dedupe identical done-sets (keep best)
    std::vector<State> dedup;
    std::set<std::vector<uint64_t>> seen;
    for (auto& s : next) {
      if (seen.count(s.done)) continue;
      seen.insert(s.done);
      dedup.push_back(std::move(s));
      if (dedup.size() >= beam_width) break;
    }
    beam = std::move(dedup);
  }
  OrderPlan plan;
  plan.order = beam.front().order;
  plan.peak = beam.front().peak;
  return plan;
}

}  // namespace

Cyc20 sweep_bracket(const BareDiagram& d, const SkeinLimits& limits) {
  if (d.nodes.size() > limits.max_crossings)
    throw limit_error("cabled diagram exceeds the crossing limit");
  Cyc20 delta = Cyc20::loop_delta();
  Cyc20 result = Cyc20::one();
  if (!d.nodes.empty()) {
    OrderPlan plan = plan_order(d, 256);
    if (plan.peak > limits.max_strands)
      throw limit_error("slice width exceeds the strand limit (" +
                        std::to_string(plan.peak) + " open strands)");

    std::map<int, std::vector<size_t>> touch;
    for (size_t i = 0; i < d.nodes.size(); i++)
      for (int a : d.nodes[i].ports) touch[a].push_back(i);

    // frontier: ordered list of open arc ids
    std::vector<int> frontier;
    // states: pairing as partner vector over frontier positions
    std::map<std::vector<uint16_t>, Cyc20> states;
    states[{}] = Cyc20::one();
    std::vector<bool> processed(d.nodes.size(), false);

    for (size_t oi = 0; oi < plan.order.size(); oi++) {
      size_t ni = plan.order[oi];
      const BareNode& node = d.nodes[ni];
      processed[ni] = true;

      // classify ports
      // bound ports: arc already open (other end processed): position in
      // frontier; fresh ports: arc's other end not yet processed; internal:
      // arc has both ends on this node
      std::array<int, 4> port_frontier_pos{-1, -1, -1, -1};
      std::array<int, 4> internal_partner{-1, -1, -1, -1};
      std::array<bool, 4> fresh{};
      std::map<int, std::vector<int>> by_arc;
      for (int p = 0; p < 4; p++) by_arc[node.ports[(size_t)p]].push_back(p);
      for (auto& [arc, ps] : by_arc) {
        if (ps.size() == 2) {
          internal_partner[(size_t)ps[0]] = ps[1];
          internal_partner[(size_t)ps[1]] = ps[0];
          continue;
        }
        int p = ps[0];
        auto it = std::find(frontier.begin(), frontier.end(), arc);
        if (it != frontier.end())
          port_frontier_pos[(size_t)p] = (int)(it - frontier.begin());
        else
          fresh[(size_t)p] = true;
      }

      // new frontier: remove bound arcs, insert fresh arcs at the first
      // removed position (or append)
      std::vector<int> bound_pos;
      for (int p = 0; p < 4; p++)
        if (port_frontier_pos[(size_t)p] >= 0)
          bound_pos.push_back(port_frontier_pos[(size_t)p]);
      std::sort(bound_pos.begin(), bound_pos.end());
      std::vector<int> fresh_arcs;
      for (int p = 0; p < 4; p++)
        if (fresh[(size_t)p]) fresh_arcs.push_back(node.ports[(size_t)p]);
      // dedupe fresh arcs (an arc can only be fresh once)
      std::vector<int> new_frontier;
      size_t insert_at = bound_pos.empty() ? frontier.size() : (size_t)bound_pos[0];
      for (size_t i = 0; i < frontier.size(); i++) {
        if (std::binary_search(bound_pos.begin(), bound_pos.end(), (int)i))
          continue;
        new_frontier.push_back(frontier[i]);
      }
      // position of insertion in new_frontier coordinates
      size_t ins = 0;
      for (size_t i = 0; i < insert_at && i < frontier.size(); i++)
        if (!std::binary_search(bound_pos.begin(), bound_pos.end(), (int)i))
          ins++;
      if (insert_at >= frontier.size()) ins = new_frontier.size();
      new_frontier.insert(new_frontier.begin() + (long)ins, fresh_arcs.begin(),
                          fresh_arcs.end());

      if (new_frontier.size() > limits.max_strands)
        throw limit_error("slice width exceeds the strand limit");

      // old-position -> new-position map for surviving arcs
      std::vector<int> pos_map(frontier.size(), -1);
      {
        std::map<int, int> arc_new;
        for (size_t i = 0; i < new_frontier.size(); i++)
          arc_new[new_frontier[i]] = (int)i;
        for (size_t i = 0; i < frontier.size(); i++) {
          if (std::binary_search(bound_pos.begin(), bound_pos.end(), (int)i))
            continue;
          pos_map[i] = arc_new.at(frontier[i]);
        }
      }
      std::array<int, 4> fresh_new_pos{-1, -1, -1, -1};
      {
        std::map<int, int> arc_new;
        for (size_t i = 0; i < new_frontier.size(); i++)
          arc_new[new_frontier[i]] = (int)i;
        for (int p = 0; p < 4; p++)
          if (fresh[(size_t)p])
            fresh_new_pos[(size_t)p] = arc_new.at(node.ports[(size_t)p]);
      }

      std::map<std::vector<uint16_t>, Cyc20> next_states;
      const auto& terms = node_terms(node);
      size_t old_n = frontier.size();
      size_t new_n = new_frontier.size();
      for (auto& [pairing, coeff] : states) {
        for (const LocalTerm& t : terms) {
          // Points: 0..old_n-1 frontier, old_n..old_n+3 node ports.
          // Edges: pairing (frontier), term pairs (ports), connections
          // (bound port <-> its frontier point, internal arcs port<->port).
          size_t total = old_n + 4;
          std::vector<int> link(total, -1);   // pairing edges
          std::vector<int> conn(total, -1);   // connection edges
          for (size_t i = 0; i < old_n; i++) link[i] = pairing[i];
          for (auto& pr : t.pairs) {
            link[old_n + (size_t)pr.first] = (int)(old_n + (size_t)pr.second);
            link[old_n + (size_t)pr.second] = (int)(old_n + (size_t)pr.first);
          }
          for (int p = 0; p < 4; p++) {
            if (port_frontier_pos[(size_t)p] >= 0) {
              conn[(size_t)port_frontier_pos[(size_t)p]] = (int)(old_n + (size_t)p);
              conn[old_n + (size_t)p] = port_frontier_pos[(size_t)p];
            } else if (internal_partner[(size_t)p] >= 0) {
              conn[old_n + (size_t)p] = (int)(old_n + (size_t)internal_partner[(size_t)p]);
            }
          }
          // endpoints of the new pairing: surviving frontier + fresh ports
          std::vector<uint16_t> np(new_n, 0);
          std::vector<bool> visited(total, false);
          int loops = 0;
          auto is_terminal = [&](int v) {
            if (v < (int)old_n) return pos_map[(size_t)v] >= 0;
            int p = v - (int)old_n;
            return fresh[(size_t)p];
          };
          auto terminal_new_pos = [&](int v) {
            if (v < (int)old_n) return pos_map[(size_t)v];
            return fresh_new_pos[(size_t)(v - (int)old_n)];
          };
          for (int start = 0; start < (int)total; start++) {
            if (visited[(size_t)start]) continue;
            if (is_terminal(start)) {
              // walk: terminal -> link -> conn -> link -> ... -> terminal
              int v = start;
              visited[(size_t)v] = true;
              int cur = link[(size_t)v];
              while (true) {
                visited[(size_t)cur] = true;
                if (is_terminal(cur)) break;
                int nxt = conn[(size_t)cur];
                if (nxt < 0) throw internal_error("open strand without partner");
                visited[(size_t)nxt] = true;
                cur = link[(size_t)nxt];
              }
              np[(size_t)terminal_new_pos(start)] =
                  (uint16_t)terminal_new_pos(cur);
              np[(size_t)terminal_new_pos(cur)] =
                  (uint16_t)terminal_new_pos(start);
            }
          }
          // closed loops: cycles among unvisited non-terminal points
          for (int start = 0; start < (int)total; start++) {
            if (visited[(size_t)start]) continue;
            int v = start;
            while (!visited[(size_t)v]) {
              visited[(size_t)v] = true;
              int w = link[(size_t)v];
              visited[(size_t)w] = true;
              v = conn[(size_t)w];
              if (v < 0) throw internal_error("broken loop walk");
            }
            loops++;
          }
          Cyc20 c = coeff * t.coeff;
          for (int l = 0; l < loops; l++) c = c * delta;
          auto it = next_states.find(np);
          if (it == next_states.end())
            next_states.emplace(std::move(np), c);
          else
            it->second = it->second + c;
        }
      }
      frontier = std::move(new_frontier);
      // drop zero states
      states.clear();
      for (auto& [k, v] : next_states)
        if (!v.is_zero()) states[k] = v;
      if (states.empty()) return Cyc20();  // exact zero
    }
    if (!frontier.empty()) throw internal_error("frontier not empty at the end");
    auto it = states.find({});
    result = (it == states.end()) ? Cyc20() : it->second;
  }
  for (int l = 0; l < d.free_loops; l++) result = result * delta;
  return result;
}

// ---------------------------------------------------------------------------

Cyc20 quantum_dim2() {
  Cyc20 delta = Cyc20::loop_delta();
  return delta * delta - Cyc20::one();
}

Cyc20 twist2() { return Cyc20::A_pow(8); }

Cyc20 bracket(const FramedLinkDiagram& d, const std::vector<int>& colors,
              const SkeinLimits& limits, bool use_naive) {
  if (colors.size() != d.num_components())
    throw parse_error("one color per component required");
  for (int c : colors)
    if (c != 0 && c != 2) throw parse_error("colors are 0 or 2");
  std::vector<int> keep;
  for (size_t i = 0; i < colors.size(); i++)
    if (colors[i] == 2) keep.push_back((int)i);
  if (keep.empty()) return Cyc20::one();
  FramedLinkDiagram sub = delete_components(d, keep);
  BareDiagram cabled = cable2_with_gates(sub);
  return use_naive ? naive_bracket(cabled) : sweep_bracket(cabled, limits);
}

RtResult rt_invariant_5(const FramedLinkDiagram& d, const SkeinLimits& limits,
                        bool use_naive) {
  d.validate();
  size_t n = d.num_components();
  Cyc20 dim2 = quantum_dim2();
  Cyc20 tw = twist2();
  Cyc20 tw_inv = Cyc20::A_pow(-8);

  Cyc20 omega_total;
  for (uint64_t mask = 0; mask < (1ull << n); mask++) {
    std::vector<int> colors(n, 0);
    Cyc20 weight = Cyc20::one();
    for (size_t i = 0; i < n; i++)
      if ((mask >> i) & 1) {
        colors[i] = 2;
        weight = weight * dim2;
      }
    Cyc20 br = bracket(d, colors, limits, use_naive);
    // framing corrections: each colored component as drawn has framing equal
    // to its self-writhe; adjust to the prescribed framing
    for (size_t i = 0; i < n; i++) {
      if (colors[i] != 2) continue;
      long fix = d.framings[i] - d.self_writhe((int)i);
      Cyc20 unit = fix >= 0 ? tw : tw_inv;
      for (long t = 0; t < std::abs(fix); t++) br = br * unit;
    }
    omega_total = omega_total + weight * br;
  }

  // signature normalization
  ZMat lk = d.linking_matrix();
  auto sig = lk.signature_symmetric();
  // tau_plus/minus = evaluation on a +-1 framed unknot
  Cyc20 tau_plus = Cyc20::one() + dim2 * dim2 * tw;
  Cyc20 tau_minus = Cyc20::one() + dim2 * dim2 * tw_inv;
  Cyc20 value = omega_total;
  for (int i = 0; i < sig.pos; i++) {
    auto q = value.divide_exact(tau_plus);
    if (!q) throw internal_error("normalization division failed");
    value = *q;
  }
  for (int i = 0; i < sig.neg; i++) {
    auto q = value.divide_exact(tau_minus);
    if (!q) throw internal_error("normalization division failed");
    value = *q;
  }

  auto z5 = value.to_zeta5();
  if (!z5)
    throw internal_error("invariant failed to land in Z[zeta5]");

  RtResult r;
  r.value = *z5;
  r.order = quantum_order(r.value);
  HomologyData h = homology_from_linking(d);
  r.beta1 = h.beta1;
  r.det_h1 = h.det_h1;
  r.sig_pos = sig.pos;
  r.sig_neg = sig.neg;
  return r;
}

std::optional<int> quantum_order(const Cyc5& v) { return v.valuation(); }

HomologyData homology_from_linking(const FramedLinkDiagram& d) {
  HomologyData h;
  ZMat lk = d.linking_matrix();
  h.invariant_factors = lk.smith_diagonal();
  Int det = 1;
  for (auto& f : h.invariant_factors) {
    if (f == 0)
      h.beta1++;
    else
      det *= f;
  }
  h.det_h1 = (h.beta1 == 0) ? det : Int(0);
  return h;
}

CutBoundReport cut_bound_report(const FramedLinkDiagram& d,
                                std::optional<long> claimed_cut,
                                const SkeinLimits& limits) {
  CutBoundReport rep;
  rep.rt = rt_invariant_5(d, limits);
  rep.claimed_cut = claimed_cut;
  if (claimed_cut) {
    if (rep.rt.order)
      rep.bound_holds = *claimed_cut <= (long)*rep.rt.order;
    else
      rep.bound_holds = true;  // infinite order bounds everything
  }
  return rep;
}

}  // namespace homtqft
