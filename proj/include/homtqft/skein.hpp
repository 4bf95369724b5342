#pragma once

#include <optional>

#include "homtqft/linkdiag.hpp"

namespace homtqft {

struct SkeinLimits {
  size_t max_strands = 12;     // open cable strands per slice
  size_t max_crossings = 128;  // cabled node count
};

// Brute-force state sum: expands every node (2^n terms) and counts loops.
Cyc20 naive_bracket(const BareDiagram& d);

// Transfer evaluation sweeping node by node over superpositions of planar
// boundary pairings.  Node order is chosen to keep the open-strand count
// small; exceeding the limit raises limit_error.
Cyc20 sweep_bracket(const BareDiagram& d, const SkeinLimits& limits);

// Colored bracket of the diagram as drawn (no framing corrections): every
// component is replaced by `color` parallel strands through a Jones-Wenzl
// projector; colors are 0 or 2.
Cyc20 bracket(const FramedLinkDiagram& d, const std::vector<int>& colors,
              const SkeinLimits& limits, bool use_naive = false);

// Quantum dimension of the color-2 object and the positive-kink twist unit.
Cyc20 quantum_dim2();
Cyc20 twist2();

struct RtResult {
  Cyc5 value;
  std::optional<int> order;  // nullopt = +infinity (value is zero)
  int beta1 = 0;
  Int det_h1 = 0;
  int sig_pos = 0, sig_neg = 0;
};

// SO(3) invariant at a fifth root of unity from a surgery presentation,
// normalized so that every presentation of the 3-sphere evaluates to 1.
RtResult rt_invariant_5(const FramedLinkDiagram& d, const SkeinLimits& limits,
                        bool use_naive = false);

// (zeta5 - 1)-adic valuation; nullopt encodes +infinity.
std::optional<int> quantum_order(const Cyc5& v);

struct HomologyData {
  int beta1 = 0;
  Int det_h1 = 0;  // |H_1| when finite, else 0
  std::vector<Int> invariant_factors;
};
HomologyData homology_from_linking(const FramedLinkDiagram& d);

struct CutBoundReport {
  RtResult rt;
  std::optional<long> claimed_cut;
  bool bound_holds = true;  // claimed_cut <= order (when both finite)
};
CutBoundReport cut_bound_report(const FramedLinkDiagram& d,
                                std::optional<long> claimed_cut,
                                const SkeinLimits& limits);

}  // namespace homtqft
