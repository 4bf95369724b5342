#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "homtqft/intmat.hpp"

namespace homtqft {

// PD crossing: arc labels (a,b,c,d) listed counterclockwise starting at the
// incoming under-arc.  With the over-strand running d -> b the crossing is
// positive, b -> d negative (orientations come from the component arc
// orders).
struct PdCrossing {
  std::array<int, 4> arcs;
};

struct ExpectedValue {
  std::string quantity;
  std::string value;
  std::string provenance;  // published | definitional | computed
  std::string note;
};

class FramedLinkDiagram {
 public:
  std::string name;
  std::vector<PdCrossing> crossings;
  // Arc labels of each component in traversal order; an empty list marks a
  // crossingless loop component.
  std::vector<std::vector<int>> components;
  std::vector<long> framings;
  std::vector<ExpectedValue> expected;

  size_t num_components() const { return components.size(); }

  // Structural validation: arcs appear exactly twice, component orders are
  // consistent with the crossings, the rotation system has genus zero.
  void validate() const;

  int component_of_arc(int arc) const;
  int arc_successor(int arc) const;  // next arc along its component
  // +1 / -1 per crossing.
  int crossing_sign(size_t i) const;
  long self_writhe(int comp) const;
  long linking(int c1, int c2) const;   // sum of signs / 2
  ZMat linking_matrix() const;          // framings on the diagonal

 private:
  void build_maps() const;
  mutable std::map<int, int> comp_of_;
  mutable std::map<int, int> succ_;
  mutable bool maps_built_ = false;
};

FramedLinkDiagram parse_link_text(const std::string& text);
FramedLinkDiagram parse_link_file(const std::string& path);
std::string serialize_link(const FramedLinkDiagram& d);

// Keep only the listed components (arcs of removed components are spliced
// away; crossings involving them disappear).
FramedLinkDiagram delete_components(const FramedLinkDiagram& d,
                                    const std::vector<int>& keep);

// ---------------------------------------------------------------------------
// Node diagrams: the common input of both bracket evaluators.  Every node is
// 4-valent with ports listed counterclockwise; crossings start at an
// under-strand port, projector gates at the bottom-left strand end.

struct BareNode {
  std::array<int, 4> ports;  // arc ids
  bool is_gate = false;      // false: crossing, true: Jones-Wenzl 2-projector
};

struct BareDiagram {
  std::vector<BareNode> nodes;
  int free_loops = 0;  // crossingless circles

  void validate_planar() const;  // Euler characteristic of the rotation system
  size_t num_arcs() const;
};

// Plain diagram (every component one strand), no gates.
BareDiagram bare_from_diagram(const FramedLinkDiagram& d);

// Blackboard 2-cable of every component with one projector gate per
// component.  Planarity of the result is validated.
BareDiagram cable2_with_gates(const FramedLinkDiagram& d);

// ---------------------------------------------------------------------------
// Programmatic construction (closed braid-like morse words); used to build
// the shipped link files and by tests.

class MorseBuilder {
 public:
  // Opens a nested pair of strands at slot positions (pos, pos+1) belonging
  // to component `comp`; both new strand ends carry one new arc.
  void cup(size_t pos, int comp);
  // Join adjacent strands at (pos, pos+1); closes a loop when they carry the
  // same arc.
  void cap(size_t pos);
  // Elementary crossing at (pos, pos+1); left_over chooses the strand
  // passing above.
  void crossing(size_t pos, bool left_over);

  size_t width() const { return slots_.size(); }
  int slot_component(size_t pos) const { return slots_[pos].comp; }

  // Finish: all strands must be capped; framings given per component id.
  FramedLinkDiagram finish(const std::string& name,
                           const std::vector<long>& framings);

 private:
  struct Slot {
    int arc;
    int comp;
  };
  std::vector<Slot> slots_;
  std::vector<PdCrossing> crossings_;
  std::map<int, std::vector<int>> comp_arcs_;  // arcs created per component
  std::map<int, int> arc_alias_;
  std::map<int, int> loop_comp_count_;  // crossingless loops per component
  int next_arc_ = 1;
  int resolve(int arc) const;
  void alias(int a, int b);
};

}  // namespace homtqft
