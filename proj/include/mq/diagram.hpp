#pragma once

#include <array>
#include <vector>

#include "mq/error.hpp"

namespace mq {

struct PDCode;

// A 4-valent knot diagram under construction.  Crossings carry their four
// ports in counterclockwise order; the strand pairs run through opposite
// ports (0,2) and (1,3), and under_02 marks which pair is the understrand.
// 2-valent joints let strands pass through without a crossing, so tangles
// with crossing-free strands compose uniformly.
class DiagramBuilder {
public:
  struct End {
    int node = -1;
    int port = -1;
  };

  int new_joint();                    // 2 ports
  int new_crossing(bool under_02);    // 4 ports, counterclockwise
  void connect(End a, End b);

  bool is_crossing(int node) const { return node_kind_[std::size_t(node)]; }
  std::size_t crossing_count() const { return crossing_index_.size(); }

  // Follows the strand entering the given connected port until it reaches a
  // node with a free port; returns that node.  Used as the strand-tracing
  // oracle for tangle endpoint pairings.
  int trace_to_free_end(End start) const;

  // Assigns edge labels 1..2n along the orientation starting at crossing 0
  // and emits the planar diagram code.  Throws if the diagram has more than
  // one component or unconnected ports.
  PDCode trace_knot() const;

private:
  End linked(End e) const;
  // kind per node: true = crossing, false = joint
  std::vector<bool> node_kind_;
  std::vector<int> crossing_index_;              // node id per crossing, in order
  std::vector<bool> under_02_;                   // per crossing
  std::vector<std::array<End, 4>> links_;        // per node (joints use 2 slots)
};

}  // namespace mq
