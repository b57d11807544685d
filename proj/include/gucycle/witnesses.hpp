#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gucycle/engine.hpp"
#include "gucycle/families.hpp"
#include "gucycle/graph.hpp"

namespace gucycle {

/// A walk along consecutive arcs of the arc digraph.
///
/// `segment` is a linear graph on steps.size() + k - 1 vertices whose t-th
/// (non-wrapping) k-window is steps[t]. `milestones` marks step indices that
/// end a macro-step; only degree descent fills it.
struct WindowWalk {
  FamilySpec spec;
  std::vector<LabeledGraph> steps;
  LabeledGraph segment;
  std::vector<std::size_t> milestones;
};

/// Every step is a member, consecutive steps overlap, and the segment
/// realizes the steps.
bool is_valid_walk(const WindowWalk& walk);

/// Linear realization of a sequence of overlapping k-vertex graphs.
LabeledGraph segment_from_steps(const std::vector<LabeledGraph>& steps);

struct RotationPairing {
  LabeledGraph overlap;
  std::vector<LabeledGraph> in_arcs;
  std::vector<LabeledGraph> out_arcs;
  std::vector<std::pair<LabeledGraph, LabeledGraph>> pairs;  // (in-arc, image)

  /// Images are distinct, are out-arcs, and cover every out-arc.
  bool bijective() const;
};

/// Pairs each arc entering `overlap` with its rotation by -1, which leaves the
/// overlap. Requires a rotation-closed family.
RotationPairing rotation_pairing(const LabeledGraph& overlap, const FamilySpec& spec,
                                 std::uint64_t budget = kDefaultFamilyBudget);

/// Pairings at every overlap of an already built arc digraph.
std::vector<RotationPairing> rotation_pairings(const ArcDigraph& d);

/// Walk I -> J through the windows of their shifted disjoint union.
WindowWalk path_via_union(const LabeledGraph& i, const LabeledGraph& j, const FamilySpec& spec);

/// Walk between two labeled trees on k >= 3 vertices through a repaired union.
///
/// Scans the union for the first window that is not a tree, joins its highest
/// vertex to one I-side vertex of every component it misses (highest label
/// first), and repeats. Choices that later force a cycle are backtracked.
WindowWalk tree_repair_path(const LabeledGraph& i, const LabeledGraph& j, std::uint32_t k);

/// The m-edge graph on k vertices with the lexicographically least
/// vertex-order degree sequence.
LabeledGraph least_degree_graph(std::uint32_t k, std::uint32_t m);

/// Walk from I to least_degree_graph(k, m) by macro-steps of k rotations,
/// each strictly lowering the degree sequence. `milestones` lists the step
/// index that closes each macro-step.
WindowWalk degree_descent_path(const LabeledGraph& i, std::uint32_t k, std::uint32_t m);

}  // namespace gucycle
