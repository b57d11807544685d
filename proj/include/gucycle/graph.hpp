#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gucycle/error.hpp"

namespace gucycle {

using Vertex = std::uint32_t;

enum class GraphKind : std::uint8_t { undirected = 0, directed = 1, hyper = 2 };

std::string_view to_string(GraphKind kind);

/// Kind flags shared by every member of a family. Two graphs can only be
/// compared, unioned or keyed against each other when their shapes agree.
struct GraphShape {
  GraphKind kind = GraphKind::undirected;
  bool allows_loops = false;
  std::uint32_t max_mult = 1;

  static GraphShape simple() { return {}; }

  bool operator==(const GraphShape&) const = default;
};

/// One edge of the generalized edge multiset.
///
/// A singleton vertex list is a loop. Undirected and hyper edges keep their
/// vertices sorted and distinct; directed edges keep (tail, head) order.
struct GEdge {
  std::vector<Vertex> verts;
  std::uint32_t mult = 1;

  bool is_loop() const { return verts.size() == 1; }

  bool operator==(const GEdge&) const = default;
  auto operator<=>(const GEdge&) const = default;
};

/// Immutable labeled graph on vertices 0..n-1.
///
/// The constructor normalizes the edge list (vertex order, duplicate merging,
/// sorting) and rejects anything that breaks the shape's invariants, so two
/// equal graphs always have identical edge vectors.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(Vertex n, GraphShape shape, std::vector<GEdge> edges);

  /// Simple undirected graph from an edge list.
  static LabeledGraph simple(Vertex n,
                             std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static LabeledGraph simple(Vertex n,
                             const std::vector<std::pair<Vertex, Vertex>>& edges);

  Vertex n() const { return n_; }
  const GraphShape& shape() const { return shape_; }
  GraphKind kind() const { return shape_.kind; }
  const std::vector<GEdge>& edges() const { return edges_; }

  /// Sum of multiplicities.
  std::uint64_t total_multiplicity() const;

  /// Multiplicity of the edge with exactly these (already normalized) verts, or 0.
  std::uint32_t multiplicity(const std::vector<Vertex>& verts) const;
  bool has_edge(Vertex a, Vertex b) const;

  bool is_simple() const {
    return shape_ == GraphShape::simple();
  }

  bool operator==(const LabeledGraph&) const = default;

 private:
  Vertex n_ = 0;
  GraphShape shape_{};
  std::vector<GEdge> edges_;
};

// Structural operations. All are pure.

/// Induced subgraph on the k cyclically consecutive vertices starting at i,
/// relabeled so that the vertex at offset t becomes t.
LabeledGraph window(const LabeledGraph& g, Vertex k, Vertex i);

LabeledGraph delete_first(const LabeledGraph& g);
LabeledGraph delete_last(const LabeledGraph& g);

/// Relabels every vertex v to (v + r) mod n.
LabeledGraph rotate(const LabeledGraph& g, std::int64_t r);

/// Relabels every vertex v to perm[v]; perm must be a permutation of 0..n-1.
LabeledGraph relabel(const LabeledGraph& g, const std::vector<Vertex>& perm);

/// I on labels 0..n_I-1 followed by J shifted up by n_I.
LabeledGraph disjoint_union_shifted(const LabeledGraph& i, const LabeledGraph& j);

/// Byte key, injective for graphs of a common (n, shape). Its lexicographic
/// order is the deterministic member order used everywhere.
std::string canonical_key(const LabeledGraph& g);

inline constexpr Vertex kIsomorphismLimit = 8;

/// Brute force over all n! bijections; n <= 8.
bool are_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

/// Pre-indexed cyclic window extraction for large host graphs.
class WindowIndex {
 public:
  explicit WindowIndex(const LabeledGraph& g);

  LabeledGraph at(Vertex k, Vertex i) const;
  const LabeledGraph& graph() const { return *graph_; }

 private:
  const LabeledGraph* graph_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Undirected simple-graph helpers shared by families and analysis.
bool is_connected(const LabeledGraph& g);
bool is_forest(const LabeledGraph& g);
bool is_tree(const LabeledGraph& g);
std::vector<std::uint32_t> degree_sequence(const LabeledGraph& g);

/// Human-readable edge list such as "{01,12}".
std::string describe(const LabeledGraph& g);

}  // namespace gucycle
