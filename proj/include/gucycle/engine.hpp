#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gucycle/families.hpp"
#include "gucycle/graph.hpp"

namespace gucycle {

/// One family member viewed as an arc between its two overlaps.
struct Arc {
  LabeledGraph member;
  std::size_t tail = 0;  // index of delete_last(member)
  std::size_t head = 0;  // index of delete_first(member)
};

/// Vertices are the distinct (k-1)-vertex overlaps in canonical_key order;
/// arcs are the family members in canonical_key order.
struct ArcDigraph {
  FamilySpec spec;
  std::vector<LabeledGraph> overlaps;
  std::vector<Arc> arcs;

  std::size_t overlap_index(const LabeledGraph& overlap) const;
};

struct DegreeRow {
  std::size_t overlap = 0;
  std::size_t in = 0;
  std::size_t out = 0;
};

/// The cyclic labeled graph whose k-windows list the family.
struct HostGraph {
  LabeledGraph cycle;
  std::uint32_t k = 0;
  FamilySpec spec;

  bool operator==(const HostGraph&) const = default;
};

struct VerifyReport {
  bool ok = false;
  std::size_t windows = 0;
  std::size_t family_size = 0;
  std::vector<LabeledGraph> missing;
  std::vector<std::pair<LabeledGraph, std::vector<std::size_t>>> duplicated;
  std::vector<std::pair<std::size_t, LabeledGraph>> foreign;

  /// Windows that hit a member no other window hits.
  std::size_t matched() const;
};

struct EngineOptions {
  std::uint64_t family_budget = kDefaultFamilyBudget;
  /// Node limit for the circuit search used when the deterministic circuit
  /// cannot be realized (only possible when N <= 2k-2).
  std::uint64_t search_budget = 10'000'000;
};

ArcDigraph build_arc_digraph(const FamilySpec& spec,
                             std::uint64_t budget = kDefaultFamilyBudget);

/// In/out degree of every overlap.
std::vector<DegreeRow> degree_table(const ArcDigraph& d);

/// Overlaps whose in-degree differs from their out-degree.
std::vector<DegreeRow> check_balanced(const ArcDigraph& d);

/// Strong connectivity of the subgraph spanned by overlaps that carry arcs.
bool check_strongly_connected(const ArcDigraph& d);

/// Deterministic Hierholzer circuit as arc indices. Starts with arc 0 and
/// always takes the least unused outgoing arc.
std::vector<std::size_t> eulerian_arc_order(const ArcDigraph& d);

/// The same circuit as the sequence of members it visits.
std::vector<LabeledGraph> eulerian_circuit(const ArcDigraph& d);

/// Realizes a circuit as a cyclic host. Each member contributes the edges
/// touching its last vertex; the result is checked window by window.
HostGraph assemble_host(const std::vector<LabeledGraph>& circuit, std::uint32_t k,
                        const FamilySpec& spec);

HostGraph generate(const FamilySpec& spec, const EngineOptions& options = {});

VerifyReport verify(const HostGraph& host,
                    std::uint64_t budget = kDefaultFamilyBudget);

}  // namespace gucycle
