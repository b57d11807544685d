#include "gucycle/witnesses.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <map>
#include <set>

namespace gucycle {

LabeledGraph segment_from_steps(const std::vector<LabeledGraph>& steps) {
  if (steps.empty()) throw Error(ErrorCode::inconsistent_circuit, "empty walk");
  const Vertex k = steps.front().n();
  if (k == 0) throw Error(ErrorCode::inconsistent_circuit, "walk over 0-vertex graphs");
  for (std::size_t t = 0; t + 1 < steps.size(); ++t) {
    if (!(delete_first(steps[t]) == delete_last(steps[t + 1]))) {
      throw Error(ErrorCode::inconsistent_circuit,
                  "steps " + std::to_string(t) + " and " + std::to_string(t + 1) +
                      " do not overlap");
    }
  }
  std::vector<GEdge> edges = steps.front().edges();
  for (std::size_t t = 1; t < steps.size(); ++t) {
    for (const auto& e : steps[t].edges()) {
      if (std::find(e.verts.begin(), e.verts.end(), k - 1) == e.verts.end()) continue;
      GEdge shifted = e;
      for (auto& v : shifted.verts) v += static_cast<Vertex>(t);
      edges.push_back(std::move(shifted));
    }
  }
  return LabeledGraph(static_cast<Vertex>(steps.size()) + k - 1, steps.front().shape(),
                      std::move(edges));
}

bool is_valid_walk(const WindowWalk& walk) {
  if (walk.steps.empty()) return false;
  const Vertex k = walk.spec.k;
  if (walk.segment.n() != walk.steps.size() + k - 1) return false;
  for (std::size_t t = 0; t < walk.steps.size(); ++t) {
    if (!contains(walk.spec, walk.steps[t])) return false;
    if (t + 1 < walk.steps.size() &&
        !(delete_first(walk.steps[t]) == delete_last(walk.steps[t + 1]))) {
      return false;
    }
    if (!(window(walk.segment, k, static_cast<Vertex>(t)) == walk.steps[t])) return false;
  }
  return true;
}

// --- rotation pairing -------------------------------------------------------

bool RotationPairing::bijective() const {
  if (pairs.size() != in_arcs.size() || in_arcs.size() != out_arcs.size()) return false;
  std::set<std::string> outs;
  for (const auto& g : out_arcs) outs.insert(canonical_key(g));
  std::set<std::string> images;
  for (const auto& [in, image] : pairs) {
    const auto key = canonical_key(image);
    if (!outs.count(key)) return false;
    if (!images.insert(key).second) return false;
  }
  return images.size() == outs.size();
}

namespace {

RotationPairing pairing_at(const LabeledGraph& overlap, const std::vector<LabeledGraph>& in_arcs,
                           const std::vector<LabeledGraph>& out_arcs) {
  RotationPairing p;
  p.overlap = overlap;
  p.in_arcs = in_arcs;
  p.out_arcs = out_arcs;
  for (const auto& arc : in_arcs) p.pairs.emplace_back(arc, rotate(arc, -1));
  return p;
}

void require_rotation_closed(const FamilySpec& spec, std::uint64_t budget) {
  if (!is_rotation_closed(spec, budget)) {
    throw Error(ErrorCode::hypothesis, to_string(spec) + " is not closed under rotation");
  }
}

}  // namespace

RotationPairing rotation_pairing(const LabeledGraph& overlap, const FamilySpec& spec,
                                 std::uint64_t budget) {
  require_rotation_closed(spec, budget);
  if (overlap.n() + 1 != spec.k) {
    throw Error(ErrorCode::membership, "overlap must have k-1 vertices");
  }
  std::vector<LabeledGraph> in_arcs, out_arcs;
  for (const auto& g : enumerate(spec, budget)) {
    if (delete_first(g) == overlap) in_arcs.push_back(g);
    if (delete_last(g) == overlap) out_arcs.push_back(g);
  }
  return pairing_at(overlap, in_arcs, out_arcs);
}

std::vector<RotationPairing> rotation_pairings(const ArcDigraph& d) {
  require_rotation_closed(d.spec, kDefaultFamilyBudget);
  std::vector<std::vector<LabeledGraph>> in(d.overlaps.size()), out(d.overlaps.size());
  for (const auto& arc : d.arcs) {
    in[arc.head].push_back(arc.member);
    out[arc.tail].push_back(arc.member);
  }
  std::vector<RotationPairing> result;
  result.reserve(d.overlaps.size());
  for (std::size_t v = 0; v < d.overlaps.size(); ++v) {
    result.push_back(pairing_at(d.overlaps[v], in[v], out[v]));
  }
  return result;
}

// --- union walks ------------------------------------------------------------

namespace {

WindowWalk union_walk(const FamilySpec& spec, LabeledGraph segment) {
  WindowWalk walk{spec, {}, std::move(segment), {}};
  for (Vertex t = 0; t <= spec.k; ++t) walk.steps.push_back(window(walk.segment, spec.k, t));
  return walk;
}

}  // namespace

WindowWalk path_via_union(const LabeledGraph& i, const LabeledGraph& j, const FamilySpec& spec) {
  if (!contains(spec, i) || !contains(spec, j)) {
    throw Error(ErrorCode::membership, "both endpoints must belong to " + to_string(spec));
  }
  auto walk = union_walk(spec, disjoint_union_shifted(i, j));
  for (std::size_t t = 0; t < walk.steps.size(); ++t) {
    if (!contains(spec, walk.steps[t])) {
      throw Error(ErrorCode::not_applicable,
                  "window " + std::to_string(t) + " of the union is " + describe(walk.steps[t]) +
                      ", outside " + to_string(spec) +
                      (spec.family == Family::trees ? "; use tree_repair_path" : ""));
    }
  }
  return walk;
}

namespace {

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

// Union-find over the vertices of one window.
struct Components {
  std::vector<Vertex> parent;
  Vertex base;
  explicit Components(Vertex first, Vertex count) : parent(count), base(first) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
  }
  Vertex find(Vertex v) {
    v -= base;
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

class TreeRepair {
 public:
  explicit TreeRepair(Vertex k) : k_(k) {}

  std::optional<EdgeSet> run(EdgeSet edges) const {
    // Windows 0 and k are I and J themselves.
    for (Vertex t = 1; t < k_; ++t) {
      const Vertex last = t + k_ - 1;
      Components comps(t, k_);
      std::size_t inside = 0;
      for (auto [a, b] : edges) {
        if (a < t || b > last) continue;
        ++inside;
        if (!comps.unite(a, b)) return std::nullopt;  // cycle: backtrack
      }
      if (inside + 1 == k_) continue;  // acyclic with k-1 edges: a tree

      // One list of I-side attachment points per component missing `last`.
      std::map<Vertex, std::vector<Vertex>> targets;
      for (Vertex v = t; v < last; ++v) {
        if (comps.find(v) == comps.find(last)) continue;
        auto& list = targets[comps.find(v)];
        if (v < k_) list.push_back(v);
      }
      std::vector<std::vector<Vertex>> choices;
      for (auto& [root, list] : targets) {
        if (list.empty()) return std::nullopt;  // only J-side vertices: unreachable
        std::sort(list.rbegin(), list.rend());
        choices.push_back(std::move(list));
      }
      return choose(edges, last, choices, 0);
    }
    return edges;
  }

 private:
  std::optional<EdgeSet> choose(EdgeSet& edges, Vertex last,
                                const std::vector<std::vector<Vertex>>& choices,
                                std::size_t at) const {
    if (at == choices.size()) return run(edges);
    for (Vertex target : choices[at]) {
      edges.emplace(target, last);
      if (auto done = choose(edges, last, choices, at + 1)) return done;
      edges.erase({target, last});
    }
    return std::nullopt;
  }

  Vertex k_;
};

}  // namespace

WindowWalk tree_repair_path(const LabeledGraph& i, const LabeledGraph& j, std::uint32_t k) {
  if (k < 3) throw Error(ErrorCode::unsupported_k, "tree repair needs k >= 3");
  const auto spec = FamilySpec::trees(k);
  if (!contains(spec, i) || !contains(spec, j)) {
    throw Error(ErrorCode::membership, "tree_repair_path needs two labeled trees on k vertices");
  }
  EdgeSet edges;
  const auto joined = disjoint_union_shifted(i, j);
  for (const auto& e : joined.edges()) {
    edges.emplace(e.verts[0], e.verts[1]);
  }
  auto repaired = TreeRepair(k).run(std::move(edges));
  if (!repaired) {
    throw Error(ErrorCode::not_applicable, "no cross-edge repair joins " + describe(i) +
                                               " to " + describe(j));
  }
  return union_walk(spec,
                    LabeledGraph::simple(2 * k, std::vector(repaired->begin(), repaired->end())));
}

// --- degree descent ---------------------------------------------------------

LabeledGraph least_degree_graph(std::uint32_t k, std::uint32_t m) {
  if (m > binomial(k, 2)) {
    throw Error(ErrorCode::out_of_range, "m exceeds C(k,2)");
  }
  // Leading zeros first: pack the edges onto the fewest top vertices.
  std::uint32_t r = 0;
  while (binomial(r, 2) < m) ++r;
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (r == 0) return LabeledGraph::simple(k, edges);
  const Vertex low = k - r;
  for (Vertex a = low + 1; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b) edges.emplace_back(a, b);
  // The lowest used vertex takes the remainder, on the highest labels.
  const auto extra = m - binomial(r - 1, 2);
  for (std::uint64_t t = 0; t < extra; ++t) edges.emplace_back(low, k - 1 - static_cast<Vertex>(t));
  return LabeledGraph::simple(k, edges);
}

namespace {

// Symmetric adjacency bitmasks; k <= 64.
using Adjacency = std::vector<std::uint64_t>;

Adjacency to_adjacency(const LabeledGraph& g) {
  Adjacency adj(g.n(), 0);
  for (const auto& e : g.edges()) {
    adj[e.verts[0]] |= std::uint64_t{1} << e.verts[1];
    adj[e.verts[1]] |= std::uint64_t{1} << e.verts[0];
  }
  return adj;
}

LabeledGraph from_adjacency(const Adjacency& adj) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto n = static_cast<Vertex>(adj.size());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if ((adj[a] >> b) & 1) edges.emplace_back(a, b);
  return LabeledGraph::simple(n, edges);
}

std::vector<std::uint32_t> degrees(const Adjacency& adj) {
  std::vector<std::uint32_t> d;
  for (auto row : adj) d.push_back(static_cast<std::uint32_t>(std::popcount(row)));
  return d;
}

void set_neighbors(Adjacency& adj, Vertex x, std::uint64_t mask) {
  for (Vertex v = 0; v < adj.size(); ++v) {
    adj[v] &= ~(std::uint64_t{1} << x);
    if ((mask >> v) & 1) adj[v] |= std::uint64_t{1} << x;
  }
  adj[x] = mask;
}

// Replacement neighbor set per pivot 0..k-1, applied in that order; empty
// means the pivot keeps its neighbors.
using MacroStep = std::vector<std::optional<std::uint64_t>>;

// Move one edge {i, i'} to {i', j} for the first differing position i.
std::optional<MacroStep> swap_step(const Adjacency& adj, const std::vector<std::uint32_t>& target) {
  const auto k = static_cast<Vertex>(adj.size());
  const auto d = degrees(adj);
  Vertex i = 0;
  while (i < k && d[i] == target[i]) ++i;
  if (i == k) return std::nullopt;
  for (Vertex ip = 0; ip < k; ++ip) {
    if (!((adj[i] >> ip) & 1)) continue;
    for (Vertex j = i + 1; j < k; ++j) {
      if (j == ip || ((adj[ip] >> j) & 1)) continue;
      MacroStep step(k);
      step[ip] = (adj[ip] & ~(std::uint64_t{1} << i)) | (std::uint64_t{1} << j);
      return step;
    }
  }
  return std::nullopt;
}

// Every pivot may rewire once, keeping its degree; first strictly smaller
// endpoint in (unchanged first, then ascending mask) order wins.
class MacroSearch {
 public:
  MacroSearch(const Adjacency& start, std::uint64_t budget)
      : start_(start), start_degrees_(degrees(start)), budget_(budget) {}

  std::optional<MacroStep> run() {
    Adjacency adj = start_;
    MacroStep step(adj.size());
    if (dfs(adj, step, 0)) return step;
    if (nodes_ > budget_) {
      throw Error(ErrorCode::resource_guard, "degree descent macro-step search exceeded its budget");
    }
    return std::nullopt;
  }

 private:
  bool dfs(Adjacency& adj, MacroStep& step, Vertex x) {
    if (++nodes_ > budget_) return false;
    const auto k = static_cast<Vertex>(adj.size());
    if (x == k) return degrees(adj) < start_degrees_;
    const std::uint64_t current = adj[x];
    const int size = std::popcount(current);
    const std::uint64_t universe = ((k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1) &
                                   ~(std::uint64_t{1} << x);
    std::vector<std::uint64_t> options{current};
    for (std::uint64_t mask = 0; mask <= universe; ++mask) {
      if ((mask & ~universe) != 0 || mask == current || std::popcount(mask) != size) continue;
      options.push_back(mask);
    }
    for (auto mask : options) {
      Adjacency saved = adj;
      set_neighbors(adj, x, mask);
      step[x] = mask == current ? std::nullopt : std::optional(mask);
      if (dfs(adj, step, x + 1)) return true;
      adj = std::move(saved);
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const Adjacency& start_;
  std::vector<std::uint32_t> start_degrees_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

WindowWalk degree_descent_path(const LabeledGraph& i, std::uint32_t k, std::uint32_t m) {
  const auto spec = FamilySpec::m_edges(k, m);
  validate(spec);
  if (!contains(spec, i)) {
    throw Error(ErrorCode::membership, describe(i) + " is not a graph with " +
                                           std::to_string(m) + " edges on " + std::to_string(k) +
                                           " vertices");
  }
  if (k > 16) throw Error(ErrorCode::size_guard, "degree descent is limited to k <= 16");

  const auto goal = least_degree_graph(k, m);
  const auto goal_degrees = degree_sequence(goal);
  WindowWalk walk{spec, {i}, {}, {0}};
  Adjacency adj = to_adjacency(i);
  while (degrees(adj) != goal_degrees) {
    auto step = swap_step(adj, goal_degrees);
    if (!step) step = MacroSearch(adj, 10'000'000).run();
    if (!step) {
      throw Error(ErrorCode::not_applicable,
                  "no degree-lowering macro-step from " + describe(from_adjacency(adj)));
    }
    // Move s re-enters pivot s-1 as the last window vertex.
    for (Vertex s = 1; s <= k; ++s) {
      if (const auto& mask = (*step)[s - 1]) set_neighbors(adj, s - 1, *mask);
      walk.steps.push_back(rotate(from_adjacency(adj), -static_cast<std::int64_t>(s)));
    }
    walk.milestones.push_back(walk.steps.size() - 1);
  }
  if (!(walk.steps.back() == goal)) {
    throw Error(ErrorCode::hypothesis, "least degree sequence is not attained by a unique graph");
  }
  walk.segment = segment_from_steps(walk.steps);
  return walk;
}

}  // namespace gucycle
