#include "gucycle/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gucycle {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::undirected: return "undirected";
    case GraphKind::directed: return "directed";
    case GraphKind::hyper: return "hyper";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad_graph(const std::string& msg) {
  throw Error(ErrorCode::invalid_graph, msg);
}

// Brings one edge to normal form for the given shape.
void normalize_edge(GEdge& e, Vertex n, const GraphShape& shape) {
  if (e.verts.empty()) bad_graph("edge with no vertices");
  if (e.mult == 0) bad_graph("edge with multiplicity 0");
  for (Vertex v : e.verts) {
    if (v >= n) {
      bad_graph("vertex " + std::to_string(v) + " out of range for n=" +
                std::to_string(n));
    }
  }
  switch (shape.kind) {
    case GraphKind::undirected:
      if (e.verts.size() > 2) bad_graph("undirected edge with more than 2 vertices");
      std::sort(e.verts.begin(), e.verts.end());
      if (e.verts.size() == 2 && e.verts[0] == e.verts[1]) e.verts.pop_back();
      break;
    case GraphKind::directed:
      if (e.verts.size() > 2) bad_graph("directed edge with more than 2 vertices");
      if (e.verts.size() == 2 && e.verts[0] == e.verts[1]) e.verts.pop_back();
      break;
    case GraphKind::hyper:
      std::sort(e.verts.begin(), e.verts.end());
      e.verts.erase(std::unique(e.verts.begin(), e.verts.end()), e.verts.end());
      break;
  }
  if (e.is_loop() && !shape.allows_loops) bad_graph("loop in a loopless graph");
}

}  // namespace

LabeledGraph::LabeledGraph(Vertex n, GraphShape shape, std::vector<GEdge> edges)
    : n_(n), shape_(shape) {
  if (shape_.max_mult == 0) bad_graph("max_mult must be at least 1");
  for (auto& e : edges) normalize_edge(e, n_, shape_);
  std::sort(edges.begin(), edges.end(),
            [](const GEdge& a, const GEdge& b) { return a.verts < b.verts; });
  for (auto& e : edges) {
    if (!edges_.empty() && edges_.back().verts == e.verts) {
      edges_.back().mult += e.mult;
    } else {
      edges_.push_back(std::move(e));
    }
  }
  for (const auto& e : edges_) {
    if (e.mult > shape_.max_mult) {
      bad_graph("edge multiplicity " + std::to_string(e.mult) + " exceeds max_mult " +
                std::to_string(shape_.max_mult));
    }
  }
}

LabeledGraph LabeledGraph::simple(Vertex n,
                                  std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return simple(n, std::vector<std::pair<Vertex, Vertex>>(edges));
}

LabeledGraph LabeledGraph::simple(Vertex n,
                                  const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<GEdge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) bad_graph("loop in a simple graph");
    es.push_back(GEdge{{a, b}, 1});
  }
  auto g = LabeledGraph(n, GraphShape::simple(), std::move(es));
  if (g.edges().size() != edges.size()) bad_graph("repeated edge in a simple graph");
  return g;
}

std::uint64_t LabeledGraph::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& e : edges_) total += e.mult;
  return total;
}

std::uint32_t LabeledGraph::multiplicity(const std::vector<Vertex>& verts) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), verts,
                             [](const GEdge& e, const std::vector<Vertex>& v) {
                               return e.verts < v;
                             });
  if (it != edges_.end() && it->verts == verts) return it->mult;
  return 0;
}

bool LabeledGraph::has_edge(Vertex a, Vertex b) const {
  if (shape_.kind != GraphKind::directed && a > b) std::swap(a, b);
  if (a == b) return multiplicity({a}) > 0;
  return multiplicity({a, b}) > 0;
}

namespace {

// Maps every edge through `map`, dropping edges that touch an unmapped vertex.
LabeledGraph induced_relabel(const LabeledGraph& g, Vertex new_n,
                             const std::vector<std::int64_t>& map) {
  std::vector<GEdge> out;
  for (const auto& e : g.edges()) {
    GEdge ne;
    ne.mult = e.mult;
    bool keep = true;
    for (Vertex v : e.verts) {
      if (map[v] < 0) {
        keep = false;
        break;
      }
      ne.verts.push_back(static_cast<Vertex>(map[v]));
    }
    if (keep) out.push_back(std::move(ne));
  }
  return LabeledGraph(new_n, g.shape(), std::move(out));
}

}  // namespace

LabeledGraph window(const LabeledGraph& g, Vertex k, Vertex i) {
  if (k > g.n()) {
    throw Error(ErrorCode::invalid_window, "window size " + std::to_string(k) +
                                               " exceeds vertex count " +
                                               std::to_string(g.n()));
  }
  if (g.n() > 0 && i >= g.n()) {
    throw Error(ErrorCode::invalid_window, "window start " + std::to_string(i) +
                                               " out of range");
  }
  std::vector<std::int64_t> map(g.n(), -1);
  for (Vertex t = 0; t < k; ++t) map[(i + t) % g.n()] = t;
  return induced_relabel(g, k, map);
}

LabeledGraph delete_first(const LabeledGraph& g) {
  if (g.n() == 0) throw Error(ErrorCode::empty_graph, "delete_first on an empty graph");
  std::vector<std::int64_t> map(g.n());
  std::iota(map.begin(), map.end(), std::int64_t{-1});
  return induced_relabel(g, g.n() - 1, map);
}

LabeledGraph delete_last(const LabeledGraph& g) {
  if (g.n() == 0) throw Error(ErrorCode::empty_graph, "delete_last on an empty graph");
  std::vector<std::int64_t> map(g.n());
  std::iota(map.begin(), map.end(), std::int64_t{0});
  map.back() = -1;
  return induced_relabel(g, g.n() - 1, map);
}

LabeledGraph rotate(const LabeledGraph& g, std::int64_t r) {
  if (g.n() == 0) return g;
  const auto n = static_cast<std::int64_t>(g.n());
  const std::int64_t shift = ((r % n) + n) % n;
  std::vector<std::int64_t> map(g.n());
  for (std::int64_t v = 0; v < n; ++v) map[v] = (v + shift) % n;
  return induced_relabel(g, g.n(), map);
}

LabeledGraph relabel(const LabeledGraph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.n()) bad_graph("relabeling has the wrong length");
  std::vector<std::int64_t> map(perm.begin(), perm.end());
  return induced_relabel(g, g.n(), map);
}

LabeledGraph disjoint_union_shifted(const LabeledGraph& i, const LabeledGraph& j) {
  if (!(i.shape() == j.shape())) {
    throw Error(ErrorCode::incompatible_kinds,
                "disjoint union of graphs with different kinds");
  }
  std::vector<GEdge> edges = i.edges();
  for (GEdge e : j.edges()) {
    for (auto& v : e.verts) v += i.n();
    edges.push_back(std::move(e));
  }
  return LabeledGraph(i.n() + j.n(), i.shape(), std::move(edges));
}

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

}  // namespace

// Layout: kind, loops flag, max_mult, n, then per edge its arity, vertices and
// multiplicity. Everything big-endian so byte order equals numeric order.
std::string canonical_key(const LabeledGraph& g) {
  std::string key;
  key.reserve(10 + g.edges().size() * 13);
  key.push_back(static_cast<char>(g.kind()));
  key.push_back(static_cast<char>(g.shape().allows_loops ? 1 : 0));
  put_u32(key, g.shape().max_mult);
  put_u32(key, g.n());
  for (const auto& e : g.edges()) {
    key.push_back(static_cast<char>(e.verts.size()));
    for (Vertex v : e.verts) put_u32(key, v);
    put_u32(key, e.mult);
  }
  return key;
}

bool are_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.n() > kIsomorphismLimit || h.n() > kIsomorphismLimit) {
    throw Error(ErrorCode::size_guard, "isomorphism test limited to 8 vertices");
  }
  if (g.n() != h.n() || !(g.shape() == h.shape())) return false;
  if (g.edges().size() != h.edges().size()) return false;
  if (g.total_multiplicity() != h.total_multiplicity()) return false;
  auto dg = degree_sequence(g);
  auto dh = degree_sequence(h);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;

  std::vector<Vertex> perm(g.n());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    if (relabel(g, perm) == h) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

WindowIndex::WindowIndex(const LabeledGraph& g) : graph_(&g), incident_(g.n()) {
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    for (Vertex v : g.edges()[e].verts) incident_[v].push_back(e);
  }
}

LabeledGraph WindowIndex::at(Vertex k, Vertex i) const {
  const auto& g = *graph_;
  const Vertex n = g.n();
  if (k > n) {
    throw Error(ErrorCode::invalid_window, "window size " + std::to_string(k) +
                                               " exceeds vertex count " +
                                               std::to_string(n));
  }
  if (n > 0 && i >= n) {
    throw Error(ErrorCode::invalid_window, "window start out of range");
  }
  std::vector<GEdge> out;
  for (Vertex t = 0; t < k; ++t) {
    const Vertex v = (i + t) % n;
    for (std::size_t e : incident_[v]) {
      const auto& edge = g.edges()[e];
      GEdge ne;
      ne.mult = edge.mult;
      Vertex least = k;
      bool inside = true;
      for (Vertex u : edge.verts) {
        const Vertex off = (u + n - i) % n;
        if (off >= k) {
          inside = false;
          break;
        }
        least = std::min(least, off);
        ne.verts.push_back(off);
      }
      // Emit each edge once, from its earliest window vertex.
      if (inside && least == t) out.push_back(std::move(ne));
    }
  }
  return LabeledGraph(k, g.shape(), std::move(out));
}

namespace {

struct DisjointSets {
  std::vector<Vertex> parent;
  explicit DisjointSets(Vertex n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_connected(const LabeledGraph& g) {
  if (g.n() <= 1) return true;
  DisjointSets ds(g.n());
  Vertex comps = g.n();
  for (const auto& e : g.edges()) {
    for (std::size_t t = 1; t < e.verts.size(); ++t) {
      if (ds.unite(e.verts[0], e.verts[t])) --comps;
    }
  }
  return comps == 1;
}

bool is_forest(const LabeledGraph& g) {
  DisjointSets ds(g.n());
  for (const auto& e : g.edges()) {
    if (e.is_loop() || e.mult > 1 || e.verts.size() != 2) return false;
    if (!ds.unite(e.verts[0], e.verts[1])) return false;
  }
  return true;
}

bool is_tree(const LabeledGraph& g) {
  if (g.n() == 0) return false;
  return g.total_multiplicity() + 1 == g.n() && is_forest(g) && is_connected(g);
}

std::vector<std::uint32_t> degree_sequence(const LabeledGraph& g) {
  std::vector<std::uint32_t> deg(g.n(), 0);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      deg[e.verts[0]] += 2 * e.mult;
    } else {
      for (Vertex v : e.verts) deg[v] += e.mult;
    }
  }
  return deg;
}

std::string describe(const LabeledGraph& g) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) os << ',';
    first = false;
    const bool compact = g.n() <= 10;
    for (std::size_t t = 0; t < e.verts.size(); ++t) {
      if (t > 0 && !compact) os << '-';
      os << e.verts[t];
    }
    if (e.mult > 1) os << 'x' << e.mult;
  }
  os << "} on " << g.n();
  return os.str();
}

}  // namespace gucycle
