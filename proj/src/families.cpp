#include "gucycle/families.hpp"

#include <algorithm>
#include <limits>

namespace gucycle {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t t = 0; t < exp; ++t) {
    out = sat_mul(out, base);
    if (out == kSaturated) break;
  }
  return out;
}

[[noreturn]] void out_of_range(const std::string& msg) {
  throw Error(ErrorCode::out_of_range, msg);
}

// Candidate edge positions for an unrestricted family, in vertex-list order.
std::vector<std::vector<Vertex>> edge_slots(const FamilySpec& spec) {
  const Vertex k = spec.k;
  std::vector<std::vector<Vertex>> slots;
  switch (spec.family) {
    case Family::simple:
    case Family::multigraph:
    case Family::trees:
    case Family::m_edges:
      for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 1; b < k; ++b) slots.push_back({a, b});
      break;
    case Family::loops:
      for (Vertex a = 0; a < k; ++a) {
        slots.push_back({a});
        for (Vertex b = a + 1; b < k; ++b) slots.push_back({a, b});
      }
      break;
    case Family::directed:
      for (Vertex a = 0; a < k; ++a)
        for (Vertex b = 0; b < k; ++b)
          if (a != b) slots.push_back({a, b});
      break;
    case Family::hypergraph:
    case Family::uniform_hypergraph: {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Vertex> verts;
        for (Vertex v = 0; v < k; ++v)
          if ((mask >> v) & 1) verts.push_back(v);
        if (verts.size() < 2) continue;
        if (spec.family == Family::uniform_hypergraph && verts.size() != spec.j) continue;
        slots.push_back(std::move(verts));
      }
      std::sort(slots.begin(), slots.end());
      break;
    }
  }
  return slots;
}

// Cayley-tree decoding; `code` has length k-2.
LabeledGraph decode_pruefer(Vertex k, const std::vector<Vertex>& code) {
  std::vector<std::uint32_t> degree(k, 1);
  for (Vertex v : code) ++degree[v];
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex u = k, w = k;
  for (Vertex v = 0; v < k; ++v) {
    if (degree[v] == 1) (u == k ? u : w) = v;
  }
  edges.emplace_back(u, w);
  return LabeledGraph::simple(k, edges);
}

std::vector<LabeledGraph> enumerate_trees(Vertex k) {
  std::vector<LabeledGraph> out;
  if (k <= 2) {
    out.push_back(k == 2 ? LabeledGraph::simple(2, {{0, 1}}) : LabeledGraph::simple(k, {}));
    return out;
  }
  std::vector<Vertex> code(k - 2, 0);
  while (true) {
    out.push_back(decode_pruefer(k, code));
    std::size_t pos = 0;
    while (pos < code.size() && ++code[pos] == k) code[pos++] = 0;
    if (pos == code.size()) break;
  }
  return out;
}

std::vector<LabeledGraph> enumerate_m_edges(const FamilySpec& spec) {
  const auto slots = edge_slots(spec);
  std::vector<LabeledGraph> out;
  std::vector<std::size_t> pick(spec.m);
  for (std::size_t t = 0; t < pick.size(); ++t) pick[t] = t;
  while (true) {
    std::vector<GEdge> edges;
    for (std::size_t s : pick) edges.push_back(GEdge{slots[s], 1});
    out.emplace_back(spec.k, shape_of(spec), std::move(edges));
    // Next combination in lexicographic order.
    std::size_t t = pick.size();
    while (t > 0 && pick[t - 1] == slots.size() - pick.size() + t - 1) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t u = t; u < pick.size(); ++u) pick[u] = pick[u - 1] + 1;
  }
  return out;
}

// Every assignment of multiplicities 0..max_mult to every slot.
std::vector<LabeledGraph> enumerate_free(const FamilySpec& spec) {
  const auto slots = edge_slots(spec);
  const auto shape = shape_of(spec);
  std::vector<std::uint32_t> mult(slots.size(), 0);
  std::vector<LabeledGraph> out;
  while (true) {
    std::vector<GEdge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mult[s] > 0) edges.push_back(GEdge{slots[s], mult[s]});
    out.emplace_back(spec.k, shape, std::move(edges));
    std::size_t pos = 0;
    while (pos < mult.size() && ++mult[pos] > shape.max_mult) mult[pos++] = 0;
    if (pos == mult.size()) break;
  }
  return out;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 out = 1;
  for (std::uint64_t t = 1; t <= r; ++t) {
    out = out * (n - r + t) / t;
    if (out > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(out);
}

void validate(const FamilySpec& spec) {
  const std::uint64_t pairs = binomial(spec.k, 2);
  switch (spec.family) {
    case Family::multigraph:
      if (spec.m < 1) out_of_range("multigraph requires m >= 1");
      break;
    case Family::uniform_hypergraph:
      if (spec.j < 2 || spec.j > spec.k) out_of_range("uniform requires 2 <= j <= k");
      break;
    case Family::trees:
      if (spec.k < 1) out_of_range("trees require k >= 1");
      break;
    case Family::m_edges:
      if (spec.m > pairs) out_of_range("m_edges requires m <= C(k,2)");
      break;
    default:
      break;
  }
  if (spec.k > 64) out_of_range("k larger than 64 is not supported");
}

GraphShape shape_of(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::loops: return {GraphKind::undirected, true, 1};
    case Family::multigraph: return {GraphKind::undirected, false, std::max(spec.m, 1u)};
    case Family::directed: return {GraphKind::directed, false, 1};
    case Family::hypergraph:
    case Family::uniform_hypergraph: return {GraphKind::hyper, false, 1};
    default: return GraphShape::simple();
  }
}

std::uint64_t family_size(const FamilySpec& spec) {
  validate(spec);
  const std::uint64_t k = spec.k;
  const std::uint64_t pairs = binomial(k, 2);
  switch (spec.family) {
    case Family::simple: return sat_pow(2, pairs);
    case Family::loops: return sat_pow(2, pairs + k);
    case Family::multigraph: return sat_pow(spec.m + 1, pairs);
    case Family::directed: return sat_pow(2, k * (k - (k > 0 ? 1 : 0)));
    case Family::hypergraph:
      if (k >= 64) return kSaturated;
      return sat_pow(2, (std::uint64_t{1} << k) - k - 1);
    case Family::uniform_hypergraph: return sat_pow(2, binomial(k, spec.j));
    case Family::trees: return k <= 1 ? 1 : sat_pow(k, k - 2);
    case Family::m_edges: return binomial(pairs, spec.m);
  }
  return 0;
}

std::vector<LabeledGraph> enumerate(const FamilySpec& spec, std::uint64_t budget) {
  const std::uint64_t size = family_size(spec);
  if (size > budget) {
    throw Error(ErrorCode::resource_guard,
                to_string(spec) + " has " +
                    (size == kSaturated ? std::string("too many") : std::to_string(size)) +
                    " members, over the budget of " + std::to_string(budget));
  }
  std::vector<LabeledGraph> out;
  switch (spec.family) {
    case Family::trees: out = enumerate_trees(spec.k); break;
    case Family::m_edges: out = enumerate_m_edges(spec); break;
    default: out = enumerate_free(spec); break;
  }
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t t = 0; t < out.size(); ++t) keyed.emplace_back(canonical_key(out[t]), t);
  std::sort(keyed.begin(), keyed.end());
  std::vector<LabeledGraph> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, t] : keyed) sorted.push_back(std::move(out[t]));
  return sorted;
}

bool contains(const FamilySpec& spec, const LabeledGraph& g) {
  if (g.n() != spec.k || !(g.shape() == shape_of(spec))) return false;
  switch (spec.family) {
    case Family::trees:
      return is_tree(g);
    case Family::m_edges:
      return g.total_multiplicity() == spec.m;
    case Family::hypergraph:
      return std::all_of(g.edges().begin(), g.edges().end(),
                         [](const GEdge& e) { return e.verts.size() >= 2; });
    case Family::uniform_hypergraph:
      return std::all_of(g.edges().begin(), g.edges().end(),
                         [&](const GEdge& e) { return e.verts.size() == spec.j; });
    default:
      // Shape already fixes everything for the unrestricted families.
      return true;
  }
}

bool is_rotation_closed(const FamilySpec& spec, std::uint64_t budget) {
  for (const auto& g : enumerate(spec, budget)) {
    if (!contains(spec, rotate(g, 1))) return false;
  }
  return true;
}

}  // namespace gucycle
