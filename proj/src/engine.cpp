#include "gucycle/engine.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

namespace gucycle {

std::size_t ArcDigraph::overlap_index(const LabeledGraph& overlap) const {
  const auto key = canonical_key(overlap);
  auto it = std::lower_bound(overlaps.begin(), overlaps.end(), key,
                             [](const LabeledGraph& g, const std::string& k) {
                               return canonical_key(g) < k;
                             });
  if (it == overlaps.end() || !(*it == overlap)) {
    throw Error(ErrorCode::membership, "graph " + describe(overlap) + " is not an overlap");
  }
  return static_cast<std::size_t>(it - overlaps.begin());
}

std::size_t VerifyReport::matched() const {
  std::size_t dup_windows = 0;
  for (const auto& [member, where] : duplicated) dup_windows += where.size();
  return windows - foreign.size() - dup_windows;
}

ArcDigraph build_arc_digraph(const FamilySpec& spec, std::uint64_t budget) {
  if (spec.k < 3) {
    throw Error(ErrorCode::unsupported_k,
                "arc digraph needs k >= 3 (k = 2 requires a modified window, k <= 1 is trivial)");
  }
  ArcDigraph d;
  d.spec = spec;
  auto members = enumerate(spec, budget);

  std::map<std::string, LabeledGraph> overlap_by_key;
  std::vector<std::pair<std::string, std::string>> ends;
  ends.reserve(members.size());
  for (const auto& g : members) {
    auto tail = delete_last(g);
    auto head = delete_first(g);
    auto tail_key = canonical_key(tail);
    auto head_key = canonical_key(head);
    overlap_by_key.try_emplace(tail_key, std::move(tail));
    overlap_by_key.try_emplace(head_key, std::move(head));
    ends.emplace_back(std::move(tail_key), std::move(head_key));
  }

  std::unordered_map<std::string, std::size_t> index;
  for (auto& [key, g] : overlap_by_key) {
    index.emplace(key, d.overlaps.size());
    d.overlaps.push_back(std::move(g));
  }
  d.arcs.reserve(members.size());
  for (std::size_t t = 0; t < members.size(); ++t) {
    d.arcs.push_back(Arc{std::move(members[t]), index.at(ends[t].first),
                         index.at(ends[t].second)});
  }
  return d;
}

std::vector<DegreeRow> degree_table(const ArcDigraph& d) {
  std::vector<DegreeRow> rows(d.overlaps.size());
  for (std::size_t v = 0; v < rows.size(); ++v) rows[v].overlap = v;
  for (const auto& arc : d.arcs) {
    ++rows[arc.tail].out;
    ++rows[arc.head].in;
  }
  return rows;
}

std::vector<DegreeRow> check_balanced(const ArcDigraph& d) {
  std::vector<DegreeRow> bad;
  for (const auto& row : degree_table(d)) {
    if (row.in != row.out) bad.push_back(row);
  }
  return bad;
}

namespace {

std::vector<std::vector<std::size_t>> out_arcs(const ArcDigraph& d) {
  std::vector<std::vector<std::size_t>> out(d.overlaps.size());
  // Arcs are stored in key order, so each list is key-ordered too.
  for (std::size_t a = 0; a < d.arcs.size(); ++a) out[d.arcs[a].tail].push_back(a);
  return out;
}

std::size_t count_reachable(std::size_t start,
                            const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

bool check_strongly_connected(const ArcDigraph& d) {
  const std::size_t n = d.overlaps.size();
  std::vector<std::vector<std::size_t>> fwd(n), back(n);
  std::vector<bool> active(n, false);
  for (const auto& arc : d.arcs) {
    fwd[arc.tail].push_back(arc.head);
    back[arc.head].push_back(arc.tail);
    active[arc.tail] = active[arc.head] = true;
  }
  const auto active_count = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
  if (active_count == 0) return true;
  const auto start = static_cast<std::size_t>(std::find(active.begin(), active.end(), true) - active.begin());
  return count_reachable(start, fwd) == active_count &&
         count_reachable(start, back) == active_count;
}

std::vector<std::size_t> eulerian_arc_order(const ArcDigraph& d) {
  if (auto bad = check_balanced(d); !bad.empty()) {
    throw Error(ErrorCode::no_eulerian_circuit,
                "check_balanced failed: overlap " + describe(d.overlaps[bad.front().overlap]) +
                    " has in-degree " + std::to_string(bad.front().in) + " and out-degree " +
                    std::to_string(bad.front().out));
  }
  if (!check_strongly_connected(d)) {
    throw Error(ErrorCode::no_eulerian_circuit,
                "check_strongly_connected failed: arc digraph of " + to_string(d.spec) +
                    " is not strongly connected");
  }
  if (d.arcs.empty()) return {};

  const auto out = out_arcs(d);
  std::vector<std::size_t> next(out.size(), 0);
  // (vertex, arc used to reach it); SIZE_MAX marks the start.
  std::vector<std::pair<std::size_t, std::size_t>> stack{{d.arcs[0].tail, SIZE_MAX}};
  std::vector<std::size_t> circuit;
  circuit.reserve(d.arcs.size());
  while (!stack.empty()) {
    const auto [v, via] = stack.back();
    if (next[v] < out[v].size()) {
      const auto a = out[v][next[v]++];
      stack.emplace_back(d.arcs[a].head, a);
    } else {
      stack.pop_back();
      if (via != SIZE_MAX) circuit.push_back(via);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

std::vector<LabeledGraph> eulerian_circuit(const ArcDigraph& d) {
  std::vector<LabeledGraph> members;
  for (auto a : eulerian_arc_order(d)) members.push_back(d.arcs[a].member);
  return members;
}

HostGraph assemble_host(const std::vector<LabeledGraph>& circuit, std::uint32_t k,
                        const FamilySpec& spec) {
  const auto n = static_cast<Vertex>(circuit.size());
  if (n < k || n == 0) {
    throw Error(ErrorCode::family_too_small,
                "circuit of length " + std::to_string(n) + " cannot host windows of size " +
                    std::to_string(k));
  }
  const GraphShape shape = circuit.front().shape();
  if (k > 0) {
    for (Vertex t = 0; t < n; ++t) {
      if (circuit[t].n() != k) {
        throw Error(ErrorCode::inconsistent_circuit, "circuit member with the wrong vertex count");
      }
      if (!(delete_first(circuit[t]) == delete_last(circuit[(t + 1) % n]))) {
        throw Error(ErrorCode::inconsistent_circuit,
                    "members " + std::to_string(t) + " and " + std::to_string((t + 1) % n) +
                        " do not overlap");
      }
    }
  }

  std::map<std::vector<Vertex>, std::uint32_t> edges;
  for (Vertex t = 0; t < n && k > 0; ++t) {
    for (const auto& e : circuit[t].edges()) {
      if (std::find(e.verts.begin(), e.verts.end(), k - 1) == e.verts.end()) continue;
      std::vector<Vertex> verts;
      for (Vertex v : e.verts) verts.push_back((t + v) % n);
      if (shape.kind != GraphKind::directed) std::sort(verts.begin(), verts.end());
      auto [it, inserted] = edges.emplace(std::move(verts), e.mult);
      if (!inserted && it->second != e.mult) {
        throw Error(ErrorCode::inconsistent_circuit,
                    "windows disagree on the multiplicity of a host edge");
      }
    }
  }
  std::vector<GEdge> list;
  list.reserve(edges.size());
  for (auto& [verts, mult] : edges) list.push_back(GEdge{verts, mult});

  HostGraph host{LabeledGraph(n, shape, std::move(list)), k, spec};
  WindowIndex index(host.cycle);
  for (Vertex t = 0; t < n; ++t) {
    if (!(index.at(k, t) == circuit[t])) {
      throw Error(ErrorCode::inconsistent_circuit,
                  "window " + std::to_string(t) + " of the assembled host differs from its member");
    }
  }
  return host;
}

namespace {

// Depth-first enumeration of Eulerian circuits that begin with arc 0, in
// ordered-adjacency order, stopping at the first one that assembles.
class CircuitSearch {
 public:
  CircuitSearch(const ArcDigraph& d, std::uint64_t budget)
      : d_(d), out_(out_arcs(d)), used_(d.arcs.size(), false), budget_(budget) {}

  std::optional<HostGraph> run() {
    used_[0] = true;
    order_.push_back(0);
    if (extend(d_.arcs[0].head)) return found_;
    return std::nullopt;
  }

  bool exhausted() const { return nodes_ > budget_; }

 private:
  bool extend(std::size_t v) {
    if (++nodes_ > budget_) return false;
    if (order_.size() == d_.arcs.size()) {
      if (v != d_.arcs[0].tail) return false;
      std::vector<LabeledGraph> circuit;
      for (auto a : order_) circuit.push_back(d_.arcs[a].member);
      try {
        found_ = assemble_host(circuit, d_.spec.k, d_.spec);
        return true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::inconsistent_circuit) throw;
        return false;
      }
    }
    for (auto a : out_[v]) {
      if (used_[a]) continue;
      used_[a] = true;
      order_.push_back(a);
      if (extend(d_.arcs[a].head)) return true;
      order_.pop_back();
      used_[a] = false;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const ArcDigraph& d_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::optional<HostGraph> found_;
};

}  // namespace

HostGraph generate(const FamilySpec& spec, const EngineOptions& options) {
  validate(spec);
  if (spec.k == 2) {
    throw Error(ErrorCode::unsupported_k,
                "k = 2 needs the modified window that ignores edges cut by the window; "
                "only k != 2 is supported");
  }
  if (spec.k <= 1) {
    // Overlaps are empty, so any member order is a valid cycle.
    return assemble_host(enumerate(spec, options.family_budget), spec.k, spec);
  }

  const auto size = family_size(spec);
  if (size < spec.k) {
    throw Error(ErrorCode::family_too_small,
                to_string(spec) + " has " + std::to_string(size) +
                    " members, fewer than the window size " + std::to_string(spec.k));
  }
  const auto d = build_arc_digraph(spec, options.family_budget);
  const auto circuit = eulerian_circuit(d);
  try {
    return assemble_host(circuit, spec.k, spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::inconsistent_circuit) throw;
    // Long cycles always assemble; short ones can have pairs of windows that
    // constrain the same host edge without sharing an overlap.
    if (circuit.size() > 2 * static_cast<std::size_t>(spec.k) - 2) throw;
  }
  CircuitSearch search(d, options.search_budget);
  if (auto host = search.run()) return *host;
  if (search.exhausted()) {
    throw Error(ErrorCode::resource_guard,
                "circuit search for " + to_string(spec) + " exceeded its node budget");
  }
  throw Error(ErrorCode::no_realizable_host,
              "no Eulerian circuit of " + to_string(spec) +
                  " is realizable as a host: with N = " + std::to_string(size) +
                  " <= 2k-2, some host pairs are seen by windows that share no overlap");
}

VerifyReport verify(const HostGraph& host, std::uint64_t budget) {
  const Vertex n = host.cycle.n();
  if (host.k > n) {
    throw Error(ErrorCode::invalid_window, "window size " + std::to_string(host.k) +
                                               " exceeds host length " + std::to_string(n));
  }
  const auto members = enumerate(host.spec, budget);
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(members.size());
  for (std::size_t t = 0; t < members.size(); ++t) index.emplace(canonical_key(members[t]), t);

  VerifyReport report;
  report.windows = n;
  report.family_size = members.size();
  std::vector<std::vector<std::size_t>> hits(members.size());
  WindowIndex windows(host.cycle);
  for (Vertex t = 0; t < n; ++t) {
    auto w = windows.at(host.k, t);
    auto it = index.find(canonical_key(w));
    if (it == index.end()) {
      report.foreign.emplace_back(t, std::move(w));
    } else {
      hits[it->second].push_back(t);
    }
  }
  for (std::size_t m = 0; m < members.size(); ++m) {
    if (hits[m].empty()) report.missing.push_back(members[m]);
    if (hits[m].size() > 1) report.duplicated.emplace_back(members[m], hits[m]);
  }
  report.ok = report.missing.empty() && report.duplicated.empty() && report.foreign.empty();
  return report;
}

}  // namespace gucycle
