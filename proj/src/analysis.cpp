#include "gucycle/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>

namespace gucycle {

namespace {

std::vector<std::uint32_t> neighbor_masks(const LabeledGraph& g, const char* what) {
  if (g.kind() != GraphKind::undirected || g.shape().allows_loops) {
    throw Error(ErrorCode::kind, std::string(what) + " needs a loopless undirected graph");
  }
  if (g.n() > kExactColoringLimit) {
    throw Error(ErrorCode::size_guard, std::string(what) + " is exact only up to 10 vertices");
  }
  std::vector<std::uint32_t> adj(g.n(), 0);
  for (const auto& e : g.edges()) {
    adj[e.verts[0]] |= 1u << e.verts[1];
    adj[e.verts[1]] |= 1u << e.verts[0];
  }
  return adj;
}

bool colorable(const std::vector<std::uint32_t>& adj, std::vector<int>& color, Vertex v, int colors) {
  if (v == adj.size()) return true;
  // Symmetry: vertex v never needs a color above the largest used so far + 1.
  int highest = -1;
  for (Vertex u = 0; u < v; ++u) highest = std::max(highest, color[u]);
  for (int c = 0; c < colors && c <= highest + 1; ++c) {
    bool clash = false;
    for (Vertex u = 0; u < v && !clash; ++u) clash = ((adj[v] >> u) & 1) && color[u] == c;
    if (clash) continue;
    color[v] = c;
    if (colorable(adj, color, v + 1, colors)) return true;
  }
  color[v] = -1;
  return false;
}

int max_clique(const std::vector<std::uint32_t>& adj, std::uint32_t candidates, int size) {
  if (candidates == 0) return size;
  int best = size;
  while (candidates != 0) {
    if (size + std::popcount(candidates) <= best) break;
    const auto v = static_cast<Vertex>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    best = std::max(best, max_clique(adj, candidates & adj[v], size + 1));
  }
  return best;
}

}  // namespace

int chromatic_number(const LabeledGraph& g) {
  const auto adj = neighbor_masks(g, "chromatic_number");
  if (g.n() == 0) return 0;
  std::vector<int> color(g.n(), -1);
  for (int c = 1;; ++c) {
    if (colorable(adj, color, 0, c)) return c;
  }
}

int clique_number(const LabeledGraph& g) {
  const auto adj = neighbor_masks(g, "clique_number");
  const std::uint32_t all = g.n() == 0 ? 0 : (1u << g.n()) - 1;
  return max_clique(adj, all, 0);
}

WindowFunction parse_window_function(std::string_view name) {
  if (name == "chromatic") return WindowFunction::chromatic;
  if (name == "clique") return WindowFunction::clique;
  throw Error(ErrorCode::unknown_function,
              "unknown window function \"" + std::string(name) + "\" (chromatic, clique)");
}

std::string_view to_string(WindowFunction f) {
  return f == WindowFunction::chromatic ? "chromatic" : "clique";
}

LipschitzReport lipschitz_scan(const HostGraph& host, WindowFunction f) {
  return lipschitz_scan(host, std::string(to_string(f)),
                        f == WindowFunction::chromatic ? chromatic_number : clique_number);
}

LipschitzReport lipschitz_scan(const HostGraph& host, const std::string& fname,
                               const std::function<int(const LabeledGraph&)>& f) {
  if (!verify(host).ok) throw Error(ErrorCode::invalid_host, "host does not verify");
  LipschitzReport report;
  report.fname = fname;
  WindowIndex windows(host.cycle);
  const Vertex n = host.cycle.n();
  for (Vertex t = 0; t < n; ++t) report.values.push_back(f(windows.at(host.k, t)));

  report.min_val = *std::min_element(report.values.begin(), report.values.end());
  report.max_val = *std::max_element(report.values.begin(), report.values.end());
  // Windows of a verified host are distinct members, so counting windows
  // counts members.
  for (int v : report.values) ++report.value_counts[v];

  report.lipschitz_ok = true;
  for (Vertex t = 0; t < n; ++t) {
    if (std::abs(report.values[t] - report.values[(t + 1) % n]) > 1) report.lipschitz_ok = false;
  }
  report.coverage_ok = true;
  for (int v = report.min_val + 1; v < report.max_val; ++v) {
    auto it = report.value_counts.find(v);
    if (it == report.value_counts.end() || it->second < 2) report.coverage_ok = false;
  }
  return report;
}

std::uint64_t isomorphism_class_count(Vertex n) {
  static constexpr std::array<std::uint64_t, 9> kCounts{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  if (n >= kCounts.size()) {
    throw Error(ErrorCode::size_guard, "isomorphism class counts are tabulated up to n = 8");
  }
  return kCounts[n];
}

IsomorphismClasses::IsomorphismClasses(Vertex k) : k_(k), pair_index_(k * k, 0) {
  if (k > 6) throw Error(ErrorCode::size_guard, "class table limited to k <= 6");
  std::uint32_t bit = 0;
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) {
      pair_index_[a * k + b] = pair_index_[b * k + a] = bit++;
    }
  }
  const std::uint32_t masks = 1u << bit;
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> perm(k);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::uint32_t> canonical(masks);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::uint32_t best = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 1; b < k; ++b)
          if ((mask >> pair_index_[a * k + b]) & 1) image |= 1u << pair_index_[p[a] * k + p[b]];
      best = std::min(best, image);
    }
    canonical[mask] = best;
  }
  std::vector<std::size_t> id(masks, SIZE_MAX);
  class_of_.resize(masks);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    auto& slot = id[canonical[mask]];
    if (slot == SIZE_MAX) slot = count_++;
    class_of_[mask] = slot;
  }
}

std::size_t IsomorphismClasses::class_of(const LabeledGraph& g) const {
  if (!g.is_simple() || g.n() != k_) throw Error(ErrorCode::kind, "class lookup needs a simple k-vertex graph");
  std::uint32_t mask = 0;
  for (const auto& e : g.edges()) mask |= 1u << pair_bit(e.verts[0], e.verts[1]);
  return class_of(mask);
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::absent: return "absent";
  }
  return "unknown";
}

namespace {

// Vertex p mod N is placed at position p; positions N..N+k-2 revisit the
// first vertices to close the wraparound windows.
class UnlabeledSearch {
 public:
  UnlabeledSearch(Vertex k, std::uint64_t budget)
      : k_(k),
        classes_(k),
        n_(static_cast<Vertex>(classes_.count())),
        budget_(budget),
        adj_(n_, 0),
        decided_(n_, 0),
        used_(classes_.count(), false) {}

  SearchOutcome run() {
    SearchOutcome outcome;
    const bool found = place(0);
    outcome.nodes = nodes_;
    if (found) {
      outcome.status = SearchStatus::found;
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (Vertex a = 0; a < n_; ++a)
        for (Vertex b = a + 1; b < n_; ++b)
          if ((adj_[a] >> b) & 1) edges.emplace_back(a, b);
      outcome.certificate = IsoCycleCertificate{LabeledGraph::simple(n_, edges), k_, n_};
    } else {
      outcome.status = nodes_ > budget_ ? SearchStatus::exhausted : SearchStatus::absent;
    }
    return outcome;
  }

 private:
  bool get(std::uint64_t const* rows, Vertex a, Vertex b) const { return (rows[a] >> b) & 1; }

  void set_pair(std::vector<std::uint64_t>& rows, Vertex a, Vertex b, bool on) {
    const auto bit_a = std::uint64_t{1} << b;
    const auto bit_b = std::uint64_t{1} << a;
    if (on) {
      rows[a] |= bit_a;
      rows[b] |= bit_b;
    } else {
      rows[a] &= ~bit_a;
      rows[b] &= ~bit_b;
    }
  }

  std::size_t window_class(Vertex start) const {
    std::uint32_t mask = 0;
    for (Vertex a = 0; a < k_; ++a)
      for (Vertex b = a + 1; b < k_; ++b)
        if (get(adj_.data(), (start + a) % n_, (start + b) % n_))
          mask |= 1u << classes_.pair_bit(a, b);
    return classes_.class_of(mask);
  }

  bool place(Vertex p) {
    if (p == n_ + k_ - 1) return true;
    const Vertex v = p % n_;
    const std::uint32_t masks = 1u << (k_ - 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      // Bit d-1 is adjacency to the vertex d positions back.
      bool consistent = true;
      std::vector<Vertex> fresh;
      for (Vertex d = 1; d < k_ && consistent; ++d) {
        const bool on = (mask >> (d - 1)) & 1;
        if (p < d) {
          consistent = !on;
          continue;
        }
        const Vertex u = (p - d) % n_;
        if (get(decided_.data(), v, u)) {
          consistent = get(adj_.data(), v, u) == on;
        } else {
          fresh.push_back(u);
        }
      }
      if (!consistent) continue;
      if (++nodes_ > budget_) return false;

      for (Vertex u : fresh) {
        set_pair(decided_, v, u, true);
        set_pair(adj_, v, u, (mask >> ((p - u + n_) % n_ - 1)) & 1);
      }
      std::size_t cls = SIZE_MAX;
      bool ok = true;
      if (p + 1 >= k_ && p + 1 - k_ < n_) {
        cls = window_class(p + 1 - k_);
        if (used_[cls]) ok = false;
        else used_[cls] = true;
      }
      if (ok && place(p + 1)) return true;
      if (ok && cls != SIZE_MAX) used_[cls] = false;
      for (Vertex u : fresh) {
        set_pair(decided_, v, u, false);
        set_pair(adj_, v, u, false);
      }
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  Vertex k_;
  IsomorphismClasses classes_;
  Vertex n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> decided_;
  std::vector<bool> used_;
};

}  // namespace

SearchOutcome search_unlabeled_ucycle(std::uint32_t k, std::uint64_t budget) {
  if (k < 3 || k > 5) throw Error(ErrorCode::out_of_range, "unlabeled search supports 3 <= k <= 5");
  return UnlabeledSearch(k, budget).run();
}

bool verify_unlabeled(const IsoCycleCertificate& cert) {
  if (cert.k > kIsomorphismLimit) {
    throw Error(ErrorCode::size_guard, "unlabeled verification limited to k <= 8");
  }
  const auto& host = cert.host;
  if (!host.is_simple() || host.n() < cert.k) return false;
  const auto classes = isomorphism_class_count(cert.k);
  if (host.n() != classes || cert.class_count != classes) return false;

  WindowIndex index(host);
  std::vector<LabeledGraph> windows;
  for (Vertex t = 0; t < host.n(); ++t) windows.push_back(index.at(cert.k, t));
  for (std::size_t a = 0; a < windows.size(); ++a)
    for (std::size_t b = a + 1; b < windows.size(); ++b)
      if (are_isomorphic(windows[a], windows[b])) return false;
  return true;
}

}  // namespace gucycle
