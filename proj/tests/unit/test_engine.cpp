#include <doctest.h>

#include <map>
#include <set>

#include "gucycle/engine.hpp"
#include "oracle.hpp"

using namespace gucycle;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::parse;
}

// Window-by-window exact cover, computed without verify().
bool exact_cover(const HostGraph& host) {
  const auto members = enumerate(host.spec);
  std::map<std::string, int> hits;
  for (const auto& m : members) hits[canonical_key(m)] = 0;
  for (Vertex t = 0; t < host.cycle.n(); ++t) {
    auto it = hits.find(canonical_key(window(host.cycle, host.k, t)));
    if (it == hits.end()) return false;
    ++it->second;
  }
  for (const auto& [key, n] : hits)
    if (n != 1) return false;
  return host.cycle.n() == members.size();
}

}  // namespace

TEST_CASE("arc digraph shape") {
  const auto d3 = build_arc_digraph(FamilySpec::simple(3));
  CHECK(d3.overlaps.size() == 2);
  CHECK(d3.arcs.size() == 8);
  const auto d4 = build_arc_digraph(FamilySpec::simple(4));
  CHECK(d4.overlaps.size() == 8);
  CHECK(d4.arcs.size() == 64);
  for (const auto& arc : d4.arcs) {
    CHECK(d4.overlaps[arc.tail] == delete_last(arc.member));
    CHECK(d4.overlaps[arc.head] == delete_first(arc.member));
  }
  // trees k=3: the 2-vertex projections of the 3 trees are {} and {01}
  const auto t3 = build_arc_digraph(FamilySpec::trees(3));
  CHECK(t3.arcs.size() == 3);
  std::set<std::string> proj;
  for (const auto& m : enumerate(FamilySpec::trees(3))) {
    proj.insert(canonical_key(delete_first(m)));
    proj.insert(canonical_key(delete_last(m)));
  }
  CHECK(t3.overlaps.size() == proj.size());
  CHECK(code_of([] { build_arc_digraph(FamilySpec::simple(2)); }) == ErrorCode::unsupported_k);
}

TEST_CASE("degree law in = out = 2^(k-1) for simple graphs") {
  for (std::uint32_t k : {3u, 4u, 5u}) {
    const auto d = build_arc_digraph(FamilySpec::simple(k));
    for (const auto& row : degree_table(d)) {
      CHECK(row.in == (std::size_t{1} << (k - 1)));
      CHECK(row.out == (std::size_t{1} << (k - 1)));
    }
    CHECK(check_balanced(d).empty());
    CHECK(check_strongly_connected(d));
  }
  const auto trees = build_arc_digraph(FamilySpec::trees(4));
  CHECK(check_balanced(trees).empty());
  CHECK(check_strongly_connected(trees));
}

TEST_CASE("strong connectivity catches two disjoint balanced loops") {
  ArcDigraph d;
  d.spec = FamilySpec::simple(3);
  d.overlaps = {LabeledGraph::simple(2, {}), LabeledGraph::simple(2, {{0, 1}})};
  d.arcs = {{LabeledGraph::simple(3, {}), 0, 0}, {LabeledGraph::simple(3, {{0, 1}, {1, 2}}), 1, 1}};
  CHECK(check_balanced(d).empty());
  CHECK_FALSE(check_strongly_connected(d));
  CHECK(code_of([&] { eulerian_arc_order(d); }) == ErrorCode::no_eulerian_circuit);
}

TEST_CASE("deterministic circuit") {
  const auto d = build_arc_digraph(FamilySpec::simple(3));
  const auto order = eulerian_arc_order(d);
  CHECK(order.size() == 8);
  CHECK(order.front() == 0);
  std::set<std::size_t> used(order.begin(), order.end());
  CHECK(used.size() == 8);
  for (std::size_t t = 0; t < order.size(); ++t) {
    CHECK(d.arcs[order[t]].head == d.arcs[order[(t + 1) % order.size()]].tail);
  }
  CHECK(eulerian_arc_order(d) == order);
  CHECK(eulerian_circuit(build_arc_digraph(FamilySpec::simple(3))) == eulerian_circuit(d));

  const auto t3 = eulerian_circuit(build_arc_digraph(FamilySpec::trees(3)));
  CHECK(t3.size() == 3);
}

TEST_CASE("generate produces exact covers") {
  for (const auto& spec : {FamilySpec::simple(3), FamilySpec::simple(4), FamilySpec::loops(3),
                           FamilySpec::multigraph(3, 2), FamilySpec::directed(3), FamilySpec::hypergraph(3),
                           FamilySpec::uniform(4, 3), FamilySpec::trees(3), FamilySpec::trees(4),
                           FamilySpec::m_edges(4, 2), FamilySpec::m_edges(4, 3)}) {
    CAPTURE(to_string(spec));
    const auto host = generate(spec);
    CHECK(host.cycle.n() == family_size(spec));
    CHECK(exact_cover(host));
    CHECK(verify(host).ok);
    CHECK(generate(spec) == host);
  }
  const auto t3 = generate(FamilySpec::trees(3));
  for (Vertex t = 0; t < 3; ++t) CHECK(oracle::tree(oracle::to_mat(window(t3.cycle, 3, t))));
}

TEST_CASE("generate guards") {
  CHECK(code_of([] { generate(FamilySpec::simple(2)); }) == ErrorCode::unsupported_k);
  CHECK(code_of([] { generate(FamilySpec::m_edges(3, 0)); }) == ErrorCode::family_too_small);
  // N = 6 <= 2k-2: every Eulerian circuit conflicts on a distance-3 pair
  CHECK(code_of([] { generate(FamilySpec::m_edges(4, 1)); }) == ErrorCode::no_realizable_host);
  CHECK(code_of([] { generate(FamilySpec::simple(5), {100, 100}); }) == ErrorCode::resource_guard);
}

TEST_CASE("no 6-vertex host exists for one-edge graphs on 4 vertices") {
  // brute force over every simple graph on 6 vertices
  int hosts = 0;
  for (const auto& m : oracle::all_simple(6)) {
    std::set<std::string> seen;
    bool ok = true;
    for (int t = 0; t < 6 && ok; ++t) {
      const auto w = oracle::window(m, 4, t);
      ok = w.edges() == 1 && seen.insert(canonical_key(oracle::to_graph(w))).second;
    }
    hosts += ok;
  }
  CHECK(hosts == 0);
}

TEST_CASE("assemble_host rejects a scrambled circuit") {
  auto circuit = eulerian_circuit(build_arc_digraph(FamilySpec::simple(3)));
  std::swap(circuit[1], circuit[2]);
  CHECK(code_of([&] { assemble_host(circuit, 3, FamilySpec::simple(3)); }) == ErrorCode::inconsistent_circuit);
}

TEST_CASE("verify on C8 as a simple k=3 host") {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < 8; ++v) edges.emplace_back(v, (v + 1) % 8);
  const HostGraph c8{LabeledGraph::simple(8, edges), 3, FamilySpec::simple(3)};
  const auto r = verify(c8);
  CHECK_FALSE(r.ok);
  CHECK(r.missing.size() == 7);
  REQUIRE(r.duplicated.size() == 1);
  CHECK(r.duplicated.front().first == LabeledGraph::simple(3, {{0, 1}, {1, 2}}));
  CHECK(r.duplicated.front().second.size() == 8);
  CHECK(r.foreign.empty());
  CHECK(r.matched() == 0);
}

TEST_CASE("verify catches every single-edge mutation") {
  const auto host = generate(FamilySpec::simple(4));
  const Vertex n = host.cycle.n();
  int mutations = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex d = 1; d < 4; ++d) {
      const Vertex b = (a + d) % n;
      std::vector<std::pair<Vertex, Vertex>> edges;
      bool had = false;
      for (const auto& e : host.cycle.edges()) {
        const auto x = e.verts[0], y = e.verts[1];
        if ((x == a && y == b) || (x == b && y == a)) had = true;
        else edges.emplace_back(x, y);
      }
      if (!had) edges.emplace_back(a, b);
      const HostGraph mutated{LabeledGraph::simple(n, edges), 4, host.spec};
      const auto r = verify(mutated);
      CHECK_FALSE(r.ok);
      CHECK((!r.missing.empty() || !r.foreign.empty()));
      ++mutations;
    }
  CHECK(mutations == 64 * 3);
}

TEST_CASE("verify reports foreign windows") {
  const auto host = generate(FamilySpec::trees(4));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < host.cycle.n(); ++v) edges.emplace_back(v, (v + 1) % host.cycle.n());
  for (const auto& e : host.cycle.edges()) edges.emplace_back(e.verts[0], e.verts[1]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(), [](auto x, auto y) {
                return std::minmax(x.first, x.second) == std::minmax(y.first, y.second);
              }),
              edges.end());
  std::set<std::pair<Vertex, Vertex>> uniq;
  for (auto [x, y] : edges) uniq.insert(std::minmax(x, y));
  const HostGraph bad{LabeledGraph::simple(host.cycle.n(), {uniq.begin(), uniq.end()}), 4, host.spec};
  CHECK_FALSE(verify(bad).foreign.empty());
  CHECK(code_of([] { verify(HostGraph{LabeledGraph::simple(2, {}), 3, FamilySpec::simple(3)}); }) ==
        ErrorCode::invalid_window);
}
