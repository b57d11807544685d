// One line per acceptance criterion. Run with no arguments for all of them,
// or with a criterion number to run just that one.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracle.hpp"
#include "gucycle/analysis.hpp"
#include "gucycle/encoding.hpp"
#include "gucycle/io.hpp"
#include "gucycle/witnesses.hpp"

using namespace gucycle;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (!detail.empty()) detail += "; ";
    detail += why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> body;
};

Outcome simple_k3() {
  Outcome o;
  const auto host = generate(FamilySpec::simple(3));
  if (host.cycle.n() != 8) o.fail("host has " + std::to_string(host.cycle.n()) + " vertices");
  const auto m = oracle::to_mat(host.cycle);
  std::set<std::string> seen;
  for (int t = 0; t < m.n; ++t) seen.insert(canonical_key(oracle::to_graph(oracle::window(m, 3, t))));
  if (seen.size() != 8) o.fail(std::to_string(seen.size()) + " distinct windows");
  std::set<std::string> all;
  for (const auto& g : oracle::all_simple(3)) all.insert(canonical_key(oracle::to_graph(g)));
  if (seen != all) o.fail("windows differ from the 8 simple graphs");
  if (!verify(host).ok) o.fail("verify rejected the host");
  o.detail = o.ok ? "8 windows, all 8 graphs once" : o.detail;
  return o;
}

Outcome degree_law() {
  Outcome o;
  for (std::uint32_t k : {3u, 4u, 5u}) {
    const auto d = build_arc_digraph(FamilySpec::simple(k));
    for (const auto& row : degree_table(d)) {
      if (row.in != (1u << (k - 1)) || row.out != (1u << (k - 1))) {
        o.fail("k=" + std::to_string(k) + " overlap " + describe(d.overlaps[row.overlap]) + " in=" +
               std::to_string(row.in) + " out=" + std::to_string(row.out));
      }
    }
  }
  if (o.ok) o.detail = "every overlap in=out=2^(k-1) for k=3,4,5";
  return o;
}

std::vector<FamilySpec> matrix() {
  return {FamilySpec::simple(3),        FamilySpec::simple(4),        FamilySpec::simple(5),
          FamilySpec::loops(3),         FamilySpec::loops(4),         FamilySpec::multigraph(3, 2),
          FamilySpec::multigraph(3, 3), FamilySpec::directed(3),      FamilySpec::directed(4),
          FamilySpec::hypergraph(3),    FamilySpec::hypergraph(4),    FamilySpec::uniform(4, 3),
          FamilySpec::uniform(5, 3),    FamilySpec::trees(3),         FamilySpec::trees(4),
          FamilySpec::trees(5),         FamilySpec::trees(6),         FamilySpec::m_edges(4, 1),
          FamilySpec::m_edges(4, 2),    FamilySpec::m_edges(4, 3),    FamilySpec::m_edges(4, 5)};
}

std::uint64_t closed_form(const FamilySpec& s) {
  auto pw = [](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  const std::uint64_t k = s.k, p = k * (k - 1) / 2;
  switch (s.family) {
    case Family::simple: return pw(2, p);
    case Family::loops: return pw(2, p + k);
    case Family::multigraph: return pw(s.m + 1, p);
    case Family::directed: return pw(2, k * (k - 1));
    case Family::hypergraph: return pw(2, pw(2, k) - k - 1);
    case Family::uniform_hypergraph: return pw(2, binomial(k, s.j));
    case Family::trees: return pw(k, k - 2);
    case Family::m_edges: return binomial(p, s.m);
  }
  return 0;
}

Outcome family_matrix() {
  Outcome o;
  int passed = 0;
  for (const auto& spec : matrix()) {
    const auto name = to_string(spec);
    try {
      const auto host = generate(spec);
      const auto r = verify(host);
      if (!r.ok) {
        o.fail(name + " does not verify");
      } else if (host.cycle.n() != closed_form(spec)) {
        o.fail(name + " length " + std::to_string(host.cycle.n()) + " != " + std::to_string(closed_form(spec)));
      } else {
        ++passed;
      }
    } catch (const Error& e) {
      o.fail(name + ": " + std::string(to_string(e.code())));
    }
  }
  o.detail = std::to_string(passed) + "/" + std::to_string(matrix().size()) + " specs" +
             (o.ok ? "" : "; " + o.detail);
  return o;
}

Outcome encoding() {
  Outcome o;
  const auto g = decode(parse_word("5 3 0", 4));
  if (!(g == LabeledGraph::simple(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}}))) o.fail("530 decodes to " + describe(g));
  for (int k = 1; k <= 5; ++k) {
    std::set<std::string> words;
    for (const auto& m : oracle::all_simple(k)) {
      const auto h = oracle::to_graph(m);
      const auto w = encode(h);
      if (!(decode(w) == h)) o.fail("decode(encode) differs at k=" + std::to_string(k));
      words.insert(to_string(canonicalize(w)));
    }
    if (words.size() != (std::size_t{1} << (k * (k - 1) / 2))) {
      o.fail("k=" + std::to_string(k) + " has " + std::to_string(words.size()) + " canonical words");
    }
  }
  if (o.ok) o.detail = "530 -> {01,03,12,13}; round trip and word counts exact for k<=5";
  return o;
}

Outcome word_reduction() {
  Outcome o;
  for (std::uint32_t k : {3u, 4u, 5u}) {
    const auto host = generate(FamilySpec::simple(k));
    try {
      const auto back = word_cycle_to_host(host_to_word_cycle(host), k);
      if (!verify(back).ok) o.fail("k=" + std::to_string(k) + " does not re-verify");
    } catch (const Error& e) {
      o.fail("k=" + std::to_string(k) + ": " + e.what());
    }
  }
  if (o.ok) o.detail = "host -> word -> host re-verifies for k=3,4,5";
  return o;
}

std::vector<FamilySpec> rotation_candidates() {
  std::vector<FamilySpec> out;
  for (std::uint32_t k = 3; k <= 6; ++k) {
    out.push_back(FamilySpec::simple(k));
    out.push_back(FamilySpec::loops(k));
    out.push_back(FamilySpec::directed(k));
    out.push_back(FamilySpec::hypergraph(k));
    out.push_back(FamilySpec::trees(k));
    for (std::uint32_t m = 2; m <= 15; ++m) out.push_back(FamilySpec::multigraph(k, m));
    for (std::uint32_t j = 2; j <= k; ++j) out.push_back(FamilySpec::uniform(k, j));
    for (std::uint32_t m = 0; m <= k * (k - 1) / 2; ++m) out.push_back(FamilySpec::m_edges(k, m));
  }
  return out;
}

Outcome rotation_bijection() {
  Outcome o;
  int specs = 0, overlaps = 0;
  for (const auto& spec : rotation_candidates()) {
    if (family_size(spec) > (1u << 12) || !is_rotation_closed(spec)) continue;
    ++specs;
    for (const auto& p : rotation_pairings(build_arc_digraph(spec))) {
      ++overlaps;
      if (!p.bijective()) o.fail(to_string(spec) + " at " + describe(p.overlap));
    }
  }
  o.detail = std::to_string(specs) + " specs, " + std::to_string(overlaps) + " overlaps" +
             (o.ok ? "" : "; " + o.detail);
  return o;
}

Outcome tree_repair() {
  Outcome o;
  const auto trees = enumerate(FamilySpec::trees(4));
  int pairs = 0;
  for (const auto& i : trees)
    for (const auto& j : trees) {
      try {
        const auto walk = tree_repair_path(i, j, 4);
        bool good = walk.steps.size() == 5 && walk.steps.front() == i && walk.steps.back() == j;
        const auto seg = oracle::to_mat(walk.segment);
        for (int t = 0; t <= 4 && good; ++t) {
          oracle::Mat w(4);
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
              if (seg.a[t + a][t + b]) w.add(a, b);
          good = oracle::tree(w) && oracle::to_graph(w) == walk.steps[t];
        }
        if (good) ++pairs;
        else o.fail(describe(i) + " -> " + describe(j));
      } catch (const Error& e) {
        o.fail(describe(i) + " -> " + describe(j) + ": " + e.what());
      }
    }
  o.detail = std::to_string(pairs) + "/256 ordered pairs" + (o.ok ? "" : "; " + o.detail);
  return o;
}

oracle::Mat drop(const oracle::Mat& m, int gone) {
  oracle::Mat out(m.n - 1);
  for (int u = 0, a = 0; u < m.n; ++u) {
    if (u == gone) continue;
    for (int v = 0, b = 0; v < m.n; ++v) {
      if (v == gone) continue;
      out.a[a][b++] = m.a[u][v];
    }
    ++a;
  }
  return out;
}

Outcome degree_descent() {
  Outcome o;
  const int k = 4;
  int walks = 0;
  for (int m : {1, 2, 3}) {
    std::vector<oracle::Mat> members;
    for (const auto& g : oracle::all_simple(k))
      if (g.edges() == m) members.push_back(g);
    // brute-force lexicographic minimum
    const oracle::Mat* least = &members.front();
    for (const auto& g : members)
      if (oracle::degrees(g) < oracle::degrees(*least)) least = &g;
    const auto goal = oracle::to_graph(*least);

    std::map<std::string, std::vector<int>> by_tail;
    for (int h = 0; h < static_cast<int>(members.size()); ++h)
      by_tail[canonical_key(oracle::to_graph(drop(members[h], k - 1)))].push_back(h);

    for (int s = 0; s < static_cast<int>(members.size()); ++s) {
      const auto start = oracle::to_graph(members[s]);
      const auto walk = degree_descent_path(start, k, m);
      if (!(walk.steps.back() == goal)) o.fail("m=" + std::to_string(m) + " from " + describe(start) + " ends elsewhere");
      if (!is_valid_walk(walk)) o.fail("invalid walk from " + describe(start));
      for (std::size_t t = 1; t < walk.milestones.size(); ++t) {
        if (!(oracle::degrees(oracle::to_mat(walk.steps[walk.milestones[t]])) <
              oracle::degrees(oracle::to_mat(walk.steps[walk.milestones[t - 1]])))) {
          o.fail("macro-step " + std::to_string(t) + " from " + describe(start) + " does not decrease");
        }
      }
      // BFS over the transition graph must also reach L
      std::vector<bool> seen(members.size(), false);
      std::deque<int> queue{s};
      seen[s] = true;
      bool reached = false;
      while (!queue.empty()) {
        const int g = queue.front();
        queue.pop_front();
        if (oracle::to_graph(members[g]) == goal) reached = true;
        for (int h : by_tail[canonical_key(oracle::to_graph(drop(members[g], 0)))])
          if (!seen[h]) {
            seen[h] = true;
            queue.push_back(h);
          }
      }
      if (!reached) o.fail("BFS cannot reach L from " + describe(start));
      ++walks;
    }
  }
  o.detail = std::to_string(walks) + " descents for m=1,2,3" + (o.ok ? "" : "; " + o.detail);
  return o;
}

Outcome unlabeled() {
  Outcome o;
  std::string parts;
  for (std::uint32_t k : {3u, 4u}) {
    const std::size_t want = k == 3 ? 4 : 11;
    const auto out = search_unlabeled_ucycle(k);
    const auto tag = "k=" + std::to_string(k);
    if (out.status != SearchStatus::found) {
      o.fail(tag + " " + std::string(to_string(out.status)) + " after " + std::to_string(out.nodes) + " nodes");
      continue;
    }
    if (out.certificate->host.n() != want) o.fail(tag + " N=" + std::to_string(out.certificate->host.n()));
    else if (!verify_unlabeled(*out.certificate)) o.fail(tag + " certificate does not verify");
    else parts += (parts.empty() ? "" : ", ") + tag + " N=" + std::to_string(want);
  }
  o.detail = (parts.empty() ? "" : parts + " verified") + (o.ok ? "" : (parts.empty() ? "" : "; ") + o.detail);
  return o;
}

Outcome lipschitz() {
  Outcome o;
  const auto host = generate(FamilySpec::simple(4));
  std::string parts;
  for (auto f : {WindowFunction::chromatic, WindowFunction::clique}) {
    const auto r = lipschitz_scan(host, f);
    int pairs = 0;
    for (std::size_t t = 0; t < r.values.size(); ++t)
      pairs += std::abs(r.values[t] - r.values[(t + 1) % r.values.size()]) <= 1;
    bool coverage = true;
    for (int v = r.min_val + 1; v < r.max_val; ++v)
      if (!r.value_counts.count(v) || r.value_counts.at(v) < 2) coverage = false;
    if (pairs != 64 || !r.lipschitz_ok) o.fail(r.fname + " breaks Lipschitz (" + std::to_string(pairs) + "/64)");
    if (!coverage || !r.coverage_ok) o.fail(r.fname + " coverage");
    parts += (parts.empty() ? "" : ", ") + r.fname + " " + std::to_string(r.min_val) + ".." + std::to_string(r.max_val);
  }
  o.detail = parts + ", 64/64 pairs" + (o.ok ? "" : "; " + o.detail);
  return o;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return out + "\n#status " + std::to_string(status);
}

Outcome determinism() {
  Outcome o;
  const std::string cli = GUCYCLE_CLI_PATH;
  std::vector<std::string> commands;
  for (const auto& spec : matrix()) commands.push_back(cli + " generate --spec " + to_string(spec) + " 2>&1");
  for (int k : {3, 4, 5}) commands.push_back(cli + " stats --json --spec simple:k=" + std::to_string(k));
  commands.push_back(cli + " decode --word '5 3 0' -k 4");
  for (int k : {3, 4, 5}) {
    commands.push_back(cli + " generate --spec simple:k=" + std::to_string(k) + " | " + cli +
                       " encode --host | " + cli + " decode --cycle -k " + std::to_string(k));
  }
  std::size_t bytes = 0;
  for (const auto& cmd : commands) {
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    bytes += a.size();
    if (a != b) o.fail("differs: " + cmd);
  }
  o.detail = std::to_string(commands.size()) + " artifacts, " + std::to_string(bytes) + " bytes, two processes each" +
             (o.ok ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "simple k=3 host", 0.1, simple_k3},
      {2, "degree law", 1, degree_law},
      {3, "full family matrix", 30, family_matrix},
      {4, "encoding", 5, encoding},
      {5, "word reduction", 5, word_reduction},
      {6, "rotation bijection", 5, rotation_bijection},
      {7, "tree repair", 5, tree_repair},
      {8, "degree descent", 10, degree_descent},
      {9, "unlabeled search", 60, unlabeled},
      {10, "window Lipschitz", 5, lipschitz},
      {11, "determinism", 0, determinism},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failed = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) out.fail("took " + std::to_string(secs) + " s");
    failed += !out.ok;
    char timing[64];
    if (c.limit_s > 0) std::snprintf(timing, sizeof timing, "%.3f s / %g s", secs, c.limit_s);
    else std::snprintf(timing, sizeof timing, "%.3f s, no limit", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << "  [" << timing
              << "]  " << out.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
