#include "gucycle/encoding.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

#include "gucycle/families.hpp"

namespace gucycle {

namespace {

void check_word(const Word& w) {
  if (w.k < 1 || w.k > kMaxWordK) {
    throw Error(ErrorCode::format, "word length parameter k must lie in [1, 32]");
  }
  if (w.entries.size() != w.k - 1) {
    throw Error(ErrorCode::format, "word for k=" + std::to_string(w.k) + " needs " +
                                       std::to_string(w.k - 1) + " entries, got " +
                                       std::to_string(w.entries.size()));
  }
  const std::uint64_t alphabet = std::uint64_t{1} << (w.k - 1);
  for (auto x : w.entries) {
    if (x >= alphabet) {
      throw Error(ErrorCode::format, "entry " + std::to_string(x) + " outside alphabet [0, " +
                                         std::to_string(alphabet) + ")");
    }
  }
}

std::uint64_t low_mask(std::uint32_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

std::string to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    if (i) os << ' ';
    os << w.entries[i];
  }
  return os.str();
}

Word parse_word(std::string_view text, std::uint32_t k) {
  Word w{k, {}};
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw Error(ErrorCode::format, "malformed word entry at position " + std::to_string(pos));
    }
    w.entries.push_back(value);
    pos = static_cast<std::size_t>(end - text.data());
    if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != ',') {
      throw Error(ErrorCode::format, "malformed word entry at position " + std::to_string(pos));
    }
  }
  check_word(w);
  return w;
}

Word encode(const LabeledGraph& g) {
  if (!g.is_simple()) throw Error(ErrorCode::kind, "encode accepts simple undirected graphs only");
  if (g.n() < 1 || g.n() > kMaxWordK) {
    throw Error(ErrorCode::kind, "encode needs 1 <= n <= 32");
  }
  Word w{g.n(), std::vector<std::uint64_t>(g.n() - 1, 0)};
  for (const auto& e : g.edges()) {
    const Vertex i = e.verts[0];
    const Vertex j = e.verts[1];
    w.entries[i] |= std::uint64_t{1} << (j - i - 1);
  }
  return w;
}

Word canonicalize(const Word& w) {
  check_word(w);
  Word out = w;
  for (std::uint32_t i = 0; i < out.entries.size(); ++i) {
    out.entries[i] &= low_mask(w.k - 1 - i);
  }
  return out;
}

LabeledGraph decode(const Word& w) {
  const Word c = canonicalize(w);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < c.entries.size(); ++i) {
    for (Vertex d = 1; i + d < c.k; ++d) {
      if ((c.entries[i] >> (d - 1)) & 1) edges.emplace_back(i, i + d);
    }
  }
  return LabeledGraph::simple(c.k, edges);
}

std::vector<std::uint64_t> host_to_word_cycle(const HostGraph& host) {
  if (host.spec.family != Family::simple || !host.cycle.is_simple()) {
    throw Error(ErrorCode::invalid_host, "word reduction applies to simple-graph hosts only");
  }
  if (host.k < 3 || host.k > kMaxWordK) {
    throw Error(ErrorCode::invalid_host, "word reduction needs 3 <= k <= 32");
  }
  if (!verify(host).ok) throw Error(ErrorCode::invalid_host, "host does not verify");

  const Vertex n = host.cycle.n();
  std::vector<std::uint64_t> seq(n, 0);
  for (const auto& e : host.cycle.edges()) {
    const Vertex a = e.verts[0];
    const Vertex b = e.verts[1];
    const Vertex forward = (b + n - a) % n;
    if (forward <= host.k - 1) {
      seq[a] |= std::uint64_t{1} << (forward - 1);
    } else if (n - forward <= host.k - 1) {
      seq[b] |= std::uint64_t{1} << (n - forward - 1);
    }
  }
  return seq;
}

HostGraph word_cycle_to_host(const std::vector<std::uint64_t>& seq, std::uint32_t k) {
  if (k < 3 || k > 11) {
    throw Error(ErrorCode::invalid_word_cycle, "word cycles are supported for 3 <= k <= 11");
  }
  const auto n = static_cast<Vertex>(seq.size());
  const std::uint64_t classes = std::uint64_t{1} << binomial(k, 2);
  if (n < k) throw Error(ErrorCode::invalid_word_cycle, "sequence shorter than k");
  if (n != classes) {
    throw Error(ErrorCode::invalid_word_cycle,
                "sequence length " + std::to_string(n) + " differs from the class count " +
                    std::to_string(classes));
  }
  const std::uint64_t alphabet = std::uint64_t{1} << (k - 1);
  std::unordered_set<std::string> seen;
  for (Vertex t = 0; t < n; ++t) {
    if (seq[t] >= alphabet) {
      throw Error(ErrorCode::invalid_word_cycle, "entry outside the alphabet at " + std::to_string(t));
    }
    Word w{k, {}};
    for (Vertex i = 0; i + 1 < k; ++i) w.entries.push_back(seq[(t + i) % n]);
    auto c = canonicalize(w);
    std::string key(reinterpret_cast<const char*>(c.entries.data()),
                    c.entries.size() * sizeof(std::uint64_t));
    if (!seen.insert(std::move(key)).second) {
      throw Error(ErrorCode::invalid_word_cycle,
                  "window " + std::to_string(t) + " repeats an earlier class");
    }
  }

  std::set<std::pair<Vertex, Vertex>> edges;
  for (Vertex t = 0; t < n; ++t) {
    for (Vertex d = 1; d < k; ++d) {
      if ((seq[t] >> (d - 1)) & 1) {
        const Vertex u = (t + d) % n;
        edges.emplace(std::min(t, u), std::max(t, u));
      }
    }
  }
  HostGraph host{LabeledGraph::simple(n, std::vector(edges.begin(), edges.end())), k,
                 FamilySpec::simple(k)};
  if (!verify(host).ok) {
    throw Error(ErrorCode::invalid_word_cycle, "assembled host does not verify");
  }
  return host;
}

}  // namespace gucycle
