#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gucycle/engine.hpp"
#include "gucycle/graph.hpp"

namespace gucycle {

/// Word x_0 .. x_{k-2} over the alphabet [0, 2^(k-1)).
///
/// Bit d-1 of entry i records adjacency between vertices i and i+d. Only the
/// low k-1-i bits of entry i are meaningful; canonicalize() clears the rest.
struct Word {
  std::uint32_t k = 1;
  std::vector<std::uint64_t> entries;

  bool operator==(const Word&) const = default;
};

inline constexpr std::uint32_t kMaxWordK = 32;

/// Space-separated decimals, e.g. "5 3 0".
std::string to_string(const Word& w);
Word parse_word(std::string_view text, std::uint32_t k);

Word encode(const LabeledGraph& g);
LabeledGraph decode(const Word& w);
Word canonicalize(const Word& w);

/// Per-vertex adjacency masks toward the next k-1 cyclic successors.
std::vector<std::uint64_t> host_to_word_cycle(const HostGraph& host);

/// Inverse of host_to_word_cycle. The sequence must list every class of
/// (k-1)-words exactly once among its cyclic windows.
HostGraph word_cycle_to_host(const std::vector<std::uint64_t>& seq, std::uint32_t k);

}  // namespace gucycle
