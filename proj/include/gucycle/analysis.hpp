#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gucycle/engine.hpp"
#include "gucycle/graph.hpp"

namespace gucycle {

inline constexpr Vertex kExactColoringLimit = 10;

/// Exact, by backtracking. n <= 10.
int chromatic_number(const LabeledGraph& g);
int clique_number(const LabeledGraph& g);

enum class WindowFunction { chromatic, clique };

WindowFunction parse_window_function(std::string_view name);
std::string_view to_string(WindowFunction f);

struct LipschitzReport {
  std::string fname;
  int min_val = 0;
  int max_val = 0;
  std::vector<int> values;  // one per window, in host order
  std::map<int, std::size_t> value_counts;
  bool lipschitz_ok = false;
  bool coverage_ok = false;
};

LipschitzReport lipschitz_scan(const HostGraph& host, WindowFunction f);

/// Same scan for an arbitrary integer graph function.
LipschitzReport lipschitz_scan(const HostGraph& host, const std::string& fname,
                               const std::function<int(const LabeledGraph&)>& f);

/// Number of isomorphism classes of simple graphs on n vertices, n <= 8.
std::uint64_t isomorphism_class_count(Vertex n);

/// Class lookup for simple graphs on k <= 6 vertices via the minimum
/// adjacency bit-string over all relabelings.
class IsomorphismClasses {
 public:
  explicit IsomorphismClasses(Vertex k);

  Vertex k() const { return k_; }
  std::size_t count() const { return count_; }

  /// Bit p of `mask` is pair p in (0,1), (0,2), .., (1,2), .. order.
  std::size_t class_of(std::uint32_t mask) const { return class_of_[mask]; }
  std::size_t class_of(const LabeledGraph& g) const;

  std::uint32_t pair_bit(Vertex a, Vertex b) const { return pair_index_[a * k_ + b]; }

 private:
  Vertex k_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> pair_index_;
  std::vector<std::size_t> class_of_;
};

struct IsoCycleCertificate {
  LabeledGraph host;
  std::uint32_t k = 0;
  std::size_t class_count = 0;
};

enum class SearchStatus { found, exhausted, absent };

std::string_view to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::absent;
  std::optional<IsoCycleCertificate> certificate;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Depth-first search for a cyclic host whose k-windows meet every
/// isomorphism class exactly once. 3 <= k <= 5.
SearchOutcome search_unlabeled_ucycle(std::uint32_t k,
                                      std::uint64_t budget = kDefaultSearchBudget);

/// Windows pairwise non-isomorphic and one per class. k <= 8.
bool verify_unlabeled(const IsoCycleCertificate& cert);

}  // namespace gucycle
