#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gucycle/graph.hpp"

namespace gucycle {

enum class Family : std::uint8_t {
  simple,
  loops,
  multigraph,
  directed,
  hypergraph,
  uniform_hypergraph,
  trees,
  m_edges,
};

/// Default cap on the number of members any operation will materialize.
inline constexpr std::uint64_t kDefaultFamilyBudget = std::uint64_t{1} << 22;

/// One supported family and its parameters.
///
/// `m` is the edge count for m_edges and the maximum multiplicity for
/// multigraph; `j` is the edge arity for uniform_hypergraph. Unused
/// parameters are zero.
struct FamilySpec {
  Family family = Family::simple;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint32_t j = 0;

  static FamilySpec simple(std::uint32_t k) { return {Family::simple, k, 0, 0}; }
  static FamilySpec loops(std::uint32_t k) { return {Family::loops, k, 0, 0}; }
  static FamilySpec multigraph(std::uint32_t k, std::uint32_t m) {
    return {Family::multigraph, k, m, 0};
  }
  static FamilySpec directed(std::uint32_t k) { return {Family::directed, k, 0, 0}; }
  static FamilySpec hypergraph(std::uint32_t k) { return {Family::hypergraph, k, 0, 0}; }
  static FamilySpec uniform(std::uint32_t k, std::uint32_t j) {
    return {Family::uniform_hypergraph, k, 0, j};
  }
  static FamilySpec trees(std::uint32_t k) { return {Family::trees, k, 0, 0}; }
  static FamilySpec m_edges(std::uint32_t k, std::uint32_t m) {
    return {Family::m_edges, k, m, 0};
  }

  bool operator==(const FamilySpec&) const = default;
};

/// Rejects parameters outside the family's domain with Error(out_of_range).
void validate(const FamilySpec& spec);

/// Edge model shared by all members of the family.
GraphShape shape_of(const FamilySpec& spec);

/// Text form such as `simple:k=4`, `multigraph:k=3,m=2`, `uniform:k=5,j=3`.
std::string to_string(const FamilySpec& spec);

/// Grammar `family:key=value{,key=value}`. Unknown families or keys, missing
/// required keys and invalid parameter combinations raise Error(parse) with
/// the byte offset of the problem in the message.
FamilySpec parse_spec(std::string_view text);

/// Exact member count; saturates at UINT64_MAX.
std::uint64_t family_size(const FamilySpec& spec);

/// Every member exactly once, sorted by canonical_key.
std::vector<LabeledGraph> enumerate(const FamilySpec& spec,
                                    std::uint64_t budget = kDefaultFamilyBudget);

bool contains(const FamilySpec& spec, const LabeledGraph& g);

/// Whether rotating any member by one label stays inside the family.
bool is_rotation_closed(const FamilySpec& spec,
                        std::uint64_t budget = kDefaultFamilyBudget);

std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

}  // namespace gucycle
