#include "gucycle/error.hpp"

namespace gucycle {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_window: return "invalid-window";
    case ErrorCode::empty_graph: return "empty-graph";
    case ErrorCode::incompatible_kinds: return "incompatible-kinds";
    case ErrorCode::invalid_graph: return "invalid-graph";
    case ErrorCode::size_guard: return "size-guard";
    case ErrorCode::resource_guard: return "resource-guard";
    case ErrorCode::unsupported_k: return "unsupported-k";
    case ErrorCode::no_eulerian_circuit: return "no-eulerian-circuit";
    case ErrorCode::no_realizable_host: return "no-realizable-host";
    case ErrorCode::family_too_small: return "family-too-small";
    case ErrorCode::inconsistent_circuit: return "inconsistent-circuit";
    case ErrorCode::invalid_host: return "invalid-host";
    case ErrorCode::invalid_word_cycle: return "invalid-word-cycle";
    case ErrorCode::format: return "format";
    case ErrorCode::kind: return "kind";
    case ErrorCode::hypothesis: return "hypothesis";
    case ErrorCode::not_applicable: return "not-applicable";
    case ErrorCode::membership: return "membership";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::parse: return "parse";
    case ErrorCode::unknown_function: return "unknown-function";
  }
  return "unknown";
}

}  // namespace gucycle
