#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gucycle {

enum class ErrorCode {
  invalid_window,
  empty_graph,
  incompatible_kinds,
  invalid_graph,
  size_guard,
  resource_guard,
  unsupported_k,
  no_eulerian_circuit,
  no_realizable_host,
  family_too_small,
  inconsistent_circuit,
  invalid_host,
  invalid_word_cycle,
  format,
  kind,
  hypothesis,
  not_applicable,
  membership,
  out_of_range,
  parse,
  unknown_function,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status and a machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gucycle
