#include <array>
#include <charconv>
#include <optional>

#include "gucycle/families.hpp"

namespace gucycle {

namespace {

struct FamilyName {
  std::string_view name;
  Family family;
};

// First entry per family is the printed form; the rest are accepted aliases.
constexpr std::array kFamilyNames{
    FamilyName{"simple", Family::simple},
    FamilyName{"loops", Family::loops},
    FamilyName{"multigraph", Family::multigraph},
    FamilyName{"directed", Family::directed},
    FamilyName{"hypergraph", Family::hypergraph},
    FamilyName{"uniform", Family::uniform_hypergraph},
    FamilyName{"trees", Family::trees},
    FamilyName{"medges", Family::m_edges},
    FamilyName{"uniform_hypergraph", Family::uniform_hypergraph},
    FamilyName{"m_edges", Family::m_edges},
};

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const std::string& msg) {
  throw Error(ErrorCode::parse, "spec \"" + std::string(text) + "\" at position " +
                                    std::to_string(pos) + ": " + msg);
}

}  // namespace

std::string to_string(const FamilySpec& spec) {
  std::string name;
  for (const auto& entry : kFamilyNames) {
    if (entry.family == spec.family) {
      name = entry.name;
      break;
    }
  }
  std::string out = name + ":k=" + std::to_string(spec.k);
  switch (spec.family) {
    case Family::multigraph:
    case Family::m_edges: out += ",m=" + std::to_string(spec.m); break;
    case Family::uniform_hypergraph: out += ",j=" + std::to_string(spec.j); break;
    default: break;
  }
  return out;
}

FamilySpec parse_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) parse_error(text, text.size(), "expected ':'");
  const auto name = text.substr(0, colon);

  std::optional<Family> family;
  for (const auto& entry : kFamilyNames) {
    if (entry.name == name) family = entry.family;
  }
  if (!family) parse_error(text, 0, "unknown family \"" + std::string(name) + "\"");

  std::optional<std::uint32_t> k, m, j;
  std::size_t pos = colon + 1;
  if (pos >= text.size()) parse_error(text, pos, "expected key=value");
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) parse_error(text, pos, "expected key=value");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);

    std::uint32_t parsed = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || end != value.data() + value.size() || value.empty()) {
      parse_error(text, pos + eq + 1, "expected a non-negative integer");
    }

    std::optional<std::uint32_t>* slot = nullptr;
    if (key == "k") slot = &k;
    else if (key == "m" && (*family == Family::multigraph || *family == Family::m_edges))
      slot = &m;
    else if (key == "j" && *family == Family::uniform_hypergraph)
      slot = &j;
    if (slot == nullptr) {
      parse_error(text, pos, "unknown key \"" + std::string(key) + "\" for this family");
    }
    if (slot->has_value()) parse_error(text, pos, "duplicate key \"" + std::string(key) + "\"");
    *slot = parsed;
    pos = comma + 1;
  }

  if (!k) parse_error(text, text.size(), "missing required key k");
  FamilySpec spec{*family, *k, 0, 0};
  if (*family == Family::multigraph || *family == Family::m_edges) {
    if (!m) parse_error(text, text.size(), "missing required key m");
    spec.m = *m;
  }
  if (*family == Family::uniform_hypergraph) {
    if (!j) parse_error(text, text.size(), "missing required key j");
    spec.j = *j;
  }
  try {
    validate(spec);
  } catch (const Error& e) {
    parse_error(text, colon + 1, e.what());
  }
  return spec;
}

}  // namespace gucycle
