#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gucycle/analysis.hpp"
#include "gucycle/encoding.hpp"
#include "gucycle/engine.hpp"
#include "gucycle/witnesses.hpp"

namespace gucycle {

using Json = nlohmann::ordered_json;

enum class HostFormat { json, dot, text };

HostFormat parse_host_format(std::string_view name);

/// Display options. Vertex labels are 0-based unless one_based is set.
struct RenderOptions {
  bool one_based = false;
};

Json edges_to_json(const LabeledGraph& g, const RenderOptions& opts = {});

/// {"n","kind","loops","max_mult","edges"}.
Json graph_to_json(const LabeledGraph& g, const RenderOptions& opts = {});
LabeledGraph graph_from_json(const Json& j);

/// {"family","k","n","edges"}; edges in canonical order.
Json host_to_json(const HostGraph& host, const RenderOptions& opts = {});
HostGraph host_from_json(const Json& j);

std::string to_dot(const LabeledGraph& g, std::string_view name, const RenderOptions& opts = {});
std::string to_text(const LabeledGraph& g, const RenderOptions& opts = {});

/// Byte-stable rendering in the requested format, newline terminated.
std::string serialize_host(const HostGraph& host, HostFormat format,
                           const RenderOptions& opts = {});

Json verify_report_to_json(const VerifyReport& report);
Json walk_to_json(const WindowWalk& walk);
Json lipschitz_to_json(const LipschitzReport& report);
Json certificate_to_json(const IsoCycleCertificate& cert);

}  // namespace gucycle
