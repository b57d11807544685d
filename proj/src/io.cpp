#include "gucycle/io.hpp"

#include <sstream>

namespace gucycle {

HostFormat parse_host_format(std::string_view name) {
  if (name == "json") return HostFormat::json;
  if (name == "dot") return HostFormat::dot;
  if (name == "text") return HostFormat::text;
  throw Error(ErrorCode::format, "unknown format \"" + std::string(name) + "\" (json, dot, text)");
}

namespace {

Vertex shown(Vertex v, const RenderOptions& opts) { return opts.one_based ? v + 1 : v; }

GraphKind parse_kind(const std::string& name) {
  if (name == "undirected") return GraphKind::undirected;
  if (name == "directed") return GraphKind::directed;
  if (name == "hyper") return GraphKind::hyper;
  throw Error(ErrorCode::format, "unknown graph kind \"" + name + "\"");
}

std::vector<GEdge> edges_from_json(const Json& arr) {
  if (!arr.is_array()) throw Error(ErrorCode::format, "\"edges\" must be an array");
  std::vector<GEdge> edges;
  for (const auto& e : arr) {
    GEdge edge;
    edge.verts = e.at("verts").get<std::vector<Vertex>>();
    edge.mult = e.value("mult", 1u);
    edges.push_back(std::move(edge));
  }
  return edges;
}

template <typename F>
auto json_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::format, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json edges_to_json(const LabeledGraph& g, const RenderOptions& opts) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json verts = Json::array();
    for (Vertex v : e.verts) verts.push_back(shown(v, opts));
    edges.push_back(Json{{"verts", std::move(verts)},
                         {"mult", e.mult},
                         {"dir", g.kind() == GraphKind::directed}});
  }
  return edges;
}

Json graph_to_json(const LabeledGraph& g, const RenderOptions& opts) {
  return Json{{"n", g.n()},
              {"kind", std::string(to_string(g.kind()))},
              {"loops", g.shape().allows_loops},
              {"max_mult", g.shape().max_mult},
              {"edges", edges_to_json(g, opts)}};
}

LabeledGraph graph_from_json(const Json& j) {
  return json_guard([&] {
    GraphShape shape;
    shape.kind = parse_kind(j.value("kind", std::string("undirected")));
    shape.allows_loops = j.value("loops", false);
    shape.max_mult = j.value("max_mult", 1u);
    return LabeledGraph(j.at("n").get<Vertex>(), shape, edges_from_json(j.at("edges")));
  });
}

Json host_to_json(const HostGraph& host, const RenderOptions& opts) {
  return Json{{"family", to_string(host.spec)},
              {"k", host.k},
              {"n", host.cycle.n()},
              {"edges", edges_to_json(host.cycle, opts)}};
}

HostGraph host_from_json(const Json& j) {
  return json_guard([&] {
    const auto spec = parse_spec(j.at("family").get<std::string>());
    const auto k = j.at("k").get<std::uint32_t>();
    if (k != spec.k) throw Error(ErrorCode::format, "\"k\" disagrees with the family spec");
    return HostGraph{LabeledGraph(j.at("n").get<Vertex>(), shape_of(spec),
                                  edges_from_json(j.at("edges"))),
                     k, spec};
  });
}

std::string to_dot(const LabeledGraph& g, std::string_view name, const RenderOptions& opts) {
  const bool directed = g.kind() == GraphKind::directed;
  const char* arrow = directed ? " -> " : " -- ";
  std::ostringstream os;
  os << (directed ? "digraph " : "graph ") << name << " {\n";
  for (Vertex v = 0; v < g.n(); ++v) os << "  " << v << " [label=\"" << shown(v, opts) << "\"];\n";
  std::size_t hyper = 0;
  for (const auto& e : g.edges()) {
    for (std::uint32_t copy = 0; copy < e.mult; ++copy) {
      if (e.verts.size() == 1) {
        os << "  " << e.verts[0] << arrow << e.verts[0] << ";\n";
      } else if (e.verts.size() == 2) {
        os << "  " << e.verts[0] << arrow << e.verts[1] << ";\n";
      } else {
        // Hyperedges become a point node joined to each member vertex.
        const std::string hub = "h" + std::to_string(hyper++);
        os << "  " << hub << " [shape=point];\n";
        for (Vertex v : e.verts) os << "  " << hub << arrow << v << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_text(const LabeledGraph& g, const RenderOptions& opts) {
  std::ostringstream os;
  for (const auto& e : g.edges()) {
    for (std::size_t t = 0; t < e.verts.size(); ++t) {
      if (t) os << (g.kind() == GraphKind::directed ? " -> " : " ");
      os << shown(e.verts[t], opts);
    }
    if (e.mult > 1) os << " x" << e.mult;
    os << '\n';
  }
  return os.str();
}

std::string serialize_host(const HostGraph& host, HostFormat format, const RenderOptions& opts) {
  switch (format) {
    case HostFormat::json: return host_to_json(host, opts).dump(2) + "\n";
    case HostFormat::dot: return to_dot(host.cycle, "host", opts);
    case HostFormat::text:
      return "# " + to_string(host.spec) + " n=" + std::to_string(host.cycle.n()) + "\n" +
             to_text(host.cycle, opts);
  }
  return {};
}

Json verify_report_to_json(const VerifyReport& report) {
  Json missing = Json::array();
  for (const auto& g : report.missing) missing.push_back(edges_to_json(g));
  Json duplicated = Json::array();
  for (const auto& [g, where] : report.duplicated) {
    duplicated.push_back(Json{{"member", edges_to_json(g)}, {"windows", where}});
  }
  Json foreign = Json::array();
  for (const auto& [t, g] : report.foreign) {
    foreign.push_back(Json{{"window", t}, {"graph", edges_to_json(g)}});
  }
  return Json{{"ok", report.ok},
              {"windows", report.windows},
              {"family_size", report.family_size},
              {"matched", report.matched()},
              {"missing", std::move(missing)},
              {"duplicated", std::move(duplicated)},
              {"foreign", std::move(foreign)}};
}

Json walk_to_json(const WindowWalk& walk) {
  Json steps = Json::array();
  for (const auto& g : walk.steps) steps.push_back(graph_to_json(g));
  return steps;
}

Json lipschitz_to_json(const LipschitzReport& report) {
  Json counts = Json::object();
  for (const auto& [value, count] : report.value_counts) counts[std::to_string(value)] = count;
  return Json{{"function", report.fname},
              {"min", report.min_val},
              {"max", report.max_val},
              {"value_counts", std::move(counts)},
              {"values", report.values},
              {"lipschitz_ok", report.lipschitz_ok},
              {"coverage_ok", report.coverage_ok}};
}

Json certificate_to_json(const IsoCycleCertificate& cert) {
  Json classes = Json::array();
  if (cert.k <= 6) {
    IsomorphismClasses table(cert.k);
    WindowIndex index(cert.host);
    for (Vertex t = 0; t < cert.host.n(); ++t) {
      const auto w = index.at(cert.k, t);
      classes.push_back(Json{{"window", t}, {"class", table.class_of(w)}, {"edges", edges_to_json(w)}});
    }
  }
  return Json{{"k", cert.k},
              {"n", cert.host.n()},
              {"class_count", cert.class_count},
              {"edges", edges_to_json(cert.host)},
              {"classes", std::move(classes)}};
}

}  // namespace gucycle
