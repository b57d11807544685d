#include "gucycle/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "gucycle/io.hpp"

namespace gucycle {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::format, "cannot open " + path);
  return {std::istreambuf_iterator<char>(file), {}};
}

Json read_json(const std::string& path, std::istream& in) {
  try {
    return Json::parse(read_input(path, in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::format, path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::format, "cannot write " + path);
  file << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse:
    case ErrorCode::format:
    case ErrorCode::unknown_function:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

bool use_color(const std::ostream& err) {
  return std::getenv("NO_COLOR") == nullptr && &err == &std::cerr && isatty(STDERR_FILENO);
}

void report_error(std::ostream& err, bool as_json, std::string_view code, const std::string& message) {
  if (as_json) {
    err << Json{{"error", std::string(code)}, {"message", message}}.dump() << "\n";
  } else if (use_color(err)) {
    err << "\033[31merror\033[0m [" << code << "]: " << message << "\n";
  } else {
    err << "error [" << code << "]: " << message << "\n";
  }
}

// Options shared by most commands.
struct Common {
  std::string spec;
  std::string input = "-";
  std::string output;
  std::string format = "json";
  bool one_based = false;
  std::uint64_t budget = kDefaultFamilyBudget;
  std::uint64_t search_budget = 10'000'000;
};

int cmd_generate(const Common& c, Streams s) {
  EngineOptions options;
  options.family_budget = c.budget;
  options.search_budget = c.search_budget;
  const auto format = parse_host_format(c.format);
  const auto host = generate(parse_spec(c.spec), options);
  write_output(c.output, serialize_host(host, format, {c.one_based}), s.out);
  return kExitOk;
}

int cmd_verify(const Common& c, bool as_json, Streams s) {
  auto host = host_from_json(read_json(c.input, s.in));
  if (!c.spec.empty() && !(parse_spec(c.spec) == host.spec)) {
    s.err << "host family " << to_string(host.spec) << " differs from --spec " << c.spec << "\n";
    return kExitFailure;
  }
  const auto report = verify(host, c.budget);
  if (as_json) {
    s.out << json_text(verify_report_to_json(report));
  } else {
    s.out << report.matched() << "/" << report.family_size << " windows matched\n";
    if (!report.missing.empty()) s.out << report.missing.size() << " members missing\n";
    for (const auto& [g, where] : report.duplicated) {
      s.out << "duplicated " << describe(g) << " at " << where.size() << " windows\n";
    }
    for (const auto& [t, g] : report.foreign) s.out << "window " << t << " outside family: " << describe(g) << "\n";
  }
  return report.ok ? kExitOk : kExitFailure;
}

int cmd_encode(const Common& c, bool host_mode, Streams s) {
  const auto j = read_json(c.input, s.in);
  if (host_mode) {
    const auto seq = host_to_word_cycle(host_from_json(j));
    std::ostringstream os;
    for (std::size_t t = 0; t < seq.size(); ++t) os << (t ? " " : "") << seq[t];
    s.out << os.str() << "\n";
  } else {
    s.out << to_string(encode(graph_from_json(j))) << "\n";
  }
  return kExitOk;
}

std::vector<std::uint64_t> parse_numbers(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::uint64_t> seq;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      seq.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse, "not a number: \"" + tok + "\"");
    }
  }
  return seq;
}

int cmd_decode(const Common& c, const std::string& word, std::uint32_t k, bool cycle, Streams s) {
  const std::string text = word.empty() ? read_input(c.input, s.in) : word;
  if (cycle) {
    const auto host = word_cycle_to_host(parse_numbers(text), k);
    write_output(c.output, serialize_host(host, parse_host_format(c.format), {c.one_based}), s.out);
  } else {
    write_output(c.output, json_text(graph_to_json(decode(parse_word(text, k)), {c.one_based})), s.out);
  }
  return kExitOk;
}

int cmd_path(const Common& c, const std::string& mode, const std::string& from,
             const std::string& to, std::uint32_t m, Streams s) {
  const auto start = graph_from_json(read_json(from, s.in));
  WindowWalk walk;
  if (mode == "union") {
    if (c.spec.empty()) throw Error(ErrorCode::parse, "path --mode union needs --spec");
    walk = path_via_union(start, graph_from_json(read_json(to, s.in)), parse_spec(c.spec));
  } else if (mode == "tree") {
    walk = tree_repair_path(start, graph_from_json(read_json(to, s.in)), start.n());
  } else {
    walk = degree_descent_path(start, start.n(), m);
  }
  write_output(c.output, json_text(walk_to_json(walk)), s.out);
  return kExitOk;
}

int cmd_analyze(const Common& c, const std::string& fname, Streams s) {
  const auto f = parse_window_function(fname);
  const auto report = lipschitz_scan(host_from_json(read_json(c.input, s.in)), f);
  write_output(c.output, json_text(lipschitz_to_json(report)), s.out);
  return report.lipschitz_ok && report.coverage_ok ? kExitOk : kExitFailure;
}

int cmd_search(const Common& c, std::uint32_t k, std::uint64_t budget, Streams s) {
  const auto outcome = search_unlabeled_ucycle(k, budget);
  if (outcome.status != SearchStatus::found) {
    s.out << json_text(Json{{"status", std::string(to_string(outcome.status))},
                            {"k", k},
                            {"nodes", outcome.nodes}});
    return kExitFailure;
  }
  auto j = certificate_to_json(*outcome.certificate);
  j["status"] = "found";
  j["nodes"] = outcome.nodes;
  j["verified"] = verify_unlabeled(*outcome.certificate);
  write_output(c.output, json_text(j), s.out);
  return j["verified"].get<bool>() ? kExitOk : kExitFailure;
}

int cmd_stats(const Common& c, bool as_json, Streams s) {
  const auto spec = parse_spec(c.spec);
  const auto size = family_size(spec);
  const auto d = build_arc_digraph(spec, c.budget);
  const auto rows = degree_table(d);
  const bool balanced = check_balanced(d).empty();
  const bool connected = check_strongly_connected(d);
  if (as_json) {
    Json table = Json::array();
    for (const auto& r : rows) {
      table.push_back(Json{{"overlap", edges_to_json(d.overlaps[r.overlap])}, {"in", r.in}, {"out", r.out}});
    }
    s.out << json_text(Json{{"family", to_string(spec)},
                            {"size", size},
                            {"overlaps", d.overlaps.size()},
                            {"balanced", balanced},
                            {"strongly_connected", connected},
                            {"degrees", std::move(table)}});
    return kExitOk;
  }
  s.out << "family " << to_string(spec) << "\n"
        << "size " << size << "\n"
        << "overlaps " << d.overlaps.size() << "\n"
        << "balanced " << (balanced ? "yes" : "no") << "\n"
        << "strongly_connected " << (connected ? "yes" : "no") << "\n";
  for (const auto& r : rows) {
    s.out << "in=" << r.in << " out=" << r.out << "  " << describe(d.overlaps[r.overlap]) << "\n";
  }
  return kExitOk;
}

int cmd_export(const Common& c, Streams s) {
  const auto format = parse_host_format(c.format);
  write_output(c.output, serialize_host(host_from_json(read_json(c.input, s.in)), format, {c.one_based}), s.out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Universal cycles of labeled graph families", "gucycle"};
  app.require_subcommand(1);
  bool error_json = false;
  app.add_flag("--error-json", error_json, "Report errors as one JSON line on stderr");
  app.fallthrough();

  Common c;
  auto add_spec = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--spec", c.spec, "Family, e.g. simple:k=4 or medges:k=4,m=3");
    if (required) opt->required();
  };
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", c.input, "Input file, - for stdin");
    sub->add_option("--output,-o", c.output, "Output file (default stdout)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format,-f", c.format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_flag("--one-based", c.one_based, "Display vertex labels from 1");
  };

  auto* gen = app.add_subcommand("generate", "Build a host graph for a family");
  add_spec(gen, true);
  add_format(gen);
  gen->add_option("--output,-o", c.output, "Output file (default stdout)");
  gen->add_option("--budget", c.budget, "Maximum family members to materialize");
  gen->add_option("--search-budget", c.search_budget, "Node limit for the circuit search fallback");

  bool verify_json = false;
  auto* ver = app.add_subcommand("verify", "Check every window of a host");
  add_spec(ver, false);
  add_io(ver);
  ver->add_flag("--json", verify_json, "Print the full report as JSON");
  ver->add_option("--budget", c.budget, "Maximum family members to materialize");

  bool encode_host = false;
  auto* enc = app.add_subcommand("encode", "Graph JSON to word, or host JSON to word cycle");
  add_io(enc);
  enc->add_flag("--host", encode_host, "Input is a host; print its word cycle");

  std::string word;
  std::uint32_t word_k = 0;
  bool decode_cycle = false;
  auto* dec = app.add_subcommand("decode", "Word to graph JSON, or word cycle to host");
  add_io(dec);
  add_format(dec);
  dec->add_option("--word,-w", word, "Space-separated decimals (default: read --input)");
  dec->add_option("--k,-k", word_k, "Vertex count")->required();
  dec->add_flag("--cycle", decode_cycle, "Input is a word cycle; emit a host");

  std::string mode = "union";
  std::string from;
  std::string to;
  std::uint32_t edges_m = 0;
  auto* path = app.add_subcommand("path", "Walk between two members");
  add_spec(path, false);
  path->add_option("--mode", mode, "union, tree or descent")->check(CLI::IsMember({"union", "tree", "descent"}));
  path->add_option("--from", from, "Start graph JSON")->required();
  path->add_option("--to", to, "End graph JSON (union, tree)");
  path->add_option("--m", edges_m, "Edge count (descent)");
  path->add_option("--output,-o", c.output, "Output file (default stdout)");

  std::string lipschitz;
  auto* ana = app.add_subcommand("analyze", "Window-Lipschitz scan of a host");
  add_io(ana);
  ana->add_option("--lipschitz", lipschitz, "chromatic or clique")->required();

  std::uint32_t search_k = 0;
  std::uint64_t search_budget = kDefaultSearchBudget;
  auto* search = app.add_subcommand("search-unlabeled", "Search for an isomorphism-class cycle");
  search->add_option("--k,-k", search_k, "Window size, 3..5")->required();
  search->add_option("--budget", search_budget, "Node limit");
  search->add_option("--output,-o", c.output, "Output file (default stdout)");

  bool stats_json = false;
  auto* stats = app.add_subcommand("stats", "Family size and overlap degree table");
  add_spec(stats, true);
  stats->add_flag("--json", stats_json, "Print as JSON");
  stats->add_option("--budget", c.budget, "Maximum family members to materialize");

  auto* exp = app.add_subcommand("export", "Re-serialize a host JSON file");
  add_io(exp);
  add_format(exp);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, error_json, "usage", e.what());
    return kExitUsage;
  }

  const Streams s{in, out, err};
  try {
    if (*gen) return cmd_generate(c, s);
    if (*ver) return cmd_verify(c, verify_json, s);
    if (*enc) return cmd_encode(c, encode_host, s);
    if (*dec) return cmd_decode(c, word, word_k, decode_cycle, s);
    if (*path) {
      if (mode != "descent" && to.empty()) throw Error(ErrorCode::parse, "path --mode " + mode + " needs --to");
      if (mode == "descent" && edges_m == 0 && path->count("--m") == 0) {
        throw Error(ErrorCode::parse, "path --mode descent needs --m");
      }
      return cmd_path(c, mode, from, to, edges_m, s);
    }
    if (*ana) return cmd_analyze(c, lipschitz, s);
    if (*search) return cmd_search(c, search_k, search_budget, s);
    if (*stats) return cmd_stats(c, stats_json, s);
    if (*exp) return cmd_export(c, s);
  } catch (const Error& e) {
    report_error(err, error_json, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace gucycle
