#include "munarini/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "munarini/error.hpp"
#include "munarini/hypercube.hpp"
#include "munarini/io.hpp"
#include "munarini/verify.hpp"

namespace munarini {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  std::string command;
  std::string which;  // poly kind, verify suite, census kind, export target
  std::string family = "munarini";
  std::size_t n = 0;
  unsigned k = 1;
  std::optional<std::size_t> order;
  std::string format;
  std::string output = "-";
  std::size_t n_max = 5;
  unsigned k_max = 3;
  bool instance = false;  // verify: --family/-n/-k given
  bool quiet = false;
  std::string input;
  std::optional<unsigned long long> max_vertices;
};

// Options accepted by each subcommand, as spelled in a config file.
const std::map<std::string, std::set<std::string>>& config_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"gen", {"family", "n", "k", "format", "output"}},
      {"poly", {"which", "n", "k", "order", "format", "output"}},
      {"verify",
       {"which", "family", "n", "k", "n_max", "k_max", "format", "output",
        "quiet"}},
      {"census", {"which", "family", "n", "k", "format", "output"}},
      {"export", {"which", "family", "n", "k", "input", "format", "output"}},
  };
  return keys;
}

std::string scalar_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_unsigned() || value.is_number_integer()) {
    return std::to_string(value.get<long long>());
  }
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  throw UsageError("config values must be strings, integers or booleans");
}

// Turns a JSON config into command-line tokens. Tokens the user typed come
// after these, so explicit flags win.
std::vector<std::string> expand_config(const std::string& path,
                                       const std::vector<std::string>& user) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& ex) {
    throw UsageError("malformed config file: " + std::string(ex.what()));
  }
  if (!doc.is_object()) throw UsageError("config file must hold an object");

  std::vector<std::string> head;
  std::size_t user_positionals = 0;
  while (user_positionals < user.size() && user_positionals < 2 &&
         !user[user_positionals].starts_with("-")) {
    ++user_positionals;
  }
  std::string command =
      user_positionals > 0 ? user[0]
                           : (doc.contains("command")
                                  ? scalar_text(doc["command"])
                                  : throw UsageError("config lacks 'command'"));
  auto allowed = config_keys().find(command);
  if (allowed == config_keys().end()) {
    throw UsageError("unknown command '" + command + "'");
  }
  head.push_back(command);
  if (user_positionals > 1) {
    head.push_back(user[1]);
  } else if (doc.contains("which") && user_positionals == 0) {
    head.push_back(scalar_text(doc["which"]));
  }

  static const std::map<std::string, std::string> flag{
      {"family", "--family"}, {"n", "-n"},          {"k", "-k"},
      {"order", "-N"},        {"format", "--format"}, {"output", "-o"},
      {"n_max", "--n-max"},   {"k_max", "--k-max"}, {"input", "--input"},
      {"quiet", "--quiet"},
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "command" || key == "which") continue;
    if (key == "max_vertices") {
      head.insert(head.begin(), {"--max-vertices", scalar_text(value)});
      continue;
    }
    if (!allowed->second.contains(key)) {
      throw UsageError("config key '" + key + "' does not apply to '" +
                       command + "'");
    }
    if (key == "quiet") {
      if (value.get<bool>()) head.push_back("--quiet");
      continue;
    }
    head.push_back(flag.at(key));
    head.push_back(scalar_text(value));
  }
  head.insert(head.end(), user.begin() + user_positionals, user.end());
  return head;
}

unsigned long long vertex_cap(const CommandConfig& config) {
  if (config.max_vertices) return *config.max_vertices;
  if (const char* env = std::getenv("MUNARINI_MAX_VERTICES")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("MUNARINI_MAX_VERTICES is not a number: ") +
                       env);
    }
  }
  return kDefaultMaxVertices;
}

void enforce_cap(const FamilyParams& params, const CommandConfig& config) {
  const auto order = expected_order(params);
  const auto cap = vertex_cap(config);
  if (order > cap) {
    throw UsageError(std::string(family_name(params.family)) +
                     " n=" + std::to_string(params.n) +
                     " k=" + std::to_string(params.k) + " has " +
                     to_string(order) + " vertices, above the cap of " +
                     std::to_string(cap) +
                     " (raise it with --max-vertices or MUNARINI_MAX_VERTICES)");
  }
}

FamilyParams params_of(const CommandConfig& config) {
  FamilyParams params{parse_family(config.family), config.n, config.k};
  validate(params);
  return params;
}

void require_format(const CommandConfig& config,
                    std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (config.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("format '" + config.format + "' is not available for '" +
                   config.command + "' (use one of: " + list + ")");
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

std::string cmd_gen(const CommandConfig& config) {
  const auto params = params_of(config);
  require_format(config, {"text", "json", "dot", "edgelist"});
  enforce_cap(params, config);
  const auto g = build(params);
  if (config.format == "json") return to_json(g);
  if (config.format == "dot") return to_dot(g);
  if (config.format == "edgelist") return to_edgelist(g);
  std::ostringstream out;
  out << "# " << family_name(params.family) << " n=" << params.n
      << " k=" << params.k << ": " << g.order() << " vertices, " << g.size()
      << " edges\n"
      << to_edgelist(g);
  return out.str();
}

std::string poly_text(const std::string& which, std::size_t n, unsigned k,
                      bool csv) {
  if (which == "dcube") {
    const auto p = distance_cube_poly(n, k);
    return csv ? poly_csv(n, k, p) : p.to_string() + '\n';
  }
  IntPoly p;
  if (which == "weight") {
    p = weight_poly(n, k);
  } else if (which == "cube") {
    p = cube_poly(n, k);
  } else {
    p = maximal_cube_poly(n, k);
  }
  return csv ? poly_csv(n, k, p) : p.to_string() + '\n';
}

std::string cmd_poly(const CommandConfig& config) {
  require_format(config, {"text", "csv"});
  const bool csv = config.format == "csv";
  const unsigned k = config.k;
  if (k == 0) throw UnsupportedParameter("k must be at least 1");
  std::ostringstream out;
  if (config.which == "qnum") {
    if (!config.order) {
      const auto q = cube_number(config.n, k);
      if (csv) {
        out << config.n << ',' << k << ',' << q << '\n';
      } else {
        out << q << '\n';
      }
      return out.str();
    }
    const auto series = cube_number_series(k, *config.order);
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (csv) {
        out << i << ',' << k << ',' << series[i] << '\n';
      } else {
        out << (i ? " " : "") << series[i];
      }
    }
    if (!csv) out << '\n';
    return out.str();
  }
  if (!config.order) return poly_text(config.which, config.n, k, csv);
  for (std::size_t n = 0; n <= *config.order; ++n) {
    out << poly_text(config.which, n, k, csv);
  }
  return out.str();
}

std::string report_text(const VerifyReport& report, bool quiet) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    if (quiet && c.passed) continue;
    out << (c.passed ? "PASS " : "FAIL ") << c.suite << ' '
        << family_name(c.params.family) << " n=" << c.params.n
        << " k=" << c.params.k << ": " << c.name;
    if (!c.passed && !c.detail.empty()) out << " -- " << c.detail;
    out << '\n';
  }
  out << report.checks.size() << " checks, " << report.failures()
      << " failed\n";
  return out.str();
}

std::string report_json(const VerifyReport& report) {
  json doc;
  auto& checks = doc["checks"] = json::array();
  for (const auto& c : report.checks) {
    json item{{"suite", c.suite},
              {"name", c.name},
              {"family", family_name(c.params.family)},
              {"n", c.params.n},
              {"k", c.params.k},
              {"passed", c.passed}};
    if (!c.passed) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  doc["failures"] = report.failures();
  doc["exercised"] = report.exercised;
  return doc.dump(2) + '\n';
}

std::string cmd_verify(const CommandConfig& config, bool& passed) {
  require_format(config, {"text", "json"});
  const auto suite = parse_suite(config.which);
  VerifyReport report;
  if (config.instance) {
    const auto params = params_of(config);
    enforce_cap(params, config);
    report = verify_instance(suite, params);
  } else {
    if (config.k_max == 0) throw UsageError("--k-max must be at least 1");
    enforce_cap({Family::Munarini, config.n_max, config.k_max}, config);
    report = verify_bounds(suite, config.n_max, config.k_max);
  }
  passed = report.ok();
  return config.format == "json" ? report_json(report)
                                 : report_text(report, config.quiet);
}

std::string cmd_census(const CommandConfig& config) {
  require_format(config, {"csv", "json"});
  const auto params = params_of(config);
  enforce_cap(params, config);
  const auto e = embed(build(params));
  const bool as_json = config.format == "json";
  if (config.which == "dcubes") {
    const auto census = distance_cube_census(e);
    if (!as_json) return census_csv(census);
    json doc = json::array();
    for (const auto& [key, count] : census) {
      doc.push_back({{"p", key.first}, {"d", key.second}, {"count", count}});
    }
    return doc.dump() + '\n';
  }
  const auto census =
      config.which == "cubes" ? cube_census(e) : maximal_cube_census(e);
  if (!as_json) return census_csv(census);
  json doc = json::array();
  const auto& c = census.coefficients();
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (!c[p].is_zero()) {
      doc.push_back({{"p", p}, {"count", static_cast<unsigned long long>(c[p])}});
    }
  }
  return doc.dump() + '\n';
}

std::string cmd_export(const CommandConfig& config) {
  std::optional<LabeledGraph> g;
  if (!config.input.empty()) {
    std::ifstream in(config.input);
    if (!in) throw UsageError("cannot read '" + config.input + "'");
    std::stringstream text;
    text << in.rdbuf();
    g = graph_from_json(text.str());
  } else {
    const auto params = params_of(config);
    enforce_cap(params, config);
    g = build(params);
  }
  if (config.which == "graph") {
    require_format(config, {"json", "dot", "edgelist"});
    if (config.format == "dot") return to_dot(*g);
    if (config.format == "edgelist") return to_edgelist(*g);
    return to_json(*g);
  }
  require_format(config, {"json"});
  const auto e = embed(std::move(*g));
  return cubes_to_json(e, config.which == "cubes" ? enumerate_cubes(e)
                                                  : enumerate_maximal_cubes(e));
}

void write_output(const CommandConfig& config, const std::string& text,
                  std::ostream& out) {
  if (config.output.empty() || config.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + config.output + "'");
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out,
            std::ostream& err) {
  CommandConfig config;
  std::vector<std::string> args = raw_args;

  try {
    // --config is expanded before parsing so that its contents can supply
    // the subcommand itself.
    std::vector<std::string> rest;
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config") {
        if (i + 1 == args.size()) throw UsageError("--config needs a path");
        config_path = args[++i];
      } else if (args[i].starts_with("--config=")) {
        config_path = args[i].substr(9);
      } else {
        rest.push_back(args[i]);
      }
    }
    args = config_path.empty() ? rest : expand_config(config_path, rest);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }

  CLI::App app{"Munarini graphs, generalized Pell graphs and their cube "
               "polynomials",
               "munarini"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--max-vertices", config.max_vertices,
                 "Refuse graphs with more vertices than this");
  app.add_option("--config", "JSON file with the command and its options");

  const std::vector<std::string> families{"munarini", "genpell", "fibonacci",
                                          "pell", "hypercube", "star"};
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, "Graph family")
        ->check(CLI::IsMember(families));
    sub->add_option("-n", config.n, "String length");
    sub->add_option("-k", config.k, "Arity");
  };
  auto add_output = [&](CLI::App* sub, std::string default_format) {
    config.format = default_format;
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json", "dot", "edgelist"}));
    sub->add_option("-o,--output", config.output, "Output file, - for stdout");
  };
  std::map<CLI::App*, std::string> default_format;

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  add_family(gen);
  default_format[gen] = "text";

  auto* poly = app.add_subcommand("poly", "Print a polynomial or series");
  poly->add_option("which", config.which)
      ->required()
      ->check(CLI::IsMember({"weight", "cube", "dcube", "maxcube", "qnum"}));
  poly->add_option("-n", config.n, "String length");
  poly->add_option("-k", config.k, "Arity");
  poly->add_option("-N", config.order, "Print every n from 0 to N");
  default_format[poly] = "text";

  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("which", config.which)
      ->required()
      ->check(CLI::IsMember(
          {"isometry", "daisy", "median", "identities", "oracle", "all"}));
  auto* vf = verify->add_option("--family", config.family, "Graph family")
                 ->check(CLI::IsMember(families));
  auto* vn = verify->add_option("-n", config.n, "String length");
  auto* vk = verify->add_option("-k", config.k, "Arity");
  verify->add_option("--n-max", config.n_max, "Largest n (default 5)");
  verify->add_option("--k-max", config.k_max, "Largest k (default 3)");
  verify->add_flag("-q,--quiet", config.quiet, "Print failures only");
  default_format[verify] = "text";

  auto* census = app.add_subcommand("census", "Count induced hypercubes");
  census->add_option("which", config.which)
      ->required()
      ->check(CLI::IsMember({"cubes", "maxcubes", "dcubes"}));
  add_family(census);
  default_format[census] = "csv";

  auto* exp = app.add_subcommand("export", "Write a graph or its cubes");
  exp->add_option("which", config.which)
      ->required()
      ->check(CLI::IsMember({"graph", "cubes", "maxcubes"}));
  add_family(exp);
  exp->add_option("--input", config.input, "Graph JSON to re-emit");
  default_format[exp] = "json";

  for (auto& [sub, format] : default_format) add_output(sub, format);

  try {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }

  auto* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  if (!chosen->count("--format")) config.format = default_format[chosen];
  config.instance = vf->count() + vn->count() + vk->count() > 0;

  try {
    std::string text;
    bool passed = true;
    if (config.command == "gen") {
      text = cmd_gen(config);
    } else if (config.command == "poly") {
      text = cmd_poly(config);
    } else if (config.command == "verify") {
      text = cmd_verify(config, passed);
    } else if (config.command == "census") {
      text = cmd_census(config);
    } else {
      text = cmd_export(config);
    }
    write_output(config, text, out);
    return passed ? 0 : 1;
  } catch (const ConsistencyError& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

}  // namespace munarini
