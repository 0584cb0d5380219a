#include "munarini/io.hpp"

#include "json.hpp"
#include <sstream>

#include "munarini/error.hpp"

namespace munarini {

using nlohmann::json;

std::string to_edgelist(const LabeledGraph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) {
    out << label_text(g.label(u)) << ' ' << label_text(g.label(v)) << '\n';
  }
  return out.str();
}

namespace {

std::string dot_quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const LabeledGraph& g) {
  const auto& params = g.params();
  std::ostringstream out;
  out << "graph " << dot_quoted(std::string(family_name(params.family)) +
                                "_n" + std::to_string(params.n) + "_k" +
                                std::to_string(params.k))
      << " {\n";
  for (const auto& label : g.vertices()) {
    out << "  " << dot_quoted(label_text(label)) << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << dot_quoted(label_text(g.label(u))) << " -- "
        << dot_quoted(label_text(g.label(v))) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const LabeledGraph& g) {
  json doc;
  doc["family"] = family_name(g.params().family);
  doc["n"] = g.params().n;
  doc["k"] = g.params().k;
  auto& vertices = doc["vertices"] = json::array();
  for (const auto& label : g.vertices()) vertices.push_back(label_text(label));
  auto& edges = doc["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return doc.dump() + '\n';
}

LabeledGraph graph_from_json(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    FamilyParams params;
    params.family = parse_family(doc.at("family").get<std::string>());
    params.n = doc.at("n").get<std::size_t>();
    params.k = doc.at("k").get<unsigned>();
    validate(params);
    const bool binary = params.family == Family::FibonacciCube ||
                        params.family == Family::Hypercube;
    std::vector<VertexLabel> vertices;
    for (const auto& item : doc.at("vertices")) {
      const auto s = item.get<std::string>();
      if (binary) {
        vertices.emplace_back(BinaryLabel::parse(s));
      } else {
        vertices.emplace_back(PellString::parse(s, params.k));
      }
    }
    std::vector<Edge> edges;
    for (const auto& item : doc.at("edges")) {
      if (!item.is_array() || item.size() != 2) {
        throw InputError("edge entries must be [u, v] pairs");
      }
      edges.emplace_back(item[0].get<std::size_t>(), item[1].get<std::size_t>());
    }
    return LabeledGraph(params, std::move(vertices), std::move(edges));
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed graph document: ") + ex.what());
  }
}

std::string cubes_to_json(const EmbeddedGraph& e,
                          const std::vector<InducedCube>& cubes) {
  const auto& g = e.graph();
  json doc = json::array();
  for (const auto& cube : cubes) {
    doc.push_back({{"bottom", label_text(g.label(cube.bottom))},
                   {"top", label_text(g.label(cube.top))},
                   {"support", cube.support}});
  }
  return doc.dump() + '\n';
}

std::string census_csv(const IntPoly& census) {
  std::ostringstream out;
  const auto& c = census.coefficients();
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (!c[p].is_zero()) out << p << ',' << c[p] << '\n';
  }
  return out.str();
}

std::string census_csv(const DistanceCensus& census) {
  std::ostringstream out;
  for (const auto& [key, count] : census) {
    out << key.first << ',' << key.second << ',' << count << '\n';
  }
  return out.str();
}

std::string poly_csv(std::size_t n, unsigned k, const IntPoly& p) {
  std::ostringstream out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) out << n << ',' << k << ',' << i << ',' << c[i] << '\n';
  }
  return out.str();
}

std::string poly_csv(std::size_t n, unsigned k, const BiPoly& p) {
  std::ostringstream out;
  for (const auto& [exps, c] : p.terms()) {
    out << n << ',' << k << ',' << exps.first << ',' << exps.second << ','
        << c << '\n';
  }
  return out.str();
}

}  // namespace munarini
