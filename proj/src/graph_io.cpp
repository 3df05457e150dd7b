#include <sstream>

#include <json.hpp>

#include "qbg/error.hpp"
#include "qbg/graph.hpp"

namespace qbg {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw PreconditionError("unknown format '" + std::string(name) + "' (expected dot or json)");
}

GraphData graph_data(const QuantumBruhatGraph& g) {
  GraphData data;
  data.n = g.n();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) data.vertices.push_back(g.vertex(v));
  for (const auto& e : g.edges()) data.edges.push_back({e.source, e.target, e.weight});
  return data;
}

namespace {

std::string export_dot(const QuantumBruhatGraph& g) {
  std::ostringstream out;
  out << "digraph qbg" << g.n() << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << "  \"" << g.vertex(v).to_string() << "\";\n";
  for (const auto& e : g.edges()) {
    const std::string m = e.weight.to_monomial();
    out << "  \"" << e.source.to_string() << "\" -> \"" << e.target.to_string() << "\" [weight=\""
        << m << '"';
    if (!e.weight.is_zero()) out << ", label=\"" << m << '"';
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const QuantumBruhatGraph& g) {
  nlohmann::json doc;
  doc["n"] = g.n();
  doc["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.vertex(v).to_string());
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges())
    doc["edges"].push_back({{"source", e.source.to_string()},
                            {"target", e.target.to_string()},
                            {"exps", e.weight.exps()}});
  return doc.dump(1) + "\n";
}

} // namespace

std::string export_graph(const QuantumBruhatGraph& g, GraphFormat format) {
  return format == GraphFormat::dot ? export_dot(g) : export_json(g);
}

GraphData read_graph_json(std::string_view text) {
  GraphData data;
  try {
    const auto doc = nlohmann::json::parse(text);
    data.n = doc.at("n").get<int>();
    for (const auto& v : doc.at("vertices")) data.vertices.push_back(parse_permutation(v.get<std::string>()));
    for (const auto& e : doc.at("edges")) {
      GraphData::Edge edge{parse_permutation(e.at("source").get<std::string>()),
                           parse_permutation(e.at("target").get<std::string>()),
                           QExponent(e.at("exps").get<std::vector<int>>())};
      if (edge.source.size() != data.n || edge.target.size() != data.n ||
          edge.weight.size() != data.n - 1)
        throw ParseError("edge size does not match n=" + std::to_string(data.n));
      data.edges.push_back(std::move(edge));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
  return data;
}

} // namespace qbg
