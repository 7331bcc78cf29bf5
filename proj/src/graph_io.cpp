#include "kclab/graph_io.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kclab {

using nlohmann::json;

void write_graph(const Graph& g, std::ostream& os) {
  json doc;
  doc["version"] = 1;
  doc["vertices"] = json::array();
  for (VertexId v = 0; v < g.order(); ++v)
    doc["vertices"].push_back({{"id", v}, {"label", g.label(v)}});
  doc["edges"] = json::array();
  for (const Edge& e : g.edges())
    doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"len", e.len.str()}});
  os << doc.dump(2) << "\n";
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream ss;
  write_graph(g, ss);
  return ss.str();
}

Graph read_graph(std::istream& is) {
  json doc;
  try {
    is >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph file: bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || doc["version"] != 1)
    throw std::invalid_argument("graph file: missing or unsupported version");
  if (!doc.contains("vertices") || !doc["vertices"].is_array() || !doc.contains("edges") ||
      !doc["edges"].is_array())
    throw std::invalid_argument("graph file: vertices/edges arrays required");

  size_t n = doc["vertices"].size();
  std::vector<std::string> labels(n);
  std::vector<char> seen(n, 0);
  for (const auto& v : doc["vertices"]) {
    if (!v.contains("id") || !v["id"].is_number_integer())
      throw std::invalid_argument("graph file: vertex without integer id");
    long long id = v["id"].get<long long>();
    if (id < 0 || id >= static_cast<long long>(n))
      throw std::invalid_argument("graph file: vertex id " + std::to_string(id) +
                                  " outside 0.." + std::to_string(n - 1));
    if (seen[static_cast<size_t>(id)])
      throw std::invalid_argument("graph file: duplicate vertex id " + std::to_string(id));
    seen[static_cast<size_t>(id)] = 1;
    labels[static_cast<size_t>(id)] = v.value("label", "");
  }

  GraphBuilder b;
  for (auto& l : labels) b.add_vertex(std::move(l));
  for (const auto& e : doc["edges"]) {
    if (!e.contains("u") || !e.contains("v") || !e.contains("len") || !e["len"].is_string())
      throw std::invalid_argument("graph file: edge must have u, v and string len");
    b.add_edge(e["u"].get<int>(), e["v"].get<int>(), Rational::parse(e["len"].get<std::string>()));
  }
  return b.build();
}

Graph graph_from_string(const std::string& text) {
  std::istringstream ss(text);
  return read_graph(ss);
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace

void write_dot(const Graph& g, std::ostream& os) {
  os << "graph g {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    os << "  n" << v;
    if (!g.label(v).empty()) os << " [label=\"" << dot_escape(g.label(v)) << "\"]";
    os << ";\n";
  }
  for (const Edge& e : g.edges())
    os << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.len.str() << "\"];\n";
  os << "}\n";
}

}  // namespace kclab
