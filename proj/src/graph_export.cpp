#include "hessgkm/graph_export.hpp"

#include <sstream>

namespace hessgkm {

void write_dot(std::ostream& out, const GkmGraph& g) {
  const auto& vs = g.vertices();
  out << "graph gkm {\n";
  for (const auto& v : vs) out << "  \"" << v.to_string() << "\";\n";
  // Edges are already sorted by (u, v) index and vertices are lexicographic.
  for (const auto& e : g.edges()) {
    out << "  \"" << vs[e.u].to_string() << "\" -- \"" << vs[e.v].to_string()
        << "\" [weight=\"t" << e.a << "-t" << e.b << "\"];\n";
  }
  out << "}\n";
}

std::string to_dot(const GkmGraph& g) {
  std::ostringstream os;
  write_dot(os, g);
  return os.str();
}

nlohmann::json to_json(const GkmGraph& g) {
  nlohmann::json j;
  j["n"] = g.rank();
  j["h"] = g.hessenberg().values();
  j["w"] = g.base() ? nlohmann::json(g.base()->to_string()) : nlohmann::json();
  auto& vertices = j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v.to_string());
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"u", g.vertices()[e.u].to_string()},
                     {"v", g.vertices()[e.v].to_string()},
                     {"pos", {e.i, e.j}},
                     {"val", {e.a, e.b}}});
  }
  return j;
}

}  // namespace hessgkm
