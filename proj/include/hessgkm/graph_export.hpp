#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "hessgkm/gkm_graph.hpp"

namespace hessgkm {

/// Undirected DOT. Nodes and edges are emitted in lexicographic order of the
/// one-line labels; each edge carries weight="t{a}-t{b}".
void write_dot(std::ostream& out, const GkmGraph& g);
std::string to_dot(const GkmGraph& g);

/// {"n", "h", "w", "vertices", "edges": [{"u","v","pos":[i,j],"val":[a,b]}]}
nlohmann::json to_json(const GkmGraph& g);

}  // namespace hessgkm
