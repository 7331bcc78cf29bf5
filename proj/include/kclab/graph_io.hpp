#pragma once

#include <iosfwd>
#include <string>

#include "kclab/graph.hpp"

namespace kclab {

// Structured graph file, version 1: {"version":1, "vertices":[{"id","label"}...],
// "edges":[{"u","v","len":"p/q"}...]}. Lengths are exact rational strings,
// never decimals. Ids must be exactly 0..n-1.
void write_graph(const Graph& g, std::ostream& os);
std::string graph_to_string(const Graph& g);
Graph read_graph(std::istream& is);
Graph graph_from_string(const std::string& text);

// Graphviz export; vertex ids with labels, edge lengths as edge labels.
// Deterministic output ordering.
void write_dot(const Graph& g, std::ostream& os);

}  // namespace kclab
