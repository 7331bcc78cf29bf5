#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kclab/rational.hpp"

namespace kclab {

using VertexId = int;

struct Edge {
  VertexId u = -1;
  VertexId v = -1;
  Rational len;
};

// A point on the geometric realization of an edge: `offset` from `anchor`
// (one of the edge's endpoints) measured along the edge.
struct PointOnEdge {
  int edge = -1;
  VertexId anchor = -1;
  Rational offset;
};

/*
 * Undirected weighted graph with strictly positive exact edge lengths.
 * Immutable once built; construct through GraphBuilder. Labels are display
 * strings carried alongside the structure; no algorithm in this project
 * inspects them.
 */
class Graph {
 public:
  Graph() = default;  // empty; populated graphs come from GraphBuilder

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<size_t>(e)); }

  // (neighbor, edge index) pairs, sorted by neighbor id.
  const std::vector<std::pair<VertexId, int>>& incident(VertexId v) const {
    return adj_.at(static_cast<size_t>(v));
  }

  const std::string& label(VertexId v) const { return labels_.at(static_cast<size_t>(v)); }

  VertexId other_end(int e, VertexId v) const;

  // Validates anchor/offset and returns the point.
  PointOnEdge point_on_edge(int e, VertexId anchor, const Rational& offset) const;

  // Throws std::runtime_error naming an unreachable vertex if disconnected.
  void require_connected() const;

 private:
  friend class GraphBuilder;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, int>>> adj_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  VertexId add_vertex(std::string label = "");
  // Throws std::invalid_argument on out-of-range ids, self-loops,
  // duplicate unordered pairs, or non-positive lengths.
  void add_edge(VertexId u, VertexId v, Rational len);
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  Graph build();

 private:
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

}  // namespace kclab
