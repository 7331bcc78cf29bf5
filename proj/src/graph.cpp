#include "kclab/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kclab {

VertexId Graph::other_end(int e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw std::invalid_argument("other_end: vertex " + std::to_string(v) +
                              " is not an endpoint of edge " + std::to_string(e));
}

PointOnEdge Graph::point_on_edge(int e, VertexId anchor, const Rational& offset) const {
  const Edge& ed = edge(e);
  if (ed.u != anchor && ed.v != anchor)
    throw std::invalid_argument("point_on_edge: anchor " + std::to_string(anchor) +
                                " is not an endpoint of edge " + std::to_string(e));
  if (offset.sign() < 0 || offset > ed.len)
    throw std::invalid_argument("point_on_edge: offset " + offset.str() +
                                " outside [0, " + ed.len.str() + "]");
  return PointOnEdge{e, anchor, offset};
}

void Graph::require_connected() const {
  if (order() == 0) return;
  std::vector<char> seen(static_cast<size_t>(order()), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [w, e] : incident(v)) {
      (void)e;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  for (VertexId v = 0; v < order(); ++v) {
    if (!seen[static_cast<size_t>(v)])
      throw std::runtime_error("graph is disconnected: vertex " + std::to_string(v) +
                               (label(v).empty() ? "" : " (" + label(v) + ")") +
                               " unreachable from vertex 0");
  }
}

VertexId GraphBuilder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<VertexId>(labels_.size()) - 1;
}

void GraphBuilder::add_edge(VertexId u, VertexId v, Rational len) {
  int n = vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("add_edge: vertex id out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop at vertex " + std::to_string(u));
  if (len.sign() <= 0)
    throw std::invalid_argument("add_edge: non-positive length " + len.str() + " on {" +
                                std::to_string(u) + "," + std::to_string(v) + "}");
  edges_.push_back(Edge{u, v, std::move(len)});
}

Graph GraphBuilder::build() {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : edges_) {
    auto key = std::minmax(e.u, e.v);
    if (!pairs.insert({key.first, key.second}).second)
      throw std::invalid_argument("build: duplicate edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
  }
  Graph g;
  g.edges_ = std::move(edges_);
  g.labels_ = std::move(labels_);
  g.adj_.assign(g.labels_.size(), {});
  for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
    const Edge& e = g.edges_[static_cast<size_t>(i)];
    g.adj_[static_cast<size_t>(e.u)].push_back({e.v, i});
    g.adj_[static_cast<size_t>(e.v)].push_back({e.u, i});
  }
  for (auto& lst : g.adj_) std::sort(lst.begin(), lst.end());
  edges_.clear();
  labels_.clear();
  return g;
}

}  // namespace kclab
