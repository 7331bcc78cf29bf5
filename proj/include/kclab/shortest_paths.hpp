#pragma once

#include <optional>
#include <vector>

#include "kclab/graph.hpp"

namespace kclab {

/*
 * Canonical shortest-path tree. Ties between equal-length paths are broken
 * deterministically: prefer fewer hops, then the lexicographically smaller
 * vertex-id sequence. Prefixes and suffixes of canonical paths are canonical
 * under this order, so one tree per source is consistent.
 */
struct ShortestPathTree {
  VertexId source = -1;
  std::vector<std::optional<Rational>> dist;  // nullopt = unreachable
  std::vector<VertexId> parent;               // -1 at source and unreachable vertices
  std::vector<int> parent_edge;               // edge index, -1 likewise
  std::vector<int> hops;                      // tie-break record: edges on canonical path
  std::vector<std::vector<VertexId>> children;
  std::vector<VertexId> order;                // reachable vertices by (dist, hops, id)

  bool reachable(VertexId v) const { return dist.at(static_cast<size_t>(v)).has_value(); }
  const Rational& dist_to(VertexId v) const;
  // Vertex sequence source..v of the canonical path.
  std::vector<VertexId> path_to(VertexId v) const;
};

ShortestPathTree dijkstra(const Graph& g, VertexId s);

// Throws std::runtime_error naming both endpoints if v is unreachable from u.
Rational distance(const Graph& g, VertexId u, VertexId v);

// Closed ball: all w with dist(v,w) <= r, sorted by id. r must be >= 0.
std::vector<VertexId> ball(const Graph& g, VertexId v, const Rational& r);

// Canonical path u..v realized by the shortest-path tree of u.
std::vector<VertexId> canonical_path(const Graph& g, VertexId u, VertexId v);

// f(v) = max over w in v's subtree of dist(v, w); zero at leaves.
std::vector<Rational> subtree_eccentricity(const ShortestPathTree& t);

/*
 * All-pairs helper: one canonical tree per source plus a rank-compressed
 * distance matrix (ranks index into the sorted list of distinct distance
 * values), so radius comparisons in hot loops are integer comparisons.
 */
class AllPairs {
 public:
  explicit AllPairs(const Graph& g);  // requires a connected graph

  int order() const { return n_; }
  const Rational& at(VertexId u, VertexId v) const;
  int rank(VertexId u, VertexId v) const { return rank_[idx(u, v)]; }
  const std::vector<Rational>& values() const { return values_; }
  // Largest rank whose value is <= r; -1 if r < 0.
  int threshold_rank(const Rational& r) const;
  const ShortestPathTree& tree(VertexId s) const { return trees_.at(static_cast<size_t>(s)); }
  const Rational& max_distance() const { return values_.back(); }

 private:
  size_t idx(VertexId u, VertexId v) const {
    return static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v);
  }
  int n_ = 0;
  std::vector<ShortestPathTree> trees_;
  std::vector<int> rank_;
  std::vector<Rational> values_;
};

}  // namespace kclab
