#include "kclab/shortest_paths.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace kclab {

const Rational& ShortestPathTree::dist_to(VertexId v) const {
  const auto& d = dist.at(static_cast<size_t>(v));
  if (!d)
    throw std::runtime_error("no path from vertex " + std::to_string(source) + " to vertex " +
                             std::to_string(v));
  return *d;
}

std::vector<VertexId> ShortestPathTree::path_to(VertexId v) const {
  dist_to(v);  // reachability check
  std::vector<VertexId> seq;
  for (VertexId w = v; w != -1; w = parent[static_cast<size_t>(w)]) seq.push_back(w);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

ShortestPathTree dijkstra(const Graph& g, VertexId s) {
  int n = g.order();
  if (s < 0 || s >= n) throw std::invalid_argument("dijkstra: source out of range");
  ShortestPathTree t;
  t.source = s;
  t.dist.assign(static_cast<size_t>(n), std::nullopt);
  t.parent.assign(static_cast<size_t>(n), -1);
  t.parent_edge.assign(static_cast<size_t>(n), -1);
  t.hops.assign(static_cast<size_t>(n), 0);
  t.children.assign(static_cast<size_t>(n), {});

  // Pass 1: plain distances. The heap key is (dist, id) so the pop order is
  // deterministic; stale entries are skipped.
  using QItem = std::pair<Rational, VertexId>;
  auto cmp = [](const QItem& a, const QItem& b) {
    return a.first > b.first || (a.first == b.first && a.second > b.second);
  };
  std::priority_queue<QItem, std::vector<QItem>, decltype(cmp)> pq(cmp);
  std::vector<char> done(static_cast<size_t>(n), 0);
  t.dist[static_cast<size_t>(s)] = Rational(0);
  pq.push({Rational(0), s});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (done[static_cast<size_t>(v)]) continue;
    done[static_cast<size_t>(v)] = 1;
    t.order.push_back(v);
    for (auto [w, e] : g.incident(v)) {
      Rational nd = d + g.edge(e).len;
      auto& dw = t.dist[static_cast<size_t>(w)];
      if (!dw || nd < *dw) {
        dw = nd;
        pq.push({nd, w});
      }
    }
  }

  // Pass 2: canonical parents. Edge lengths are positive, so every candidate
  // parent of v is strictly closer to s and already finalized when v is
  // processed in distance order. Among parents on shortest paths, minimize
  // (hops, lexicographic vertex sequence); prefixes of canonical paths are
  // canonical, so comparing the stored parent paths is sound.
  std::vector<std::vector<VertexId>> paths(static_cast<size_t>(n));
  paths[static_cast<size_t>(s)] = {s};
  for (VertexId v : t.order) {
    if (v == s) continue;
    const Rational& dv = *t.dist[static_cast<size_t>(v)];
    VertexId best_u = -1;
    int best_e = -1;
    for (auto [u, e] : g.incident(v)) {
      if (!t.dist[static_cast<size_t>(u)]) continue;
      if (*t.dist[static_cast<size_t>(u)] + g.edge(e).len != dv) continue;
      if (best_u == -1) {
        best_u = u;
        best_e = e;
        continue;
      }
      int hu = t.hops[static_cast<size_t>(u)];
      int hb = t.hops[static_cast<size_t>(best_u)];
      if (hu != hb) {
        if (hu < hb) { best_u = u; best_e = e; }
        continue;
      }
      const auto& pu = paths[static_cast<size_t>(u)];
      const auto& pb = paths[static_cast<size_t>(best_u)];
      if (std::lexicographical_compare(pu.begin(), pu.end(), pb.begin(), pb.end())) {
        best_u = u;
        best_e = e;
      }
    }
    t.parent[static_cast<size_t>(v)] = best_u;
    t.parent_edge[static_cast<size_t>(v)] = best_e;
    t.hops[static_cast<size_t>(v)] = t.hops[static_cast<size_t>(best_u)] + 1;
    paths[static_cast<size_t>(v)] = paths[static_cast<size_t>(best_u)];
    paths[static_cast<size_t>(v)].push_back(v);
  }

  // `order` from pass 1 is (dist, id); refine equal-dist runs by (hops, id).
  std::stable_sort(t.order.begin(), t.order.end(), [&](VertexId a, VertexId b) {
    const Rational& da = *t.dist[static_cast<size_t>(a)];
    const Rational& db = *t.dist[static_cast<size_t>(b)];
    if (da != db) return da < db;
    if (t.hops[static_cast<size_t>(a)] != t.hops[static_cast<size_t>(b)])
      return t.hops[static_cast<size_t>(a)] < t.hops[static_cast<size_t>(b)];
    return a < b;
  });
  for (VertexId v : t.order)
    if (v != s) t.children[static_cast<size_t>(t.parent[static_cast<size_t>(v)])].push_back(v);
  return t;
}

Rational distance(const Graph& g, VertexId u, VertexId v) {
  ShortestPathTree t = dijkstra(g, u);
  if (!t.reachable(v))
    throw std::runtime_error("distance: vertex " + std::to_string(v) +
                             (g.label(v).empty() ? "" : " (" + g.label(v) + ")") +
                             " unreachable from vertex " + std::to_string(u) +
                             (g.label(u).empty() ? "" : " (" + g.label(u) + ")"));
  return t.dist_to(v);
}

std::vector<VertexId> ball(const Graph& g, VertexId v, const Rational& r) {
  if (r.sign() < 0) throw std::invalid_argument("ball: negative radius " + r.str());
  ShortestPathTree t = dijkstra(g, v);
  std::vector<VertexId> out;
  for (VertexId w = 0; w < g.order(); ++w)
    if (t.reachable(w) && t.dist_to(w) <= r) out.push_back(w);
  return out;
}

std::vector<VertexId> canonical_path(const Graph& g, VertexId u, VertexId v) {
  ShortestPathTree t = dijkstra(g, u);
  if (!t.reachable(v))
    throw std::runtime_error("canonical_path: vertex " + std::to_string(v) +
                             " unreachable from vertex " + std::to_string(u));
  return t.path_to(v);
}

std::vector<Rational> subtree_eccentricity(const ShortestPathTree& t) {
  size_t n = t.dist.size();
  // max dist(source, w) over w in each subtree, then shift by dist(source, v).
  std::vector<Rational> far(n, Rational(0));
  for (size_t v = 0; v < n; ++v)
    if (t.dist[v]) far[v] = *t.dist[v];
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    VertexId v = *it;
    VertexId p = t.parent[static_cast<size_t>(v)];
    if (p != -1 && far[static_cast<size_t>(v)] > far[static_cast<size_t>(p)])
      far[static_cast<size_t>(p)] = far[static_cast<size_t>(v)];
  }
  std::vector<Rational> f(n, Rational(0));
  for (size_t v = 0; v < n; ++v)
    if (t.dist[v]) f[v] = far[v] - *t.dist[v];
  return f;
}

AllPairs::AllPairs(const Graph& g) : n_(g.order()) {
  g.require_connected();
  trees_.reserve(static_cast<size_t>(n_));
  for (VertexId s = 0; s < n_; ++s) trees_.push_back(dijkstra(g, s));

  std::map<Rational, int> value_rank;
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v = 0; v < n_; ++v) value_rank[trees_[static_cast<size_t>(u)].dist_to(v)] = 0;
  values_.reserve(value_rank.size());
  for (auto& [val, rk] : value_rank) {
    rk = static_cast<int>(values_.size());
    values_.push_back(val);
  }
  rank_.resize(static_cast<size_t>(n_) * static_cast<size_t>(n_));
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v = 0; v < n_; ++v)
      rank_[idx(u, v)] = value_rank.at(trees_[static_cast<size_t>(u)].dist_to(v));
}

const Rational& AllPairs::at(VertexId u, VertexId v) const {
  return values_[static_cast<size_t>(rank_[idx(u, v)])];
}

int AllPairs::threshold_rank(const Rational& r) const {
  auto it = std::upper_bound(values_.begin(), values_.end(), r);
  return static_cast<int>(it - values_.begin()) - 1;
}

}  // namespace kclab
