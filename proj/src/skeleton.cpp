#include "kclab/skeleton.hpp"

#include <algorithm>
#include <stdexcept>

namespace kclab::skel {

int cut_at(const SourceProfile& p, const Rational& r) {
  int c = 0;
  for (const SkeletonEdge& e : p.edges) {
    Rational into = r - e.depth;
    if (into > Rational(0) && into <= e.tstar) ++c;
  }
  return c;
}

SourceProfile skeleton_profile(const Graph& g, const ShortestPathTree& t) {
  SourceProfile out;
  out.source = t.source;
  std::vector<Rational> f = subtree_eccentricity(t);

  for (VertexId c = 0; c < g.order(); ++c) {
    if (!t.reachable(c) || t.parent[static_cast<size_t>(c)] < 0) continue;
    SkeletonEdge e;
    e.parent = t.parent[static_cast<size_t>(c)];
    e.child = c;
    e.len = g.edge(t.parent_edge[static_cast<size_t>(c)]).len;
    e.depth = t.dist_to(e.parent);
    Rational raw = (Rational(2) * (e.len + f[static_cast<size_t>(c)]) - e.depth) / 3;
    e.tstar = std::clamp(raw, Rational(0), e.len);
    out.edges.push_back(e);
  }

  // Each kept prefix is cut by the spheres with radius in (depth,
  // depth + t*]. The count is piecewise constant in r, stepping up right
  // after a prefix starts and down right after its attained end, so one
  // pass over the sorted endpoints finds the maximum.
  std::vector<std::pair<Rational, int>> events;
  for (const SkeletonEdge& e : out.edges) {
    if (e.tstar > Rational(0)) {
      events.push_back({e.depth, +1});
      events.push_back({e.depth + e.tstar, -1});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  out.width = 0;
  out.witness_radius = Rational(0);
  int active = 0;
  for (size_t i = 0; i < events.size();) {
    size_t j = i;
    while (j < events.size() && events[j].first == events[i].first) active += events[j++].second;
    if (active > out.width) {
      out.width = active;
      // active > 0 leaves a close event ahead, so j is in range; any radius
      // up to that next endpoint gives this count, the endpoint attains it.
      out.witness_radius = events[j].first;
    }
    i = j;
  }
  return out;
}

SkeletonResult skeleton_dimension(const Graph& g, const AllPairs& ap) {
  SkeletonResult out;
  for (VertexId s = 0; s < g.order(); ++s) {
    SourceProfile p = skeleton_profile(g, ap.tree(s));
    out.per_source.push_back(p.width);
    if (p.width > out.dimension) {
      out.dimension = p.width;
      out.witness_source = s;
      out.witness_radius = p.witness_radius;
    }
  }
  return out;
}

SkeletonResult skeleton_dimension(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("skeleton_dimension: empty graph");
  SkeletonResult out;
  for (VertexId s = 0; s < g.order(); ++s) {
    SourceProfile p = skeleton_profile(g, dijkstra(g, s));
    out.per_source.push_back(p.width);
    if (p.width > out.dimension) {
      out.dimension = p.width;
      out.witness_source = s;
      out.witness_radius = p.witness_radius;
    }
  }
  return out;
}

}  // namespace kclab::skel
