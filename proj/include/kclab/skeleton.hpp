#pragma once

#include "kclab/shortest_paths.hpp"

#include <vector>

namespace kclab::skel {

/*
 * Skeleton of a shortest-path tree: keep a point p of the tree's geometric
 * realization iff some vertex below p is at least half again as far from
 * the source, d(s,v) >= (3/2) d(s,p). On the edge from parent u to child c
 * that keeps exactly the prefix (0, t*] with
 *     t* = clamp((2 (len + f(c)) - d(s,u)) / 3, 0, len),
 * f(c) being the eccentricity of c within its own subtree. The dimension
 * is the largest number of kept edge prefixes any distance sphere meets.
 */

struct SkeletonEdge {
  VertexId parent = -1;
  VertexId child = -1;
  Rational depth;  // d(s, parent)
  Rational len;
  Rational tstar;  // kept prefix length, in [0, len]
};

struct SourceProfile {
  VertexId source = -1;
  std::vector<SkeletonEdge> edges;  // one entry per tree edge
  int width = 0;                    // max sphere cut over all radii
  Rational witness_radius;          // a radius attaining width
};

// Number of kept prefixes met by the sphere of radius r.
int cut_at(const SourceProfile& p, const Rational& r);

SourceProfile skeleton_profile(const Graph& g, const ShortestPathTree& t);

struct SkeletonResult {
  int dimension = 0;
  VertexId witness_source = -1;
  Rational witness_radius;
  std::vector<int> per_source;
};

SkeletonResult skeleton_dimension(const Graph& g);
SkeletonResult skeleton_dimension(const Graph& g, const AllPairs& ap);

}  // namespace kclab::skel
