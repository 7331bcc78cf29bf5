#pragma once

#include "kclab/shortest_paths.hpp"

#include <vector>

namespace kclab::dbl {

/*
 * Doubling behavior: a graph doubles with constant d when every ball of
 * radius 2r is contained in the union of 2^d balls of radius r. Covering
 * balls are centered at vertices here, which costs at most one extra
 * doubling step against the unrestricted definition.
 */

struct DoublingReport {
  int max_cover = 0;        // worst-case minimum number of half-radius balls
  VertexId witness_vertex = -1;
  Rational witness_radius;  // an r attaining max_cover
};

/*
 * Exact worst case over every radius: between consecutive half-distances
 * the target ball B_{2r}(v) is unchanged while the covering balls only
 * grow, so each interval is hardest at its left end and probing
 * r = dist(v,w)/2 for all w settles every radius. Exact minimum covers by
 * branch and bound. Throws std::invalid_argument above max_vertices.
 */
DoublingReport doubling_profile(const Graph& g, const AllPairs& ap, int max_vertices = 160);
DoublingReport doubling_profile(const Graph& g, int max_vertices = 160);

// True iff 2^d balls always suffice, i.e. max_cover <= 2^d. d must be >= 0.
bool doubling_check(const Graph& g, const AllPairs& ap, int d, int max_vertices = 160);
bool doubling_check(const Graph& g, int d, int max_vertices = 160);

}  // namespace kclab::dbl
