#pragma once

#include "kclab/reduction.hpp"
#include "kclab/shortest_paths.hpp"

#include <vector>

namespace kclab::hw {

/*
 * Highway dimension: the smallest h such that for every radius r and every
 * vertex v, some set of at most h vertices inside B_{4r}(v) meets every
 * shortest path that is longer than r and stays inside B_{4r}(v).
 *
 * The path universe throughout this module is the canonical shortest path
 * of every ordered vertex pair (both orientations, deduplicated); on graphs
 * without ties that is all shortest paths.
 */

// A path with its geometry: verts[i] sits at pos[i] from the front.
struct WeightedPath {
  std::vector<VertexId> verts;
  std::vector<Rational> pos;
  const Rational& length() const { return pos.back(); }
};

/*
 * Greedy cover of a path: keep the front vertex, then repeatedly keep the
 * first vertex at least q further along than the last kept one. Every
 * vertex-to-vertex subpath of length >= q contains a kept vertex. q must
 * be positive.
 */
std::vector<VertexId> q_cover(const WeightedPath& p, const Rational& q);

struct HittingFamily {
  Rational radius;
  std::vector<VertexId> hitters;  // sorted by id
  int per_ball_max = 0;           // max over v of |hitters ∩ B_{4r}(v)|
  VertexId per_ball_witness = -1;
};

/*
 * Constructive hitting family for a reduced graph. At or above the scale
 * 2^{n+2} the nine structural vertices per gadget (hub, four corners, four
 * anchors) already meet every longer shortest path. Below it, r/4-covers
 * of each cycle quadrant, each ladder and each connector path are added,
 * along with the deep ladder ends u_n. The per-ball maximum is measured
 * exactly; it is what bounds the dimension from above.
 */
HittingFamily highway_witness(const red::ReducedInstance& R, const AllPairs& ap,
                              const Rational& r);

struct HighwayExact {
  int dimension = 0;
  VertexId witness_vertex = -1;
  Rational witness_radius;
};

/*
 * Exact highway dimension. Representative radii are all pairwise distances,
 * all quarters of pairwise distances, and the midpoints between consecutive
 * candidates; the minimum hitting set of each (v, r) subproblem is found by
 * branch and bound. Guarded: throws std::invalid_argument above
 * max_vertices, pointing at highway_witness for large graphs.
 */
HighwayExact highway_dimension_exact(const Graph& g, const AllPairs& ap,
                                     int max_vertices = 40);
HighwayExact highway_dimension_exact(const Graph& g, int max_vertices = 40);

}  // namespace kclab::hw
