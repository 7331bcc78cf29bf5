#pragma once

#include "kclab/graph.hpp"
#include "kclab/gridtiling.hpp"
#include "kclab/rational.hpp"
#include "kclab/shortest_paths.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kclab::red {

/*
 * The reduced graph realizes a grid-tiling instance as a k-center question.
 * Each cell (i,j) becomes a gadget: a long cycle carrying one marked vertex
 * per pair plus two trailing sentinels per pair, a hub tied to the four
 * quadrant corners, two binary ladders reaching side anchors x1/x3 through
 * per-column portal edges, and direct anchor edges for x2/x4. Vertical
 * neighbours are linked x3 -> x1 by a unit path, horizontal neighbours
 * x2 -> x4 by a doubling path. Asking for 5*chi^2 centers within radius
 * 2^{n+1} then encodes solvability of the tiling.
 */

// Coordinates are 1-based: (i,j) the gadget, h the quadrant or anchor side,
// (a,b) the pair, t a position on a ladder or connector path.
enum class Role {
  Hub,             // y[i,j]
  Corner,          // z{h}[i,j], start of quadrant h
  PairVertex,      // v{h}[i,j](a,b)
  Sentinel,        // p{h}[i,j](a,b), trails the pair vertex by 2^{n+1}
  SentinelTwin,    // q{h}[i,j](a,b), another 1/n past the sentinel
  MergedSentinel,  // m{h}[i,j](a,b): q of (a,b) fused with p of (a+1,b)
  Anchor,          // x{h}[i,j]
  Ladder,          // u{h}[i,j]:t, h in {1,3}, t in [n]
  DownLink,        // d[i,j]:t, interior of the connector x3[i,j] -> x1[i+1,j]
  RightLink,       // r[i,j]:t, interior of the connector x2[i,j] -> x4[i,j+1]
};

struct VertexRef {
  Role role;
  int i = 0, j = 0;
  int h = 0;
  int a = 0, b = 0;
  int t = 0;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

std::string render_ref(const VertexRef& ref);
VertexRef parse_ref(const std::string& label);  // exact inverse of render_ref

struct CyclePoint {
  VertexId vid = -1;
  Rational offset;  // forward distance from z1 around the cycle
};

struct Gadget {
  int i = 1, j = 1;
  VertexId hub = -1;
  std::array<VertexId, 4> corner{};  // z1..z4 (index h-1)
  std::array<VertexId, 4> anchor{};  // x1..x4 (index h-1)
  std::vector<CyclePoint> cycle;     // all cycle vertices in forward order
  std::array<std::map<gt::Pair, VertexId>, 4> pair_vertex;
  // Merged vertices appear in both maps: sentinel at (a+1,b), twin at (a,b).
  std::array<std::map<gt::Pair, VertexId>, 4> sentinel;
  std::array<std::map<gt::Pair, VertexId>, 4> sentinel_twin;

  const std::vector<VertexId>& ladder_side(int h) const;  // h in {1,3}
  std::array<std::vector<VertexId>, 2> ladders{};          // [0] for h=1, [1] for h=3
};

struct ReducedInstance {
  gt::GTInstance source;  // the b-covered instance the graph encodes
  Graph graph;
  int k = 0;        // 5 * chi^2
  Rational radius;  // 2^{n+1}

  std::vector<Gadget> gadgets;  // row-major
  // Connector interiors, keyed row-major like gadgets; entries exist for
  // i < chi (down) and j < chi (right). Right links are empty for n = 2,
  // where the horizontal connector is a single edge.
  std::vector<std::vector<VertexId>> down_links;
  std::vector<std::vector<VertexId>> right_links;

  const Gadget& gadget(int i, int j) const;
  const std::vector<VertexId>& down_link(int i, int j) const;
  const std::vector<VertexId>& right_link(int i, int j) const;
  VertexRef ref_of(VertexId v) const;
};

// Closed forms used by the construction and frozen by the tests.
Rational quadrant_length(int n);                           // 2^{n+2} + 1/n
Rational cycle_offset(const gt::Pair& p, int n);           // 2^b - 1 + a/n
Rational anchor_distance(int h, const gt::Pair& p, int n); // dist(x^h, v^h_p)
Rational ladder_to_anchor(int b, int n);                   // dist(u_b, x^h) = 2^{n+1} - 2^b

// The pair a ladder vertex u_b connects to: largest a at column b on side 1,
// smallest a on side 3. The cell must offer column b.
gt::Pair portal_pair(const std::vector<gt::Pair>& cell, int h, int b);
Rational portal_edge_length(int h, const gt::Pair& p, int n);

// Ladder entry used by a shortest path from a pair vertex at column b_from
// to ladder vertex u_{b_to} on the same side.
int predicted_portal(int b_from, int b_to);

// Requires n >= 2 and a b-covered instance (those are the graphs whose
// distance claims hold); throws invalid_argument otherwise.
ReducedInstance build_reduction(const gt::GTInstance& inst);

// Five centers per gadget: the hub plus the picked pair's vertex on every
// quadrant. Picks must be members of their cells; the tiling inequalities
// are not required (violating picks yield covers that miss the radius).
std::vector<VertexId> solution_to_centers(const ReducedInstance& R, const gt::GTSolution& sol);

struct Extraction {
  std::optional<gt::GTSolution> solution;
  std::string failure;  // empty on success, else names the offending vertex
};

// Read the picked pairs back out of a center set that covers the graph
// within the radius. Structured failure when the set is too large, misses
// a vertex, or is not in the hub-plus-pair-vertices shape.
Extraction extract_solution(const ReducedInstance& R, const std::vector<VertexId>& centers,
                            const AllPairs* ap = nullptr);

// Reduction file: the instance plus k, radius and the full graph; reading
// rebuilds from the instance and cross-checks the stored graph.
void write_reduction(const ReducedInstance& R, std::ostream& os);
std::string reduction_to_string(const ReducedInstance& R);
ReducedInstance read_reduction(std::istream& is);
ReducedInstance reduction_from_string(const std::string& text);

// Graphviz rendering with one cluster per gadget.
void write_reduction_dot(const ReducedInstance& R, std::ostream& os);

}  // namespace kclab::red
