#include "doctest.h"

#include "kclab/skeleton.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace kclab;
using namespace kclab::skel;
using testsupport::lcm_denominators;
using testsupport::oracle_cut;
using testsupport::path_graph;
using testsupport::random_graph;

namespace {

Graph star_graph(int leaves) {
  GraphBuilder b;
  b.add_vertex("hub");
  for (int i = 0; i < leaves; ++i) {
    b.add_vertex("leaf" + std::to_string(i));
    b.add_edge(0, i + 1, Rational(1));
  }
  return b.build();
}

}  // namespace

TEST_CASE("star prefixes keep two thirds of each spoke") {
  auto g = star_graph(4);
  auto t = dijkstra(g, 0);
  auto p = skeleton_profile(g, t);
  REQUIRE(p.edges.size() == 4);
  for (const SkeletonEdge& e : p.edges) {
    CHECK(e.depth == Rational(0));
    CHECK(e.tstar == Rational(2, 3));
  }
  CHECK(p.width == 4);
  CHECK(cut_at(p, Rational(1, 2)) == 4);
  CHECK(cut_at(p, Rational(2, 3)) == 4);
  CHECK(cut_at(p, Rational(3, 4)) == 0);

  auto res = skeleton_dimension(g);
  CHECK(res.dimension == 4);  // never below the hub degree
  CHECK(res.witness_source == 0);
  CHECK(res.per_source.size() == 5);
}

TEST_CASE("path sources see at most two prefixes") {
  auto g = path_graph(5);
  auto end = skeleton_profile(g, dijkstra(g, 0));
  CHECK(end.width == 1);
  // the last edge is entirely pruned: nothing lies beyond it
  bool saw_empty = false;
  for (const SkeletonEdge& e : end.edges) saw_empty = saw_empty || e.tstar == Rational(0);
  CHECK(saw_empty);

  auto mid = skeleton_profile(g, dijkstra(g, 2));
  CHECK(mid.width == 2);
  CHECK(skeleton_dimension(g).dimension == 2);
}

TEST_CASE("sweep maximum matches a fine uniform grid") {
  std::mt19937 rng(515);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_graph(rng, 5 + trial % 4, trial % 3);
    AllPairs ap(g);
    for (VertexId s = 0; s < g.order(); ++s) {
      const auto& t = ap.tree(s);
      auto p = skeleton_profile(g, t);

      long l = lcm_denominators(g, t);
      Rational step(1, 3 * l);  // finer than every breakpoint gap
      Rational top = t.dist_to(t.order.back());
      int grid_max = 0;
      for (Rational r = step; r <= top; r += step) {
        int want = oracle_cut(g, t, r);
        CHECK(cut_at(p, r) == want);
        grid_max = std::max(grid_max, want);
      }
      CHECK(p.width == grid_max);
      CHECK(cut_at(p, p.witness_radius) == p.width);
    }
  }
}

TEST_CASE("dimension scan covers every source") {
  std::mt19937 rng(99);
  auto g = random_graph(rng, 7, 2);
  AllPairs ap(g);
  auto a = skeleton_dimension(g);
  auto b = skeleton_dimension(g, ap);
  CHECK(a.dimension == b.dimension);
  CHECK(a.per_source == b.per_source);
  int widest = 0;
  for (int w : a.per_source) widest = std::max(widest, w);
  CHECK(a.dimension == widest);
}

namespace {

// A vertex sits in the skeleton iff its whole parent edge is kept (the
// source trivially belongs).
bool vertex_in_skeleton(const SourceProfile& prof, VertexId w) {
  if (w == prof.source) return true;
  for (const SkeletonEdge& e : prof.edges)
    if (e.child == w) return e.tstar == e.len;
  return false;
}

}  // namespace

TEST_CASE("skeleton membership persists along the path toward the source") {
  // If w is in the skeleton of u, then every vertex v of the canonical path
  // u .. w sees w in its own skeleton.
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 8; ++trial) {
    auto g = random_graph(rng, 6 + trial % 4, trial % 3);
    AllPairs ap(g);
    std::vector<SourceProfile> profs;
    for (VertexId s = 0; s < g.order(); ++s) profs.push_back(skeleton_profile(g, ap.tree(s)));
    for (VertexId u = 0; u < g.order(); ++u) {
      for (VertexId w = 0; w < g.order(); ++w) {
        if (u == w || !vertex_in_skeleton(profs[static_cast<size_t>(u)], w)) continue;
        for (VertexId v : ap.tree(u).path_to(w)) {
          INFO("u=", u, " w=", w, " v=", v);
          CHECK(vertex_in_skeleton(profs[static_cast<size_t>(v)], w));
        }
      }
    }
  }
}
