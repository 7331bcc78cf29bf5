#include "doctest.h"

#include "kclab/highway.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace kclab;
using namespace kclab::hw;
using testsupport::oracle_hd;
using testsupport::path_graph;
using testsupport::random_graph;

namespace {

WeightedPath unit_path(int edges) {
  WeightedPath p;
  for (int i = 0; i <= edges; ++i) {
    p.verts.push_back(i);
    p.pos.push_back(Rational(i));
  }
  return p;
}

red::ReducedInstance t1() {
  return red::build_reduction(gt::make_instance(1, 2, {{{1, 1}, {2, 2}}}));
}

red::ReducedInstance t2() {
  return red::build_reduction(gt::make_instance(1, 2, {{{1, 1}, {2, 1}, {2, 2}}}));
}

// Every canonical path longer than r, in both orientations, meets a hitter.
void check_hits_all_long_paths(const Graph& g, const AllPairs& ap, const HittingFamily& fam) {
  for (VertexId s = 0; s < g.order(); ++s) {
    const auto& tree = ap.tree(s);
    for (VertexId w = 0; w < g.order(); ++w) {
      if (w == s || !(ap.at(s, w) > fam.radius)) continue;
      bool hit = false;
      for (VertexId x : tree.path_to(w))
        hit = hit || std::binary_search(fam.hitters.begin(), fam.hitters.end(), x);
      if (!hit) {
        CAPTURE(g.label(s));
        CAPTURE(g.label(w));
        CAPTURE(fam.radius.str());
        REQUIRE(hit);
      }
    }
  }
}

}  // namespace

TEST_CASE("greedy covers keep the first vertex past each gap") {
  CHECK(q_cover(unit_path(4), Rational(2)) == std::vector<VertexId>{0, 2, 4});
  CHECK(q_cover(unit_path(4), Rational(5)) == std::vector<VertexId>{0});
  CHECK(q_cover(unit_path(4), Rational(1, 3)) == std::vector<VertexId>{0, 1, 2, 3, 4});

  WeightedPath uneven;
  uneven.verts = {7, 8, 9, 10};
  uneven.pos = {Rational(0), Rational(3, 2), Rational(2), Rational(7, 2)};
  CHECK(q_cover(uneven, Rational(2)) == std::vector<VertexId>{7, 9});

  CHECK_THROWS_AS(q_cover(unit_path(2), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(q_cover(unit_path(2), Rational(-1)), std::invalid_argument);
}

TEST_CASE("every long enough subpath contains a cover member") {
  std::mt19937 rng(2711);
  for (int trial = 0; trial < 40; ++trial) {
    WeightedPath p;
    int len = 2 + static_cast<int>(rng() % 9);
    Rational at = 0;
    for (int i = 0; i <= len; ++i) {
      p.verts.push_back(i);
      p.pos.push_back(at);
      at += Rational(static_cast<long>(rng() % 12) + 1, static_cast<long>(rng() % 3) + 1);
    }
    Rational q(static_cast<long>(rng() % 8) + 1, static_cast<long>(rng() % 2) + 1);
    auto cover = q_cover(p, q);
    for (size_t i = 0; i < p.verts.size(); ++i)
      for (size_t j = i + 1; j < p.verts.size(); ++j) {
        if (p.pos[j] - p.pos[i] < q) continue;
        bool has = false;
        for (size_t t = i; t <= j; ++t)
          has = has || std::find(cover.begin(), cover.end(), p.verts[t]) != cover.end();
        CHECK(has);
      }
  }
}

TEST_CASE("structural vertices alone cover long paths at large radii") {
  auto R = t1();
  AllPairs ap(R.graph);

  auto big = highway_witness(R, ap, Rational(16));
  CHECK(big.hitters.size() == 9);
  const auto& gd = R.gadget(1, 1);
  for (VertexId v : {gd.hub, gd.corner[0], gd.corner[3], gd.anchor[0], gd.anchor[3]})
    CHECK(std::binary_search(big.hitters.begin(), big.hitters.end(), v));
  CHECK(highway_witness(R, ap, Rational(100)).hitters.size() == 9);

  auto small = highway_witness(R, ap, Rational(8));
  CHECK(small.hitters.size() > 9);
  for (int h : {1, 3})
    CHECK(std::binary_search(small.hitters.begin(), small.hitters.end(),
                             gd.ladder_side(h).back()));

  for (long num : {1, 4, 16, 31, 32, 66})
    check_hits_all_long_paths(R.graph, ap, highway_witness(R, ap, Rational(num, 2)));

  auto fam = highway_witness(R, ap, Rational(2));
  CHECK(fam.per_ball_max > 0);
  CHECK(fam.per_ball_max <= static_cast<int>(fam.hitters.size()));
  CHECK(fam.per_ball_witness >= 0);

  CHECK_THROWS_AS(highway_witness(R, ap, Rational(0)), std::invalid_argument);
}

TEST_CASE("families survive merged sentinels and multiple gadgets") {
  auto R2 = t2();
  AllPairs ap2(R2.graph);
  for (long r : {2, 8, 16})
    check_hits_all_long_paths(R2.graph, ap2, highway_witness(R2, ap2, Rational(r)));

  auto cells = std::vector<std::vector<gt::Pair>>(4, {{1, 1}, {2, 2}});
  auto R4 = red::build_reduction(gt::make_instance(2, 2, cells));
  AllPairs ap4(R4.graph);
  CHECK(highway_witness(R4, ap4, Rational(16)).hitters.size() == 36);
  auto fine = highway_witness(R4, ap4, Rational(2));
  // the second interior of each vertical connector is the greedy pick at q = 1/2
  CHECK(std::binary_search(fine.hitters.begin(), fine.hitters.end(), R4.down_link(1, 1)[1]));
  CHECK(std::binary_search(fine.hitters.begin(), fine.hitters.end(), R4.down_link(1, 2)[1]));
  for (long r : {2, 16}) check_hits_all_long_paths(R4.graph, ap4, highway_witness(R4, ap4, Rational(r)));
}

TEST_CASE("exact dimension matches exhaustive search on small graphs") {
  {
    GraphBuilder b;
    b.add_vertex("a");
    b.add_vertex("b");
    b.add_edge(0, 1, Rational(1));
    auto g = b.build();
    auto res = highway_dimension_exact(g);
    CHECK(res.dimension == 1);
    CHECK(res.witness_vertex == 0);
    CHECK(res.witness_radius == Rational(1, 4));
  }

  auto p5 = path_graph(5);
  CHECK(highway_dimension_exact(p5).dimension == oracle_hd(p5));

  std::mt19937 rng(4242);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_graph(rng, 6 + trial, trial % 3);
    CAPTURE(trial);
    CHECK(highway_dimension_exact(g).dimension == oracle_hd(g));
  }
}

TEST_CASE("exact dimension stays under the certificate bound") {
  auto R = t1();
  AllPairs ap(R.graph);
  auto exact = highway_dimension_exact(R.graph, ap);
  CHECK(exact.dimension > 0);
  auto fam = highway_witness(R, ap, exact.witness_radius);
  CHECK(exact.dimension <= fam.per_ball_max);

  CHECK_THROWS_AS(highway_dimension_exact(R.graph, ap, 10), std::invalid_argument);
}
