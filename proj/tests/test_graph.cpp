#include <doctest.h>

#include <random>
#include <sstream>

#include "kclab/graph.hpp"
#include "kclab/graph_io.hpp"
#include "kclab/shortest_paths.hpp"

using namespace kclab;

namespace {

// Small connected random graph with exact rational weights: a random tree
// plus a few extra edges. Used for property tests throughout the suite.
Graph random_graph(std::mt19937& rng, int n, int extra_edges) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % static_cast<unsigned>(v));
    pairs.push_back({u, v});
  }
  for (int t = 0; t < extra_edges && n > 2; ++t) {
    int u = static_cast<int>(rng() % static_cast<unsigned>(n));
    int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    bool dup = false;
    for (auto& p : pairs) dup = dup || (p.first == u && p.second == v);
    if (!dup) pairs.push_back({u, v});
  }
  for (auto& p : pairs) {
    long num = static_cast<long>(rng() % 12) + 1;
    long den = static_cast<long>(rng() % 3) + 1;
    b.add_edge(p.first, p.second, Rational(num, den));
  }
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex();
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1, Rational(1));
  return b.build();
}

}  // namespace

TEST_CASE("builder rejects malformed graphs") {
  GraphBuilder b;
  VertexId a = b.add_vertex("a");
  VertexId c = b.add_vertex("c");
  CHECK_THROWS_AS(b.add_edge(a, a, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(b.add_edge(a, 5, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(b.add_edge(a, c, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(b.add_edge(a, c, Rational(-1, 2)), std::invalid_argument);
  b.add_edge(a, c, Rational(1));
  b.add_edge(c, a, Rational(2));  // duplicate unordered pair, caught at build
  CHECK_THROWS_AS(b.build(), std::invalid_argument);
}

TEST_CASE("disconnected graphs are reported with the unreachable vertex named") {
  GraphBuilder b;
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_vertex("island");
  b.add_edge(0, 1, Rational(1));
  Graph g = b.build();
  CHECK_THROWS_WITH_AS(g.require_connected(),
                       doctest::Contains("island"), std::runtime_error);
  CHECK_THROWS_AS(distance(g, 0, 2), std::runtime_error);
}

TEST_CASE("point_on_edge validates anchor and offset") {
  Graph g = path_graph(2);
  CHECK_NOTHROW(g.point_on_edge(0, 0, Rational(1, 2)));
  CHECK_NOTHROW(g.point_on_edge(0, 1, Rational(1)));
  CHECK_THROWS_AS(g.point_on_edge(0, 0, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(g.point_on_edge(0, 0, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("dijkstra on a path gives prefix sums") {
  Graph g = path_graph(5);
  ShortestPathTree t = dijkstra(g, 0);
  CHECK(t.dist_to(0) == Rational(0));
  CHECK(t.dist_to(4) == Rational(4));
  CHECK(t.parent[4] == 3);
  CHECK(t.hops[4] == 4);
  CHECK(distance(g, 1, 3) == Rational(2));
}

TEST_CASE("equal-length ties prefer fewer hops") {
  GraphBuilder b;
  for (int i = 0; i < 3; ++i) b.add_vertex();
  b.add_edge(0, 1, Rational(1));
  b.add_edge(1, 2, Rational(1));
  b.add_edge(0, 2, Rational(2));  // same length, one hop
  Graph g = b.build();
  auto p = canonical_path(g, 0, 2);
  CHECK(p == std::vector<VertexId>{0, 2});
}

TEST_CASE("equal-length equal-hop ties prefer the lexicographically smaller sequence") {
  // 4-cycle: two paths 0-1-2 and 0-3-2 of equal length and hops.
  GraphBuilder b;
  for (int i = 0; i < 4; ++i) b.add_vertex();
  b.add_edge(0, 1, Rational(1));
  b.add_edge(1, 2, Rational(1));
  b.add_edge(2, 3, Rational(1));
  b.add_edge(3, 0, Rational(1));
  Graph g = b.build();
  CHECK(canonical_path(g, 0, 2) == std::vector<VertexId>{0, 1, 2});
  // From the other side the canonical path is the reverse-lex choice.
  CHECK(canonical_path(g, 2, 0) == std::vector<VertexId>{2, 1, 0});
}

TEST_CASE("dijkstra is deterministic across runs") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    Graph g = random_graph(rng, 10, 6);
    ShortestPathTree t1 = dijkstra(g, 0);
    ShortestPathTree t2 = dijkstra(g, 0);
    CHECK(t1.parent == t2.parent);
    CHECK(t1.hops == t2.hops);
    CHECK(t1.order == t2.order);
  }
}

TEST_CASE("canonical path length equals distance and suffixes are canonical") {
  std::mt19937 rng(11);
  for (int round = 0; round < 10; ++round) {
    Graph g = random_graph(rng, 9, 5);
    AllPairs ap(g);
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v = 0; v < g.order(); ++v) {
        auto p = ap.tree(u).path_to(v);
        Rational len(0);
        for (size_t i = 0; i + 1 < p.size(); ++i) {
          bool found = false;
          for (auto [w, e] : g.incident(p[i]))
            if (w == p[i + 1]) {
              len += g.edge(e).len;
              found = true;
              break;
            }
          REQUIRE(found);
        }
        CHECK(len == ap.at(u, v));
        // Every intermediate vertex's canonical path to v is the suffix.
        if (p.size() >= 3) {
          VertexId mid = p[p.size() / 2];
          auto suffix = std::vector<VertexId>(p.begin() + static_cast<long>(p.size() / 2), p.end());
          CHECK(ap.tree(mid).path_to(v) == suffix);
        }
      }
  }
}

TEST_CASE("triangle inequality holds exactly") {
  std::mt19937 rng(13);
  Graph g = random_graph(rng, 12, 8);
  AllPairs ap(g);
  for (VertexId a = 0; a < g.order(); ++a)
    for (VertexId b2 = 0; b2 < g.order(); ++b2)
      for (VertexId c = 0; c < g.order(); ++c)
        CHECK(ap.at(a, c) <= ap.at(a, b2) + ap.at(b2, c));
}

TEST_CASE("ball boundaries are inclusive") {
  Graph g = path_graph(5);
  CHECK(ball(g, 0, Rational(0)) == std::vector<VertexId>{0});
  CHECK(ball(g, 0, Rational(2)) == std::vector<VertexId>{0, 1, 2});
  CHECK(ball(g, 0, Rational(3, 2)) == std::vector<VertexId>{0, 1});
  CHECK(ball(g, 2, Rational(100)).size() == 5);
  CHECK_THROWS_AS(ball(g, 0, Rational(-1)), std::invalid_argument);
}

TEST_CASE("subtree eccentricity on a path") {
  Graph g = path_graph(3);
  ShortestPathTree t = dijkstra(g, 0);
  auto f = subtree_eccentricity(t);
  CHECK(f[0] == Rational(2));  // source sees the whole path
  CHECK(f[1] == Rational(1));
  CHECK(f[2] == Rational(0));  // leaf
}

TEST_CASE("AllPairs ranks agree with exact values") {
  std::mt19937 rng(17);
  Graph g = random_graph(rng, 8, 4);
  AllPairs ap(g);
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = 0; v < g.order(); ++v) {
      CHECK(ap.values()[static_cast<size_t>(ap.rank(u, v))] == ap.at(u, v));
      CHECK(ap.at(u, v) == ap.at(v, u));
    }
  CHECK(ap.threshold_rank(Rational(-1)) == -1);
  CHECK(ap.threshold_rank(Rational(0)) == 0);
  CHECK(ap.threshold_rank(ap.max_distance()) == static_cast<int>(ap.values().size()) - 1);
}

TEST_CASE("graph JSON round-trips exactly") {
  std::mt19937 rng(23);
  Graph g = random_graph(rng, 7, 4);
  std::string text = graph_to_string(g);
  Graph h = graph_from_string(text);
  REQUIRE(h.order() == g.order());
  REQUIRE(h.size() == g.size());
  for (VertexId v = 0; v < g.order(); ++v) CHECK(h.label(v) == g.label(v));
  for (int e = 0; e < g.size(); ++e) {
    CHECK(h.edge(e).u == g.edge(e).u);
    CHECK(h.edge(e).v == g.edge(e).v);
    CHECK(h.edge(e).len == g.edge(e).len);
  }
  // Determinism: serializing twice gives identical bytes.
  CHECK(graph_to_string(h) == text);
}

TEST_CASE("graph JSON rejects malformed input") {
  CHECK_THROWS_AS(graph_from_string("{}"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_string("{\"version\":2,\"vertices\":[],\"edges\":[]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_string("not json"), std::invalid_argument);
  CHECK_THROWS_AS(
      graph_from_string(
          "{\"version\":1,\"vertices\":[{\"id\":0,\"label\":\"\"},{\"id\":0,\"label\":\"\"}],"
          "\"edges\":[]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      graph_from_string("{\"version\":1,\"vertices\":[{\"id\":0,\"label\":\"\"},{\"id\":1,"
                        "\"label\":\"\"}],\"edges\":[{\"u\":0,\"v\":1,\"len\":0.5}]}"),
      std::invalid_argument);
}

TEST_CASE("DOT export mentions every vertex and edge label") {
  Graph g = path_graph(3);
  std::ostringstream ss;
  write_dot(g, ss);
  std::string dot = ss.str();
  CHECK(dot.find("n0 -- n1") != std::string::npos);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
}
