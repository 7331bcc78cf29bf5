#pragma once

#include "kclab/graph.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace kclab::testsupport {

// Small connected random graph with exact rational weights: a random tree
// plus a few extra edges. Shared by the property suites.
inline Graph random_graph(std::mt19937& rng, int n, int extra_edges) {
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

inline Graph path_graph(int n, const Rational& step = Rational(1)) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1, step);
  return b.build();
}

inline Graph cycle_graph(int n, const Rational& step = Rational(1)) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n, step);
  return b.build();
}

}  // namespace kclab::testsupport
