#pragma once

#include "kclab/shortest_paths.hpp"

#include <vector>

namespace kclab::kc {

enum class Outcome { Yes, No, Inconclusive };

// Node budget for the covering search; generous for every instance this
// project builds, while keeping runaway searches finite and deterministic.
inline constexpr long kDefaultBudget = 1'000'000;

// Worst distance any vertex has to its nearest center. Centers must be
// non-empty and valid ids.
Rational cover_cost(const AllPairs& ap, const std::vector<VertexId>& centers);

struct Decision {
  Outcome outcome = Outcome::Inconclusive;
  std::vector<VertexId> centers;  // covering witness when outcome is Yes
  long nodes = 0;                 // search nodes visited
};

/*
 * Can k centers cover every vertex within radius r? Branch-and-bound over
 * coverage bitsets: always branch on an uncovered vertex with the fewest
 * possible centers, try candidates by decreasing fresh coverage, and prune
 * with a greedy pairwise->2r-separated lower bound. Exceeding the node
 * budget yields Inconclusive, never a wrong verdict.
 */
Decision decide(const AllPairs& ap, int k, const Rational& r, long budget = kDefaultBudget);

struct Solution {
  Outcome status = Outcome::Inconclusive;  // Yes means the radius is proven optimal
  Rational radius;
  std::vector<VertexId> centers;
  long nodes = 0;  // total over all decisions
};

// Smallest radius k >= 1 centers can achieve: binary search over the sorted
// distinct pairwise distances, deciding each candidate radius exactly.
Solution solve_exact(const AllPairs& ap, int k, long budget = kDefaultBudget);

// Farthest-first traversal seeded at vertex 0; classic 2-approximation.
std::vector<VertexId> approx2(const AllPairs& ap, int k);

}  // namespace kclab::kc
