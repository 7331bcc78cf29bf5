#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kclab::gt {

struct Pair {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/*
 * Grid tiling with inequalities: a chi-by-chi grid of cells, each a set of
 * pairs from [n] x [n]. A solution picks one pair per cell such that the
 * first component is non-decreasing down every column and the second
 * component is non-decreasing along every row.
 */
struct GTInstance {
  int chi = 0;
  int n = 0;
  std::vector<std::vector<Pair>> cells;  // row-major, chi*chi entries, each sorted

  const std::vector<Pair>& cell(int i, int j) const;  // 1-based indices
};

struct GTSolution {
  std::vector<Pair> picks;  // row-major, chi*chi entries
  const Pair& pick(int chi, int i, int j) const;
};

// Validates ranges, sorts cells and drops duplicate pairs.
GTInstance make_instance(int chi, int n, std::vector<std::vector<Pair>> cells);

// True iff every pick is a member of its cell and all row/column conditions
// hold. A shape mismatch (wrong number of picks) is an error, not false.
bool check_solution(const GTInstance& inst, const GTSolution& sol);

// First solution in row-major lexicographic pick order, if any.
std::optional<GTSolution> solve_bruteforce(const GTInstance& inst);

// Every cell contains a pair with second component b, for every b in [n].
bool is_b_covered(const GTInstance& inst);

/*
 * Solvability-preserving normalization to full b-coverage, for chi >= 2.
 * The bound grows to N = n + chi; genuine pairs shift (a,b) -> (a+1,b);
 * every cell in row i < chi gains dummy pairs {(n+chi-i+1, b) : b in [N]}
 * and every cell in row chi gains {(1, b) : b in [N]}. Dummy values are
 * chosen so no dummy can appear in a valid solution. chi = 1 is an error:
 * there a dummy would always be choosable, so callers decide chi = 1
 * directly (solvable iff every cell is nonempty).
 */
GTInstance augment(const GTInstance& inst);

// Map a solution of augment(inst) back to one of inst ((a,b) -> (a-1,b)).
GTSolution unshift_solution(const GTSolution& sol);

// pairs_per_cell distinct uniform pairs per cell; deterministic in seed.
GTInstance random_instance(int chi, int n, int pairs_per_cell, uint64_t seed);

// One pair (random a, b) per b in [n] per cell, plus extra random pairs
// (duplicates collapse); satisfies is_b_covered by construction.
// Deterministic in seed.
GTInstance random_covered_instance(int chi, int n, int extra_pairs, uint64_t seed);

// Top-left restriction to a smaller grid (same n); chi_sub <= chi.
GTInstance restrict_top_left(const GTInstance& inst, int chi_sub);

// Instance file: {"chi":., "n":., "cells":[[[a,b],...],...]} row-major.
void write_instance(const GTInstance& inst, std::ostream& os);
std::string instance_to_string(const GTInstance& inst);
GTInstance read_instance(std::istream& is);
GTInstance instance_from_string(const std::string& text);

}  // namespace kclab::gt
