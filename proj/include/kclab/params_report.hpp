#pragma once

#include "kclab/reduction.hpp"
#include "kclab/shortest_paths.hpp"

#include <optional>
#include <string>

namespace kclab::rep {

/*
 * One document per instance collecting the four structural parameters. The
 * exact quantities (hd_exact, doubling_d, pathwidth_exact) only appear when
 * the relevant graph fits under the caller's vertex budgets; the witness
 * and constructive quantities are always present.
 */
struct ParamsReport {
  int vertices = 0;
  int edges = 0;

  int kappa = 0;  // skeleton dimension, exact by full source sweep
  VertexId kappa_source = -1;
  Rational kappa_radius;

  std::optional<int> hd_exact;  // exact highway dimension
  int hd_witness_family = 0;    // largest probed hitting family
  int hd_per_ball_max = 0;      // largest ball intersection = the hd bound
  std::optional<int> doubling_d;  // least d with 2^d-ball covers

  int pathwidth_constructive = 0;
  std::optional<int> pathwidth_exact;  // on the contracted graph

  std::string json() const;  // {"kappa": {...}, "hd": {...}, ...}, "p/q" rationals
};

struct Budgets {
  int hd_exact_vertices = 40;
  int doubling_vertices = 160;
  int pathwidth_exact_vertices = 20;  // contracted-graph order
};

/*
 * Witness families are probed at the structural radius 2^{n+2} and at each
 * power-of-two radius below it down to 1/4; hd_per_ball_max maxes over the
 * probes. The skeleton sweep always runs in full.
 */
ParamsReport compute_params(const red::ReducedInstance& R, const AllPairs& ap,
                            const Budgets& budgets = {});
ParamsReport compute_params(const red::ReducedInstance& R, const Budgets& budgets = {});

}  // namespace kclab::rep
