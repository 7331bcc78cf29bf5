#include "kclab/equivalence.hpp"

#include "kclab/shortest_paths.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace kclab::eq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

gt::GTInstance embed_single_cell(const gt::GTInstance& inst) {
  if (inst.chi != 1) throw std::invalid_argument("embed_single_cell: instance is not 1x1");
  const int n = inst.n;
  std::vector<std::vector<gt::Pair>> cells = {inst.cell(1, 1), {{1, n}}, {{n, 1}}, {{n, n}}};
  return gt::make_instance(2, n, std::move(cells));
}

red::ReducedInstance reduced_form(const gt::GTInstance& inst) {
  gt::GTInstance grid = inst.chi == 1 ? embed_single_cell(inst) : inst;
  return red::build_reduction(gt::augment(grid));
}

Verdict verify_equivalence(const gt::GTInstance& inst, const std::string& id, const Options& opt) {
  Verdict v;
  v.id = id;

  auto start = Clock::now();
  v.gt_solvable = gt::solve_bruteforce(inst).has_value();
  v.gt_seconds = seconds_since(start);

  start = Clock::now();
  red::ReducedInstance R = reduced_form(inst);
  AllPairs ap(R.graph);
  kc::Decision dec = kc::decide(ap, R.k, R.radius, opt.budget);
  v.search_nodes = dec.nodes;
  if (opt.compute_optimum) {
    kc::Solution sol = kc::solve_exact(ap, R.k, opt.budget);
    v.search_nodes += sol.nodes;
    if (sol.status == kc::Outcome::Yes) v.optimum_cost = sol.radius;
  }
  v.kc_seconds = seconds_since(start);

  if (dec.outcome == kc::Outcome::Inconclusive) {
    v.inconclusive = true;
    v.detail = "k-center decision hit the node budget";
    return v;
  }
  v.kcenter_within_threshold = dec.outcome == kc::Outcome::Yes;
  v.agree = v.gt_solvable == v.kcenter_within_threshold;
  if (!v.agree) {
    v.detail = "tiling and k-center verdicts differ";
    return v;
  }
  if (!v.kcenter_within_threshold) return v;

  // Both said yes: the center set must convert back into a valid tiling.
  red::Extraction ex = red::extract_solution(R, dec.centers, &ap);
  if (!ex.solution) {
    v.agree = false;
    v.detail = "center set did not extract: " + ex.failure;
    return v;
  }
  gt::GTSolution back = gt::unshift_solution(*ex.solution);
  if (inst.chi == 1) back.picks = {back.picks.front()};  // the planted cell
  if (!gt::check_solution(inst, back)) {
    v.agree = false;
    v.detail = "extracted picks violate the tiling constraints";
    return v;
  }
  v.detail = "round trip validated";
  return v;
}

std::string verdict_line(const Verdict& v) {
  std::ostringstream os;
  os << (v.id.empty() ? "(instance)" : v.id) << ": ";
  if (v.inconclusive) {
    os << "INCONCLUSIVE (" << v.detail << ")";
  } else {
    os << "gt=" << (v.gt_solvable ? "yes" : "no")
       << " kcenter=" << (v.kcenter_within_threshold ? "yes" : "no")
       << (v.agree ? " agree" : " DISAGREE");
    if (v.optimum_cost) os << " opt=" << v.optimum_cost->str();
  }
  os << "  [" << v.search_nodes << " nodes, " << std::fixed << std::setprecision(2)
     << v.gt_seconds + v.kc_seconds << "s]";
  return os.str();
}

}  // namespace kclab::eq
