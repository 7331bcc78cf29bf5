#include "kclab/params_report.hpp"

#include <json.hpp>

#include "kclab/doubling.hpp"
#include "kclab/highway.hpp"
#include "kclab/pathdecomp.hpp"
#include "kclab/skeleton.hpp"

#include <algorithm>
#include <cmath>

namespace kclab::rep {

namespace {

// Least d with max_cover <= 2^d.
int covers_to_d(int max_cover) {
  int d = 0;
  while ((1 << d) < max_cover) ++d;
  return d;
}

}  // namespace

std::string ParamsReport::json() const {
  nlohmann::json doc;
  doc["graph"] = {{"vertices", vertices}, {"edges", edges}};
  doc["kappa"] = {{"value", kappa},
                  {"witness_source", kappa_source},
                  {"witness_radius", kappa_radius.str()}};
  doc["hd"] = {{"witness_family", hd_witness_family}, {"per_ball_max", hd_per_ball_max}};
  if (hd_exact) doc["hd"]["exact"] = *hd_exact;
  doc["doubling"] = nlohmann::json::object();
  if (doubling_d) doc["doubling"]["passes_d"] = *doubling_d;
  doc["pathwidth"] = {{"constructive_width", pathwidth_constructive}};
  if (pathwidth_exact) doc["pathwidth"]["exact"] = *pathwidth_exact;
  return doc.dump(2);
}

ParamsReport compute_params(const red::ReducedInstance& R, const AllPairs& ap,
                            const Budgets& budgets) {
  ParamsReport out;
  out.vertices = R.graph.order();
  out.edges = R.graph.size();

  auto sk = skel::skeleton_dimension(R.graph, ap);
  out.kappa = sk.dimension;
  out.kappa_source = sk.witness_source;
  out.kappa_radius = sk.witness_radius;

  const int n = R.source.n;
  Rational probe = Rational::pow2(n + 2);
  const Rational floor_r(1, 4);
  while (probe >= floor_r) {
    auto fam = hw::highway_witness(R, ap, probe);
    out.hd_witness_family = std::max(out.hd_witness_family,
                                     static_cast<int>(fam.hitters.size()));
    out.hd_per_ball_max = std::max(out.hd_per_ball_max, fam.per_ball_max);
    probe /= 2;
  }
  if (R.graph.order() <= budgets.hd_exact_vertices)
    out.hd_exact = hw::highway_dimension_exact(R.graph, ap, budgets.hd_exact_vertices).dimension;

  if (R.graph.order() <= budgets.doubling_vertices)
    out.doubling_d =
        covers_to_d(dbl::doubling_profile(R.graph, ap, budgets.doubling_vertices).max_cover);

  auto decomp = pd::build_path_decomposition(R);
  out.pathwidth_constructive = decomp.pd.width;
  if (decomp.contraction.graph.order() <= budgets.pathwidth_exact_vertices)
    out.pathwidth_exact = pd::pathwidth_exact_tiny(decomp.contraction.graph);

  return out;
}

ParamsReport compute_params(const red::ReducedInstance& R, const Budgets& budgets) {
  AllPairs ap(R.graph);
  return compute_params(R, ap, budgets);
}

}  // namespace kclab::rep
