#include "doctest.h"

#include <json.hpp>

#include "kclab/equivalence.hpp"
#include "kclab/params_report.hpp"
#include "kclab/sweep.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace kclab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("single-cell embedding preserves solvability exactly") {
  auto planted = gt::make_instance(1, 2, {{{2, 1}}});
  auto grid = eq::embed_single_cell(planted);
  CHECK(grid.chi == 2);
  CHECK(grid.cell(1, 1) == planted.cell(1, 1));
  CHECK(grid.cell(1, 2) == std::vector<gt::Pair>{{1, 2}});
  CHECK(grid.cell(2, 1) == std::vector<gt::Pair>{{2, 1}});
  CHECK(grid.cell(2, 2) == std::vector<gt::Pair>{{2, 2}});

  auto sol = gt::solve_bruteforce(grid);
  REQUIRE(sol.has_value());
  CHECK(sol->pick(2, 1, 1) == gt::Pair{2, 1});

  CHECK_FALSE(gt::solve_bruteforce(eq::embed_single_cell(gt::make_instance(1, 2, {{}}))));
  CHECK_THROWS_AS(eq::embed_single_cell(grid), std::invalid_argument);
}

TEST_CASE("verdicts on hand-built instances") {
  SUBCASE("empty single cell: both sides say no") {
    auto v = eq::verify_equivalence(gt::make_instance(1, 2, {{}}), "empty");
    CHECK_FALSE(v.inconclusive);
    CHECK_FALSE(v.gt_solvable);
    CHECK_FALSE(v.kcenter_within_threshold);
    CHECK(v.agree);
  }
  SUBCASE("solvable single cell round-trips") {
    auto v = eq::verify_equivalence(gt::make_instance(1, 2, {{{1, 1}, {2, 2}}}), "t1cell");
    CHECK(v.gt_solvable);
    CHECK(v.kcenter_within_threshold);
    CHECK(v.agree);
    CHECK(v.detail == "round trip validated");
    CHECK(v.search_nodes > 0);
  }
  SUBCASE("2x2 with a forced second-component decrease: both no") {
    auto inst = gt::make_instance(2, 2, {{{2, 2}}, {{1, 1}}, {{1, 1}}, {{2, 2}}});
    auto v = eq::verify_equivalence(inst, "hand-unsat");
    CHECK_FALSE(v.gt_solvable);
    CHECK_FALSE(v.kcenter_within_threshold);
    CHECK(v.agree);
  }
  SUBCASE("2x2 all cells {(1,1)}: both yes, optimum meets the threshold") {
    auto inst = gt::make_instance(2, 2, std::vector<std::vector<gt::Pair>>(4, {{1, 1}}));
    eq::Options opt;
    opt.compute_optimum = true;
    auto v = eq::verify_equivalence(inst, "hand-sat", opt);
    CHECK(v.gt_solvable);
    CHECK(v.kcenter_within_threshold);
    CHECK(v.agree);
    REQUIRE(v.optimum_cost.has_value());
    // Augmenting lifts the bound to N = n + chi = 4; the optimum lands
    // exactly on the decision threshold 2^{N+1}.
    CHECK(*v.optimum_cost == Rational(32));
    CHECK(eq::verdict_line(v).find("opt=32") != std::string::npos);
  }
}

TEST_CASE("random instances agree across the reduction") {
  for (uint64_t seed : {10u, 11u, 12u}) {
    auto v = eq::verify_equivalence(gt::random_instance(2, 2, 2, seed),
                                    "rand-" + std::to_string(seed));
    CHECK_FALSE(v.inconclusive);
    CHECK(v.agree);
  }
}

TEST_CASE("starved solver reports inconclusive, never a verdict") {
  eq::Options opt;
  opt.budget = 10;
  auto v = eq::verify_equivalence(gt::random_instance(2, 2, 2, 10), "starved", opt);
  CHECK(v.inconclusive);
  CHECK_FALSE(v.agree);
  CHECK(v.detail.find("budget") != std::string::npos);
  CHECK(eq::verdict_line(v).find("INCONCLUSIVE") != std::string::npos);
}

TEST_CASE("parameter report on the two-pair lone gadget") {
  auto R = red::build_reduction(gt::make_instance(1, 2, {{{1, 1}, {2, 2}}}));
  auto rep = rep::compute_params(R);
  CHECK(rep.vertices == 37);
  CHECK(rep.edges == 42);
  CHECK(rep.kappa == 8);
  CHECK(rep.kappa_radius == Rational(21, 2));
  CHECK(rep.hd_exact == 11);
  CHECK(rep.hd_witness_family == 37);
  CHECK(rep.hd_per_ball_max == 25);
  CHECK(rep.hd_exact.value() <= rep.hd_per_ball_max);
  CHECK(rep.doubling_d == 3);
  CHECK(rep.pathwidth_constructive == 8);
  CHECK(rep.pathwidth_exact == 3);

  auto doc = nlohmann::json::parse(rep.json());
  CHECK(doc["kappa"]["value"] == 8);
  CHECK(doc["kappa"]["witness_radius"] == "21/2");
  CHECK(doc["hd"]["exact"] == 11);
  CHECK(doc["doubling"]["passes_d"] == 3);
  CHECK(doc["pathwidth"]["constructive_width"] == 8);
}

TEST_CASE("budgets disable the exact quantities only") {
  auto R = red::build_reduction(gt::make_instance(1, 2, {{{1, 1}, {2, 2}}}));
  rep::Budgets tight;
  tight.hd_exact_vertices = 10;
  tight.doubling_vertices = 10;
  tight.pathwidth_exact_vertices = 5;
  auto rep = rep::compute_params(R, tight);
  CHECK_FALSE(rep.hd_exact.has_value());
  CHECK_FALSE(rep.doubling_d.has_value());
  CHECK_FALSE(rep.pathwidth_exact.has_value());
  CHECK(rep.kappa == 8);
  CHECK(rep.pathwidth_constructive == 8);
}

TEST_CASE("sweep runs the full pipeline per item and writes stable reports") {
  sw::SweepConfig cfg;
  cfg.chis = {1, 2};
  cfg.ns = {2};
  cfg.seeds = {5};
  auto result = sw::run_sweep(cfg);
  REQUIRE(result.items.size() == 2);
  CHECK(result.items[0].id == "chi1-n2-s5");
  CHECK(result.items[1].id == "chi2-n2-s5");
  CHECK(result.all_agree());
  CHECK(result.all_structure_ok());

  auto table = result.table();
  CHECK(table.find("chi1-n2-s5") != std::string::npos);
  CHECK(table.find("NO") == std::string::npos);
  CHECK(table.find("FAIL") == std::string::npos);

  auto dir = std::filesystem::temp_directory_path() / "kclab-sweep-test";
  std::filesystem::remove_all(dir);
  sw::write_sweep(result, dir.string());
  CHECK(std::filesystem::exists(dir / "chi1-n2-s5.json"));
  CHECK(std::filesystem::exists(dir / "aggregate.json"));
  CHECK(std::filesystem::exists(dir / "aggregate.txt"));

  auto doc = nlohmann::json::parse(slurp(dir / "chi2-n2-s5.json"));
  CHECK(doc["chi"] == 2);
  CHECK(doc["verdict"]["agree"] == true);
  CHECK(doc["structure"]["ok"] == true);
  CHECK(doc["params"]["kappa"]["value"].get<int>() > 0);

  // Reports exclude timings, so a rerun reproduces them byte for byte.
  auto first = slurp(dir / "aggregate.json");
  sw::write_sweep(sw::run_sweep(cfg), dir.string());
  CHECK(slurp(dir / "aggregate.json") == first);
  std::filesystem::remove_all(dir);
}
