#include <CLI11.hpp>
#include <json.hpp>

#include "kclab/equivalence.hpp"
#include "kclab/graph_io.hpp"
#include "kclab/kcenter.hpp"
#include "kclab/params_report.hpp"
#include "kclab/reduction.hpp"
#include "kclab/structure_checks.hpp"
#include "kclab/sweep.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace kclab;

// Exit codes, kept scriptable: 0 success/agreement, 1 disagreement or a
// failed structure check, 2 invalid input, 3 solver budget exhausted.
constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kBadInput = 2;
constexpr int kInconclusive = 3;

gt::GTInstance load_instance(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return gt::instance_from_string(buf.str());
  }
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open " + path);
  return gt::read_instance(is);
}

// Writes through a file when --out is given, else stdout.
void emit(const std::string& out, const std::function<void(std::ostream&)>& writer) {
  if (out.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream os(out);
  if (!os) throw std::invalid_argument("cannot write " + out);
  writer(os);
}

// The graph a parameter/export/solve command works on: the instance itself
// when it is already b-covered (the form the distance claims describe),
// otherwise the augmented/embedded form used by verify.
red::ReducedInstance build_for(const gt::GTInstance& inst) {
  if (inst.chi >= 2 && gt::is_b_covered(inst)) return red::build_reduction(inst);
  return eq::reduced_form(inst);
}

int run(int argc, char** argv) {
  CLI::App app{"grid-tiling to k-center reduction workbench"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  int chi = 2, n = 2, pairs = 2;
  uint64_t seed = 1;
  bool covered = false;
  std::string out;
  gen->add_option("--chi", chi, "grid side length")->capture_default_str();
  gen->add_option("--n", n, "pair component bound")->capture_default_str();
  gen->add_option("--pairs", pairs, "pairs per cell (extra pairs when --covered)")
      ->capture_default_str();
  gen->add_option("--seed", seed, "random seed")->capture_default_str();
  gen->add_flag("--covered", covered, "guarantee b-coverage");
  gen->add_option("--out", out, "output file (default stdout)");

  // augment
  auto* aug = app.add_subcommand("augment", "normalize an instance to b-coverage");
  std::string aug_in;
  aug->add_option("input", aug_in, "instance file, - for stdin")->required();
  aug->add_option("--out", out, "output file (default stdout)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "build the k-center graph");
  std::string red_in;
  reduce->add_option("input", red_in, "instance file, - for stdin")->required();
  reduce->add_option("--out", out, "output file (default stdout)");

  // solve-gt
  auto* sgt = app.add_subcommand("solve-gt", "decide the tiling by direct search");
  std::string sgt_in;
  sgt->add_option("input", sgt_in, "instance file, - for stdin")->required();
  sgt->add_option("--out", out, "output file (default stdout)");

  // solve-kcenter
  auto* skc = app.add_subcommand("solve-kcenter", "decide k centers within a radius");
  std::string skc_in, radius_text;
  int k_override = 0;
  long budget = kc::kDefaultBudget;
  skc->add_option("input", skc_in, "instance file, - for stdin")->required();
  skc->add_option("--k", k_override, "center budget (default 5*chi^2 of the built graph)");
  skc->add_option("--radius", radius_text, "covering radius p/q (default 2^{n+1})");
  skc->add_option("--budget-nodes", budget, "search node budget")->capture_default_str();
  skc->add_option("--out", out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "equivalence verdict plus structure audit");
  std::string ver_in;
  bool optimum = false;
  verify->add_option("input", ver_in, "instance file, - for stdin")->required();
  verify->add_option("--budget-nodes", budget, "search node budget")->capture_default_str();
  verify->add_flag("--optimum", optimum, "also compute the exact optimum");

  // params
  auto* params = app.add_subcommand("params", "parameter report for the built graph");
  std::string par_in;
  int budget_vertices = 40;
  params->add_option("input", par_in, "instance file, - for stdin")->required();
  params
      ->add_option("--budget-vertices", budget_vertices,
                   "largest graph the exact highway search accepts; the doubling "
                   "search allows four times this")
      ->capture_default_str();
  params->add_option("--out", out, "output file (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "batch verdicts, audits and reports");
  sw::SweepConfig cfg;
  sweep->add_option("--chi", cfg.chis, "grid sizes")->expected(-1);
  sweep->add_option("--n", cfg.ns, "component bounds")->expected(-1);
  sweep->add_option("--seeds", cfg.seeds, "seeds")->expected(-1);
  sweep->add_option("--pairs", cfg.pairs_per_cell, "pairs per cell")->capture_default_str();
  sweep->add_option("--budget-nodes", cfg.options.budget, "search node budget")
      ->capture_default_str();
  std::string sweep_dir;
  sweep->add_option("--out", sweep_dir, "report directory")->required();

  // export
  auto* exp = app.add_subcommand("export", "emit the built graph");
  std::string exp_in, format = "graph";
  exp->add_option("input", exp_in, "instance file, - for stdin")->required();
  exp->add_option("--format", format, "graph | dot | reduction")->capture_default_str();
  exp->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  if (gen->parsed()) {
    auto inst = covered ? gt::random_covered_instance(chi, n, pairs, seed)
                        : gt::random_instance(chi, n, pairs, seed);
    emit(out, [&](std::ostream& os) { gt::write_instance(inst, os); });
    return kOk;
  }

  if (aug->parsed()) {
    auto inst = gt::augment(load_instance(aug_in));
    emit(out, [&](std::ostream& os) { gt::write_instance(inst, os); });
    return kOk;
  }

  if (reduce->parsed()) {
    auto R = build_for(load_instance(red_in));
    emit(out, [&](std::ostream& os) { red::write_reduction(R, os); });
    return kOk;
  }

  if (sgt->parsed()) {
    auto inst = load_instance(sgt_in);
    auto sol = gt::solve_bruteforce(inst);
    nlohmann::json doc;
    doc["solvable"] = sol.has_value();
    if (sol) {
      doc["picks"] = nlohmann::json::array();
      for (const auto& p : sol->picks) doc["picks"].push_back({p.a, p.b});
    }
    emit(out, [&](std::ostream& os) { os << doc.dump(2) << "\n"; });
    return kOk;
  }

  if (skc->parsed()) {
    auto R = build_for(load_instance(skc_in));
    AllPairs ap(R.graph);
    int k = k_override > 0 ? k_override : R.k;
    Rational r = radius_text.empty() ? R.radius : Rational::parse(radius_text);
    auto dec = kc::decide(ap, k, r, budget);
    nlohmann::json doc;
    doc["k"] = k;
    doc["radius"] = r.str();
    doc["nodes"] = dec.nodes;
    if (dec.outcome == kc::Outcome::Inconclusive) {
      doc["outcome"] = "inconclusive";
      emit(out, [&](std::ostream& os) { os << doc.dump(2) << "\n"; });
      return kInconclusive;
    }
    doc["outcome"] = dec.outcome == kc::Outcome::Yes ? "yes" : "no";
    if (dec.outcome == kc::Outcome::Yes) {
      doc["centers"] = nlohmann::json::array();
      for (VertexId c : dec.centers) doc["centers"].push_back(R.graph.label(c));
      doc["cost"] = kc::cover_cost(ap, dec.centers).str();
    }
    emit(out, [&](std::ostream& os) { os << doc.dump(2) << "\n"; });
    return kOk;
  }

  if (verify->parsed()) {
    auto inst = load_instance(ver_in);
    eq::Options opt;
    opt.budget = budget;
    opt.compute_optimum = optimum;
    auto v = eq::verify_equivalence(inst, "cli", opt);
    std::cout << eq::verdict_line(v) << "\n";
    auto report = chk::verify_structure(eq::reduced_form(inst));
    std::cout << report.summary();
    if (v.inconclusive) return kInconclusive;
    return v.agree && report.all_pass() ? kOk : kDisagree;
  }

  if (params->parsed()) {
    auto R = build_for(load_instance(par_in));
    rep::Budgets budgets;
    budgets.hd_exact_vertices = budget_vertices;
    budgets.doubling_vertices = 4 * budget_vertices;
    auto rep = rep::compute_params(R, budgets);
    emit(out, [&](std::ostream& os) { os << rep.json() << "\n"; });
    return kOk;
  }

  if (sweep->parsed()) {
    auto result = sw::run_sweep(cfg);
    sw::write_sweep(result, sweep_dir);
    std::cout << result.table();
    for (const auto& it : result.items)
      if (it.verdict.inconclusive) return kInconclusive;
    return result.all_agree() && result.all_structure_ok() ? kOk : kDisagree;
  }

  if (exp->parsed()) {
    auto R = build_for(load_instance(exp_in));
    if (format == "graph")
      emit(out, [&](std::ostream& os) { write_graph(R.graph, os); });
    else if (format == "dot")
      emit(out, [&](std::ostream& os) { red::write_reduction_dot(R, os); });
    else if (format == "reduction")
      emit(out, [&](std::ostream& os) { red::write_reduction(R, os); });
    else
      throw std::invalid_argument("unknown format " + format);
    return kOk;
  }

  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
