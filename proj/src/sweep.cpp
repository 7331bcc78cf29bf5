#include "kclab/sweep.hpp"

#include <json.hpp>

#include "kclab/shortest_paths.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace kclab::sw {

namespace {

using nlohmann::json;

json verdict_json(const eq::Verdict& v) {
  json doc = {{"id", v.id},
              {"inconclusive", v.inconclusive},
              {"agree", v.agree},
              {"search_nodes", v.search_nodes},
              {"detail", v.detail}};
  if (!v.inconclusive) {
    doc["gt_solvable"] = v.gt_solvable;
    doc["kcenter_within_threshold"] = v.kcenter_within_threshold;
  }
  if (v.optimum_cost) doc["optimum_cost"] = v.optimum_cost->str();
  return doc;
}

json item_json(const SweepItem& it) {
  return {{"id", it.id},
          {"chi", it.chi},
          {"n", it.n},
          {"seed", it.seed},
          {"verdict", verdict_json(it.verdict)},
          {"params", json::parse(it.params.json())},
          {"structure", {{"ok", it.structure_ok}, {"failure", it.structure_failure}}}};
}

}  // namespace

bool SweepResult::all_agree() const {
  return std::all_of(items.begin(), items.end(),
                     [](const SweepItem& it) { return it.verdict.agree; });
}

bool SweepResult::all_structure_ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const SweepItem& it) { return it.structure_ok; });
}

std::string SweepResult::table() const {
  std::ostringstream os;
  os << std::left << std::setw(16) << "id" << std::right << std::setw(5) << "chi" << std::setw(4)
     << "n" << std::setw(6) << "|V|" << std::setw(5) << "gt" << std::setw(5) << "kc" << std::setw(7)
     << "agree" << std::setw(7) << "struct" << std::setw(7) << "kappa" << std::setw(9) << "perball"
     << std::setw(5) << "pw" << std::setw(10) << "seconds" << "\n";
  for (const SweepItem& it : items) {
    const eq::Verdict& v = it.verdict;
    os << std::left << std::setw(16) << it.id << std::right << std::setw(5) << it.chi
       << std::setw(4) << it.n << std::setw(6) << it.params.vertices << std::setw(5)
       << (v.inconclusive ? "?" : v.gt_solvable ? "yes" : "no") << std::setw(5)
       << (v.inconclusive ? "?" : v.kcenter_within_threshold ? "yes" : "no") << std::setw(7)
       << (v.agree ? "yes" : "NO") << std::setw(7) << (it.structure_ok ? "ok" : "FAIL")
       << std::setw(7) << it.params.kappa << std::setw(9) << it.params.hd_per_ball_max
       << std::setw(5) << it.params.pathwidth_constructive << std::setw(10) << std::fixed
       << std::setprecision(2) << v.gt_seconds + v.kc_seconds << "\n";
  }
  return os.str();
}

SweepResult run_sweep(const SweepConfig& cfg) {
  SweepResult result;
  for (int chi : cfg.chis) {
    for (int n : cfg.ns) {
      for (uint64_t seed : cfg.seeds) {
        SweepItem it;
        it.chi = chi;
        it.n = n;
        it.seed = seed;
        it.id = "chi" + std::to_string(chi) + "-n" + std::to_string(n) + "-s" +
                std::to_string(seed);
        auto inst = gt::random_instance(chi, n, cfg.pairs_per_cell, seed);
        it.verdict = eq::verify_equivalence(inst, it.id, cfg.options);

        auto R = eq::reduced_form(inst);
        AllPairs ap(R.graph);
        auto structure = chk::verify_structure(R, ap);
        it.structure_ok = structure.all_pass();
        for (const auto& c : structure.checks)
          if (!c.pass && it.structure_failure.empty())
            it.structure_failure = c.name + ": " + c.witness;
        it.params = rep::compute_params(R, ap, cfg.budgets);
        result.items.push_back(std::move(it));
      }
    }
  }
  return result;
}

void write_sweep(const SweepResult& result, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir + ": " + ec.message());

  json aggregate = json::array();
  for (const SweepItem& it : result.items) {
    json doc = item_json(it);
    aggregate.push_back(doc);
    std::ofstream os(fs::path(out_dir) / (it.id + ".json"));
    if (!os) throw std::runtime_error("cannot write report for " + it.id);
    os << doc.dump(2) << "\n";
  }
  std::ofstream agg(fs::path(out_dir) / "aggregate.json");
  agg << aggregate.dump(2) << "\n";
  std::ofstream txt(fs::path(out_dir) / "aggregate.txt");
  txt << result.table();
  if (!agg || !txt) throw std::runtime_error("cannot write aggregate reports in " + out_dir);
}

}  // namespace kclab::sw
