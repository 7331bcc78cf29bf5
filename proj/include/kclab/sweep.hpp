#pragma once

#include "kclab/equivalence.hpp"
#include "kclab/params_report.hpp"
#include "kclab/structure_checks.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kclab::sw {

/*
 * Batch pipeline: for every (chi, n, seed) combination, generate a random
 * instance, run the equivalence verdict, the structure audit of its reduced
 * graph, and the parameter report. The per-item files omit timings so a
 * rerun with the same configuration writes byte-identical reports; timing
 * lives in the console table only.
 */
struct SweepItem {
  std::string id;
  int chi = 0;
  int n = 0;
  uint64_t seed = 0;
  eq::Verdict verdict;
  rep::ParamsReport params;
  bool structure_ok = false;
  std::string structure_failure;  // first failing check name + witness
};

struct SweepResult {
  std::vector<SweepItem> items;

  bool all_agree() const;        // every verdict agrees (none inconclusive)
  bool all_structure_ok() const;
  std::string table() const;  // one row per item: verdicts and parameters
};

struct SweepConfig {
  std::vector<int> chis{1, 2};
  std::vector<int> ns{2};
  std::vector<uint64_t> seeds{1, 2, 3};
  int pairs_per_cell = 2;
  eq::Options options;
  rep::Budgets budgets;
};

SweepResult run_sweep(const SweepConfig& cfg);

// One JSON file per item plus aggregate.json and aggregate.txt (the table).
// Creates out_dir if needed; throws std::runtime_error when unwritable.
void write_sweep(const SweepResult& result, const std::string& out_dir);

}  // namespace kclab::sw
