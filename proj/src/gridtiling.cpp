#include "kclab/gridtiling.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kclab::gt {

using nlohmann::json;

namespace {

size_t cell_index(int chi, int i, int j) {
  if (i < 1 || i > chi || j < 1 || j > chi)
    throw std::invalid_argument("cell index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside [1," + std::to_string(chi) + "]^2");
  return static_cast<size_t>(i - 1) * static_cast<size_t>(chi) + static_cast<size_t>(j - 1);
}

// Deterministic bounded draw; plain modulo would bias and
// uniform_int_distribution is not pinned down across standard libraries.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t m);

}  // namespace

const std::vector<Pair>& GTInstance::cell(int i, int j) const {
  return cells.at(cell_index(chi, i, j));
}

const Pair& GTSolution::pick(int chi, int i, int j) const {
  return picks.at(cell_index(chi, i, j));
}

GTInstance make_instance(int chi, int n, std::vector<std::vector<Pair>> cells) {
  if (chi < 1) throw std::invalid_argument("make_instance: chi must be >= 1");
  if (n < 1) throw std::invalid_argument("make_instance: n must be >= 1");
  if (cells.size() != static_cast<size_t>(chi) * static_cast<size_t>(chi))
    throw std::invalid_argument("make_instance: expected " + std::to_string(chi * chi) +
                                " cells, got " + std::to_string(cells.size()));
  for (auto& cell : cells) {
    for (const Pair& p : cell)
      if (p.a < 1 || p.a > n || p.b < 1 || p.b > n)
        throw std::invalid_argument("make_instance: pair (" + std::to_string(p.a) + "," +
                                    std::to_string(p.b) + ") outside [1," + std::to_string(n) +
                                    "]^2");
    std::sort(cell.begin(), cell.end());
    cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
  }
  GTInstance inst;
  inst.chi = chi;
  inst.n = n;
  inst.cells = std::move(cells);
  return inst;
}

bool check_solution(const GTInstance& inst, const GTSolution& sol) {
  size_t want = static_cast<size_t>(inst.chi) * static_cast<size_t>(inst.chi);
  if (sol.picks.size() != want)
    throw std::invalid_argument("check_solution: expected " + std::to_string(want) +
                                " picks, got " + std::to_string(sol.picks.size()));
  for (int i = 1; i <= inst.chi; ++i)
    for (int j = 1; j <= inst.chi; ++j) {
      const Pair& p = sol.pick(inst.chi, i, j);
      const auto& cell = inst.cell(i, j);
      if (!std::binary_search(cell.begin(), cell.end(), p)) return false;
      if (i < inst.chi && p.a > sol.pick(inst.chi, i + 1, j).a) return false;
      if (j < inst.chi && p.b > sol.pick(inst.chi, i, j + 1).b) return false;
    }
  return true;
}

namespace {

bool extend(const GTInstance& inst, std::vector<Pair>& picks, size_t at) {
  size_t total = static_cast<size_t>(inst.chi) * static_cast<size_t>(inst.chi);
  if (at == total) return true;
  int i = static_cast<int>(at) / inst.chi + 1;
  int j = static_cast<int>(at) % inst.chi + 1;
  for (const Pair& p : inst.cell(i, j)) {
    if (j > 1 && picks[at - 1].b > p.b) continue;
    if (i > 1 && picks[at - static_cast<size_t>(inst.chi)].a > p.a) continue;
    picks[at] = p;
    if (extend(inst, picks, at + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<GTSolution> solve_bruteforce(const GTInstance& inst) {
  std::vector<Pair> picks(static_cast<size_t>(inst.chi) * static_cast<size_t>(inst.chi));
  if (!extend(inst, picks, 0)) return std::nullopt;
  GTSolution sol{std::move(picks)};
  return sol;
}

bool is_b_covered(const GTInstance& inst) {
  for (const auto& cell : inst.cells) {
    std::vector<char> hit(static_cast<size_t>(inst.n) + 1, 0);
    for (const Pair& p : cell) hit[static_cast<size_t>(p.b)] = 1;
    for (int b = 1; b <= inst.n; ++b)
      if (!hit[static_cast<size_t>(b)]) return false;
  }
  return true;
}

GTInstance augment(const GTInstance& inst) {
  if (inst.chi < 2)
    throw std::invalid_argument(
        "augment: requires chi >= 2 (at chi = 1 every dummy pair would be choosable; decide "
        "chi = 1 instances directly)");
  int N = inst.n + inst.chi;
  std::vector<std::vector<Pair>> cells(inst.cells.size());
  for (int i = 1; i <= inst.chi; ++i)
    for (int j = 1; j <= inst.chi; ++j) {
      std::vector<Pair> cell;
      for (const Pair& p : inst.cell(i, j)) cell.push_back({p.a + 1, p.b});
      int dummy_a = (i < inst.chi) ? inst.n + inst.chi - i + 1 : 1;
      for (int b = 1; b <= N; ++b) cell.push_back({dummy_a, b});
      cells[cell_index(inst.chi, i, j)] = std::move(cell);
    }
  return make_instance(inst.chi, N, std::move(cells));
}

GTSolution unshift_solution(const GTSolution& sol) {
  GTSolution out = sol;
  for (Pair& p : out.picks) p.a -= 1;
  return out;
}

namespace {

uint64_t uniform_below(std::mt19937_64& rng, uint64_t m) {
  if (m == 0) throw std::invalid_argument("uniform_below: empty range");
  uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % m;
}

std::vector<Pair> all_pairs(int n) {
  std::vector<Pair> ps;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) ps.push_back({a, b});
  return ps;
}

}  // namespace

GTInstance random_instance(int chi, int n, int pairs_per_cell, uint64_t seed) {
  if (pairs_per_cell < 0 || pairs_per_cell > n * n)
    throw std::invalid_argument("random_instance: pairs_per_cell outside [0, n^2]");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Pair>> cells;
  for (int c = 0; c < chi * chi; ++c) {
    std::vector<Pair> pool = all_pairs(n);
    // Deterministic partial Fisher-Yates: the first pairs_per_cell slots.
    for (int t = 0; t < pairs_per_cell; ++t) {
      size_t rest = pool.size() - static_cast<size_t>(t);
      size_t pick = static_cast<size_t>(t) + static_cast<size_t>(uniform_below(rng, rest));
      std::swap(pool[static_cast<size_t>(t)], pool[pick]);
    }
    pool.resize(static_cast<size_t>(pairs_per_cell));
    cells.push_back(std::move(pool));
  }
  return make_instance(chi, n, std::move(cells));
}

GTInstance random_covered_instance(int chi, int n, int extra_pairs, uint64_t seed) {
  if (extra_pairs < 0) throw std::invalid_argument("random_covered_instance: negative extras");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Pair>> cells;
  for (int c = 0; c < chi * chi; ++c) {
    std::vector<Pair> cell;
    for (int b = 1; b <= n; ++b)
      cell.push_back({1 + static_cast<int>(uniform_below(rng, static_cast<uint64_t>(n))), b});
    for (int t = 0; t < extra_pairs; ++t)
      cell.push_back({1 + static_cast<int>(uniform_below(rng, static_cast<uint64_t>(n))),
                      1 + static_cast<int>(uniform_below(rng, static_cast<uint64_t>(n)))});
    cells.push_back(std::move(cell));
  }
  return make_instance(chi, n, std::move(cells));  // sorts and dedupes
}

GTInstance restrict_top_left(const GTInstance& inst, int chi_sub) {
  if (chi_sub < 1 || chi_sub > inst.chi)
    throw std::invalid_argument("restrict_top_left: chi_sub outside [1, chi]");
  std::vector<std::vector<Pair>> cells;
  for (int i = 1; i <= chi_sub; ++i)
    for (int j = 1; j <= chi_sub; ++j) cells.push_back(inst.cell(i, j));
  return make_instance(chi_sub, inst.n, std::move(cells));
}

void write_instance(const GTInstance& inst, std::ostream& os) {
  json doc;
  doc["chi"] = inst.chi;
  doc["n"] = inst.n;
  doc["cells"] = json::array();
  for (const auto& cell : inst.cells) {
    json jc = json::array();
    for (const Pair& p : cell) jc.push_back({p.a, p.b});
    doc["cells"].push_back(jc);
  }
  os << doc.dump(2) << "\n";
}

std::string instance_to_string(const GTInstance& inst) {
  std::ostringstream ss;
  write_instance(inst, ss);
  return ss.str();
}

GTInstance read_instance(std::istream& is) {
  json doc;
  try {
    is >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance file: bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("chi") || !doc.contains("n") || !doc.contains("cells") ||
      !doc["cells"].is_array())
    throw std::invalid_argument("instance file: chi, n and cells required");
  std::vector<std::vector<Pair>> cells;
  for (const auto& jc : doc["cells"]) {
    if (!jc.is_array()) throw std::invalid_argument("instance file: cell must be an array");
    std::vector<Pair> cell;
    for (const auto& jp : jc) {
      if (!jp.is_array() || jp.size() != 2)
        throw std::invalid_argument("instance file: pair must be [a,b]");
      cell.push_back({jp[0].get<int>(), jp[1].get<int>()});
    }
    cells.push_back(std::move(cell));
  }
  return make_instance(doc["chi"].get<int>(), doc["n"].get<int>(), std::move(cells));
}

GTInstance instance_from_string(const std::string& text) {
  std::istringstream ss(text);
  return read_instance(ss);
}

}  // namespace kclab::gt
