#include "kclab/doubling.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>
#include <string>

namespace kclab::dbl {

namespace {

int greedy_cover(const std::vector<std::vector<int>>& sets, int m) {
  std::vector<char> covered(static_cast<size_t>(m), 0);
  int left = m, picks = 0;
  while (left > 0) {
    int besti = -1, bestc = 0;
    for (size_t s = 0; s < sets.size(); ++s) {
      int fresh = 0;
      for (int e : sets[s]) fresh += covered[static_cast<size_t>(e)] ? 0 : 1;
      if (fresh > bestc) {
        bestc = fresh;
        besti = static_cast<int>(s);
      }
    }
    ++picks;  // every element lies in its own centered ball, so besti >= 0
    for (int e : sets[static_cast<size_t>(besti)])
      if (!covered[static_cast<size_t>(e)]) {
        covered[static_cast<size_t>(e)] = 1;
        --left;
      }
  }
  return picks;
}

void cover_search(const std::vector<std::vector<int>>& sets,
                  const std::vector<std::vector<int>>& containing, int cap,
                  std::vector<char>& covered, int left, int used, int& best) {
  if (left == 0) {
    best = std::min(best, used);
    return;
  }
  if (used + (left + cap - 1) / cap >= best) return;
  int pick = -1;
  size_t fewest = SIZE_MAX;
  for (size_t e = 0; e < covered.size(); ++e)
    if (!covered[e] && containing[e].size() < fewest) {
      fewest = containing[e].size();
      pick = static_cast<int>(e);
    }
  for (int s : containing[static_cast<size_t>(pick)]) {
    std::vector<int> undone;
    for (int e : sets[static_cast<size_t>(s)])
      if (!covered[static_cast<size_t>(e)]) {
        covered[static_cast<size_t>(e)] = 1;
        undone.push_back(e);
      }
    cover_search(sets, containing, cap, covered, left - static_cast<int>(undone.size()),
                 used + 1, best);
    for (int e : undone) covered[static_cast<size_t>(e)] = 0;
  }
}

}  // namespace

DoublingReport doubling_profile(const Graph& g, const AllPairs& ap, int max_vertices) {
  if (g.order() > max_vertices)
    throw std::invalid_argument("doubling_profile: " + std::to_string(g.order()) +
                                " vertices exceed the budget of " + std::to_string(max_vertices));
  DoublingReport rep;
  if (g.order() == 0) return rep;
  rep.max_cover = 1;

  const int n = g.order();
  for (VertexId v = 0; v < n; ++v) {
    std::vector<Rational> halves;
    for (VertexId w = 0; w < n; ++w)
      if (ap.at(v, w).sign() > 0) halves.push_back(ap.at(v, w) / 2);
    std::sort(halves.begin(), halves.end());
    halves.erase(std::unique(halves.begin(), halves.end()), halves.end());

    for (const Rational& r : halves) {
      const int t1 = ap.threshold_rank(r);
      const int t2 = ap.threshold_rank(Rational(2) * r);

      std::vector<VertexId> members;
      for (VertexId w = 0; w < n; ++w)
        if (ap.rank(v, w) <= t2) members.push_back(w);
      if (static_cast<int>(members.size()) <= rep.max_cover) continue;

      std::vector<int> idx(static_cast<size_t>(n), -1);
      for (size_t i = 0; i < members.size(); ++i)
        idx[static_cast<size_t>(members[i])] = static_cast<int>(i);

      std::vector<std::vector<int>> sets;
      std::set<std::vector<int>> distinct;
      for (VertexId x = 0; x < n; ++x) {
        std::vector<int> s;
        for (VertexId w : members)
          if (ap.rank(x, w) <= t1) s.push_back(idx[static_cast<size_t>(w)]);
        if (!s.empty() && distinct.insert(s).second) sets.push_back(std::move(s));
      }

      const int ub = greedy_cover(sets, static_cast<int>(members.size()));
      if (ub <= rep.max_cover) continue;  // exact is no larger than greedy

      std::vector<std::vector<int>> containing(members.size());
      int cap = 1;
      for (size_t s = 0; s < sets.size(); ++s) {
        cap = std::max(cap, static_cast<int>(sets[s].size()));
        for (int e : sets[s]) containing[static_cast<size_t>(e)].push_back(static_cast<int>(s));
      }
      std::vector<char> covered(members.size(), 0);
      int best = ub;
      cover_search(sets, containing, cap, covered, static_cast<int>(members.size()), 0, best);
      if (best > rep.max_cover) {
        rep.max_cover = best;
        rep.witness_vertex = v;
        rep.witness_radius = r;
      }
    }
  }
  return rep;
}

DoublingReport doubling_profile(const Graph& g, int max_vertices) {
  if (g.order() == 0) return {};
  AllPairs ap(g);
  return doubling_profile(g, ap, max_vertices);
}

bool doubling_check(const Graph& g, const AllPairs& ap, int d, int max_vertices) {
  if (d < 0) throw std::invalid_argument("doubling_check: d must be nonnegative");
  const int allowed = d >= 31 ? INT_MAX : (1 << d);
  return doubling_profile(g, ap, max_vertices).max_cover <= allowed;
}

bool doubling_check(const Graph& g, int d, int max_vertices) {
  if (d < 0) throw std::invalid_argument("doubling_check: d must be nonnegative");
  if (g.order() == 0) return true;
  AllPairs ap(g);
  return doubling_check(g, ap, d, max_vertices);
}

}  // namespace kclab::dbl
