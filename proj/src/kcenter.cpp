#include "kclab/kcenter.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace kclab::kc {

namespace {

// Fixed-width coverage sets; word count is shared by all sets of one search.
struct Bits {
  std::vector<uint64_t> w;

  explicit Bits(int n) : w(static_cast<size_t>(n + 63) / 64, 0) {}
  void set(int i) { w[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
  bool test(int i) const {
    return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
  }
  void merge(const Bits& o) {
    for (size_t t = 0; t < w.size(); ++t) w[t] |= o.w[t];
  }
  int count() const {
    int c = 0;
    for (uint64_t x : w) c += __builtin_popcountll(x);
    return c;
  }
};

int fresh_count(const Bits& ball, const Bits& covered) {
  int c = 0;
  for (size_t t = 0; t < ball.w.size(); ++t)
    c += __builtin_popcountll(ball.w[t] & ~covered.w[t]);
  return c;
}

struct Search {
  const AllPairs& ap;
  int n;
  int rank_r;       // coverage radius as a rank
  int rank_2r;      // separation radius as a rank
  long budget;
  long nodes = 0;
  bool budget_hit = false;
  std::vector<Bits> ball;      // ball[v]: vertices within r of v
  std::vector<Bits> wide;      // wide[v]: vertices within 2r of v
  std::vector<int> ball_size;  // static candidate counts
  std::vector<VertexId> chosen;

  Search(const AllPairs& a, const Rational& r, long b)
      : ap(a), n(a.order()), rank_r(a.threshold_rank(r)),
        rank_2r(a.threshold_rank(r + r)), budget(b) {
    ball.reserve(static_cast<size_t>(n));
    wide.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      Bits br(n), bw(n);
      for (int u = 0; u < n; ++u) {
        int q = ap.rank(v, u);
        if (q <= rank_r) br.set(u);
        if (q <= rank_2r) bw.set(u);
      }
      ball_size.push_back(br.count());
      ball.push_back(std::move(br));
      wide.push_back(std::move(bw));
    }
  }

  // Greedy pairwise->2r-separated uncovered vertices: each needs its own
  // fresh center, so the count bounds the remaining demand from below.
  int lower_bound(const Bits& covered) const {
    Bits blocked = covered;
    int lb = 0;
    for (int v = 0; v < n; ++v)
      if (!blocked.test(v)) {
        ++lb;
        blocked.merge(wide[static_cast<size_t>(v)]);
      }
    return lb;
  }

  bool run(const Bits& covered, int covered_count, int k_left) {
    if (covered_count == n) return true;
    if (++nodes > budget) {
      budget_hit = true;
      return false;
    }
    if (k_left == 0 || lower_bound(covered) > k_left) return false;

    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!covered.test(v) &&
          (pick < 0 || ball_size[static_cast<size_t>(v)] < ball_size[static_cast<size_t>(pick)]))
        pick = v;

    std::vector<std::pair<int, VertexId>> cands;  // (-fresh coverage, id)
    for (int c = 0; c < n; ++c)
      if (ball[static_cast<size_t>(c)].test(pick))
        cands.emplace_back(-fresh_count(ball[static_cast<size_t>(c)], covered), c);
    std::sort(cands.begin(), cands.end());

    for (auto [neg_fresh, c] : cands) {
      Bits next = covered;
      next.merge(ball[static_cast<size_t>(c)]);
      chosen.push_back(c);
      if (run(next, covered_count - neg_fresh, k_left - 1)) return true;
      chosen.pop_back();
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

Rational cover_cost(const AllPairs& ap, const std::vector<VertexId>& centers) {
  if (centers.empty()) throw std::invalid_argument("cover_cost: no centers");
  for (VertexId c : centers)
    if (c < 0 || c >= ap.order()) throw std::invalid_argument("cover_cost: center id out of range");
  Rational worst = 0;
  for (VertexId v = 0; v < ap.order(); ++v) {
    Rational best = ap.at(centers.front(), v);
    for (VertexId c : centers) best = min(best, ap.at(c, v));
    worst = max(worst, best);
  }
  return worst;
}

Decision decide(const AllPairs& ap, int k, const Rational& r, long budget) {
  Decision out;
  if (k < 0) throw std::invalid_argument("decide: negative center budget");
  if (r < Rational(0) || k == 0) {
    out.outcome = ap.order() == 0 ? Outcome::Yes : Outcome::No;
    return out;
  }
  Search s(ap, r, budget);
  Bits covered(s.n);
  bool found = s.run(covered, 0, std::min(k, s.n));
  out.nodes = s.nodes;
  if (found) {
    out.outcome = Outcome::Yes;
    out.centers = s.chosen;
  } else {
    out.outcome = s.budget_hit ? Outcome::Inconclusive : Outcome::No;
  }
  return out;
}

Solution solve_exact(const AllPairs& ap, int k, long budget) {
  if (k < 1) throw std::invalid_argument("solve_exact: needs at least one center");
  if (ap.order() == 0) throw std::invalid_argument("solve_exact: empty graph");
  Solution out;
  const auto& vals = ap.values();
  size_t lo = 0, hi = vals.size() - 1;  // r = max distance is always coverable
  std::vector<VertexId> witness;
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    Decision d = decide(ap, k, vals[mid], budget);
    out.nodes += d.nodes;
    if (d.outcome == Outcome::Yes) {
      hi = mid;
      witness = std::move(d.centers);
    } else if (d.outcome == Outcome::No) {
      lo = mid + 1;
    } else {
      out.status = Outcome::Inconclusive;
      return out;
    }
  }
  if (witness.empty() || cover_cost(ap, witness) != vals[lo]) {
    Decision d = decide(ap, k, vals[lo], budget);
    out.nodes += d.nodes;
    if (d.outcome != Outcome::Yes) {
      out.status = Outcome::Inconclusive;
      return out;
    }
    witness = std::move(d.centers);
  }
  out.status = Outcome::Yes;
  out.radius = vals[lo];
  out.centers = std::move(witness);
  return out;
}

std::vector<VertexId> approx2(const AllPairs& ap, int k) {
  if (k < 1) throw std::invalid_argument("approx2: needs at least one center");
  if (ap.order() == 0) throw std::invalid_argument("approx2: empty graph");
  int n = ap.order();
  std::vector<VertexId> centers{0};
  std::vector<Rational> nearest;
  nearest.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) nearest.push_back(ap.at(0, v));
  while (static_cast<int>(centers.size()) < std::min(k, n)) {
    int far = 0;
    for (int v = 1; v < n; ++v)
      if (nearest[static_cast<size_t>(v)] > nearest[static_cast<size_t>(far)]) far = v;
    centers.push_back(far);
    for (int v = 0; v < n; ++v)
      nearest[static_cast<size_t>(v)] = min(nearest[static_cast<size_t>(v)], ap.at(far, v));
  }
  return centers;
}

}  // namespace kclab::kc
