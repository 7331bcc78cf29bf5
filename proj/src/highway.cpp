#include "kclab/highway.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace kclab::hw {

std::vector<VertexId> q_cover(const WeightedPath& p, const Rational& q) {
  if (q.sign() <= 0) throw std::invalid_argument("q_cover: q must be positive");
  if (p.verts.empty() || p.verts.size() != p.pos.size())
    throw std::invalid_argument("q_cover: malformed path");
  std::vector<VertexId> out{p.verts.front()};
  Rational last = p.pos.front();
  for (size_t i = 1; i < p.verts.size(); ++i) {
    if (p.pos[i] - last >= q) {
      out.push_back(p.verts[i]);
      last = p.pos[i];
    }
  }
  return out;
}

namespace {

WeightedPath quadrant_path(const red::Gadget& gd, int h, int n) {
  const Rational q = red::quadrant_length(n);
  const Rational lo = q * (h - 1), hi = q * h;
  WeightedPath p;
  for (const red::CyclePoint& cp : gd.cycle)
    if (lo <= cp.offset && cp.offset <= hi) {
      p.verts.push_back(cp.vid);
      p.pos.push_back(cp.offset - lo);
    }
  if (h == 4) {  // the closing corner wraps around to offset zero
    p.verts.push_back(gd.corner[0]);
    p.pos.push_back(q);
  }
  return p;
}

WeightedPath ladder_path(const red::Gadget& gd, int h) {
  WeightedPath p;
  const auto& lad = gd.ladder_side(h);
  for (size_t t = 0; t < lad.size(); ++t) {
    p.verts.push_back(lad[t]);
    p.pos.push_back(Rational::pow2(static_cast<long>(t) + 1) - 2);
  }
  return p;
}

WeightedPath down_path(const red::ReducedInstance& R, int i, int j) {
  const int n = R.source.n;
  WeightedPath p;
  p.verts.push_back(R.gadget(i, j).anchor[2]);
  p.pos.push_back(Rational(0));
  const auto& link = R.down_link(i, j);
  for (size_t t = 0; t < link.size(); ++t) {
    p.verts.push_back(link[t]);
    p.pos.push_back(Rational(static_cast<long>(t) + 1, n + 1));
  }
  p.verts.push_back(R.gadget(i + 1, j).anchor[0]);
  p.pos.push_back(Rational(1));
  return p;
}

WeightedPath right_path(const red::ReducedInstance& R, int i, int j) {
  const int n = R.source.n;
  WeightedPath p;
  p.verts.push_back(R.gadget(i, j + 1).anchor[3]);
  p.pos.push_back(Rational(0));
  const auto& link = R.right_link(i, j);
  for (size_t s = 0; s < link.size(); ++s) {
    p.verts.push_back(link[s]);
    p.pos.push_back(Rational::pow2(static_cast<long>(s) + 2) - 2);
  }
  p.verts.push_back(R.gadget(i, j).anchor[1]);
  p.pos.push_back(Rational::pow2(n) - 2);
  return p;
}

}  // namespace

HittingFamily highway_witness(const red::ReducedInstance& R, const AllPairs& ap,
                              const Rational& r) {
  if (r.sign() <= 0) throw std::invalid_argument("highway_witness: radius must be positive");
  const int n = R.source.n;
  const int chi = R.source.chi;

  std::set<VertexId> picked;
  for (const red::Gadget& gd : R.gadgets) {
    picked.insert(gd.hub);
    for (int h = 0; h < 4; ++h) {
      picked.insert(gd.corner[static_cast<size_t>(h)]);
      picked.insert(gd.anchor[static_cast<size_t>(h)]);
    }
  }
  if (r < Rational::pow2(n + 2)) {
    const Rational q = r / 4;
    auto add = [&picked](const std::vector<VertexId>& vs) {
      picked.insert(vs.begin(), vs.end());
    };
    for (const red::Gadget& gd : R.gadgets) {
      for (int h = 1; h <= 4; ++h) add(q_cover(quadrant_path(gd, h, n), q));
      for (int h : {1, 3}) {
        add(q_cover(ladder_path(gd, h), q));
        picked.insert(gd.ladder_side(h).back());
      }
    }
    for (int i = 1; i < chi; ++i)
      for (int j = 1; j <= chi; ++j) add(q_cover(down_path(R, i, j), q));
    for (int i = 1; i <= chi; ++i)
      for (int j = 1; j < chi; ++j) add(q_cover(right_path(R, i, j), q));
  }

  HittingFamily fam;
  fam.radius = r;
  fam.hitters.assign(picked.begin(), picked.end());
  const int t4 = ap.threshold_rank(Rational(4) * r);
  for (VertexId v = 0; v < R.graph.order(); ++v) {
    int c = 0;
    for (VertexId hit : fam.hitters)
      if (ap.rank(v, hit) <= t4) ++c;
    if (c > fam.per_ball_max) {
      fam.per_ball_max = c;
      fam.per_ball_witness = v;
    }
  }
  return fam;
}

namespace {

struct PathUniverse {
  std::vector<std::vector<VertexId>> paths;           // deduplicated sequences
  std::vector<std::pair<VertexId, VertexId>> ends;    // front/back of each
};

PathUniverse canonical_universe(const Graph& g, const AllPairs& ap) {
  PathUniverse u;
  std::set<std::vector<VertexId>> seen;
  for (VertexId s = 0; s < g.order(); ++s) {
    const ShortestPathTree& t = ap.tree(s);
    for (VertexId w = 0; w < g.order(); ++w) {
      if (w == s) continue;
      std::vector<VertexId> path = t.path_to(w);
      if (path.back() < path.front()) std::reverse(path.begin(), path.end());
      if (seen.insert(path).second) {
        u.ends.emplace_back(path.front(), path.back());
        u.paths.push_back(std::move(path));
      }
    }
  }
  return u;
}

bool contains(const std::vector<VertexId>& path, VertexId v) {
  return std::find(path.begin(), path.end(), v) != path.end();
}

int greedy_hit(const std::vector<std::vector<VertexId>>& paths) {
  std::vector<char> alive(paths.size(), 1);
  size_t left = paths.size();
  int picks = 0;
  while (left > 0) {
    std::map<VertexId, int> score;
    for (size_t i = 0; i < paths.size(); ++i)
      if (alive[i])
        for (VertexId v : paths[i]) ++score[v];
    VertexId bestv = -1;
    int bestc = 0;
    for (const auto& [v, c] : score)
      if (c > bestc) {
        bestc = c;
        bestv = v;
      }
    ++picks;
    for (size_t i = 0; i < paths.size(); ++i)
      if (alive[i] && contains(paths[i], bestv)) {
        alive[i] = 0;
        --left;
      }
  }
  return picks;
}

// Vertex-disjoint alive paths need one hitter each.
int disjoint_lower_bound(const std::vector<std::vector<VertexId>>& paths,
                         const std::vector<char>& alive) {
  std::set<VertexId> used;
  int count = 0;
  for (size_t i = 0; i < paths.size(); ++i) {
    if (!alive[i]) continue;
    bool clash = false;
    for (VertexId v : paths[i]) clash = clash || used.count(v) > 0;
    if (!clash) {
      ++count;
      used.insert(paths[i].begin(), paths[i].end());
    }
  }
  return count;
}

void hit_search(const std::vector<std::vector<VertexId>>& paths, std::vector<char>& alive,
                int picked, int& best) {
  int target = -1;
  size_t tsize = 0;
  for (size_t i = 0; i < paths.size(); ++i)
    if (alive[i] && (target < 0 || paths[i].size() < tsize)) {
      target = static_cast<int>(i);
      tsize = paths[i].size();
    }
  if (target < 0) {
    best = std::min(best, picked);
    return;
  }
  if (picked + disjoint_lower_bound(paths, alive) >= best) return;
  for (VertexId v : paths[static_cast<size_t>(target)]) {
    std::vector<char> next = alive;
    for (size_t i = 0; i < paths.size(); ++i)
      if (next[i] && contains(paths[i], v)) next[i] = 0;
    hit_search(paths, next, picked + 1, best);
  }
}

int min_hitting_set(const std::vector<std::vector<VertexId>>& paths, int upper) {
  std::vector<char> alive(paths.size(), 1);
  int best = upper;
  hit_search(paths, alive, 0, best);
  return best;
}

}  // namespace

HighwayExact highway_dimension_exact(const Graph& g, const AllPairs& ap, int max_vertices) {
  if (g.order() > max_vertices)
    throw std::invalid_argument("highway_dimension_exact: " + std::to_string(g.order()) +
                                " vertices exceed the budget of " +
                                std::to_string(max_vertices) +
                                "; use highway_witness instead");
  HighwayExact out;
  if (g.order() <= 1) return out;

  const PathUniverse u = canonical_universe(g, ap);
  const int npaths = static_cast<int>(u.paths.size());

  std::vector<int> len_rank(static_cast<size_t>(npaths));
  std::vector<std::vector<int>> far_rank(static_cast<size_t>(npaths),
                                         std::vector<int>(static_cast<size_t>(g.order())));
  for (int p = 0; p < npaths; ++p) {
    len_rank[static_cast<size_t>(p)] = ap.rank(u.ends[static_cast<size_t>(p)].first,
                                               u.ends[static_cast<size_t>(p)].second);
    for (VertexId v = 0; v < g.order(); ++v) {
      int m = 0;
      for (VertexId w : u.paths[static_cast<size_t>(p)]) m = std::max(m, ap.rank(v, w));
      far_rank[static_cast<size_t>(p)][static_cast<size_t>(v)] = m;
    }
  }

  // Breakpoints of the subproblem family: the path filter flips at distance
  // values, the ball filter at their quarters. Midpoints catch the open
  // intervals between.
  std::vector<Rational> cand;
  for (const Rational& d : ap.values())
    if (d.sign() > 0) {
      cand.push_back(d);
      cand.push_back(d / 4);
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Rational> probes;
  for (size_t i = 0; i < cand.size(); ++i) {
    probes.push_back(cand[i]);
    if (i + 1 < cand.size()) probes.push_back((cand[i] + cand[i + 1]) / 2);
  }

  for (VertexId v = 0; v < g.order(); ++v) {
    std::set<std::vector<int>> seen;
    for (const Rational& r : probes) {
      const int tr = ap.threshold_rank(r);
      const int t4 = ap.threshold_rank(Rational(4) * r);
      std::vector<int> sel;
      for (int p = 0; p < npaths; ++p)
        if (len_rank[static_cast<size_t>(p)] > tr &&
            far_rank[static_cast<size_t>(p)][static_cast<size_t>(v)] <= t4)
          sel.push_back(p);
      if (sel.empty() || static_cast<int>(sel.size()) <= out.dimension) continue;
      if (!seen.insert(sel).second) continue;

      std::vector<std::vector<VertexId>> sub;
      sub.reserve(sel.size());
      for (int p : sel) sub.push_back(u.paths[static_cast<size_t>(p)]);
      const int ub = greedy_hit(sub);
      if (ub <= out.dimension) continue;  // exact can only be smaller still
      const int exact = min_hitting_set(sub, ub);
      if (exact > out.dimension) {
        out.dimension = exact;
        out.witness_vertex = v;
        out.witness_radius = r;
      }
    }
  }
  return out;
}

HighwayExact highway_dimension_exact(const Graph& g, int max_vertices) {
  if (g.order() == 0) return {};
  AllPairs ap(g);
  return highway_dimension_exact(g, ap, max_vertices);
}

}  // namespace kclab::hw
