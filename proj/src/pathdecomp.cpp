#include "kclab/pathdecomp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace kclab::pd {

Contraction contract_degree2(const Graph& g, const std::vector<VertexId>& keep) {
  struct Live {
    VertexId u, v;
    Rational len;
    bool alive = true;
  };
  std::vector<Live> es;
  es.reserve(static_cast<size_t>(g.size()));
  for (const Edge& e : g.edges()) es.push_back({e.u, e.v, e.len});

  const int n = g.order();
  std::vector<std::vector<int>> inc(static_cast<size_t>(n));
  for (size_t e = 0; e < es.size(); ++e) {
    inc[static_cast<size_t>(es[e].u)].push_back(static_cast<int>(e));
    inc[static_cast<size_t>(es[e].v)].push_back(static_cast<int>(e));
  }

  std::vector<char> keepflag(static_cast<size_t>(n), 0);
  for (VertexId v : keep) {
    if (v < 0 || v >= n) throw std::invalid_argument("contract_degree2: keep vertex out of range");
    keepflag[static_cast<size_t>(v)] = 1;
  }

  auto alive_edges = [&](VertexId v) {
    std::vector<int> out;
    for (int e : inc[static_cast<size_t>(v)])
      if (es[static_cast<size_t>(e)].alive) out.push_back(e);
    return out;
  };

  std::vector<char> gone(static_cast<size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v) {
    if (keepflag[static_cast<size_t>(v)]) continue;
    auto own = alive_edges(v);
    if (own.size() != 2) continue;
    Live& e1 = es[static_cast<size_t>(own[0])];
    Live& e2 = es[static_cast<size_t>(own[1])];
    const VertexId a = e1.u == v ? e1.v : e1.u;
    const VertexId b = e2.u == v ? e2.v : e2.u;
    if (a == b)
      throw std::logic_error("contract_degree2: cycle collapsed to a loop at " + g.label(a));
    for (int e : alive_edges(a)) {
      const Live& other = es[static_cast<size_t>(e)];
      if (e != own[0] && (other.u == b || other.v == b))
        throw std::logic_error("contract_degree2: parallel edge between " + g.label(a) +
                               " and " + g.label(b));
    }
    e1.alive = e2.alive = false;
    const int fresh = static_cast<int>(es.size());
    es.push_back({a, b, e1.len + e2.len});
    inc[static_cast<size_t>(a)].push_back(fresh);
    inc[static_cast<size_t>(b)].push_back(fresh);
    gone[static_cast<size_t>(v)] = 1;
  }

  Contraction out;
  out.new_id.assign(static_cast<size_t>(n), -1);
  GraphBuilder gb;
  for (VertexId v = 0; v < n; ++v)
    if (!gone[static_cast<size_t>(v)]) out.new_id[static_cast<size_t>(v)] = gb.add_vertex(g.label(v));
  for (const Live& e : es)
    if (e.alive)
      gb.add_edge(out.new_id[static_cast<size_t>(e.u)], out.new_id[static_cast<size_t>(e.v)],
                  e.len);
  out.graph = gb.build();
  return out;
}

Contraction contract_degree2(const red::ReducedInstance& R) {
  std::vector<VertexId> keep;
  for (const red::Gadget& gd : R.gadgets)
    for (int h = 0; h < 4; ++h) keep.push_back(gd.anchor[static_cast<size_t>(h)]);
  return contract_degree2(R.graph, keep);
}

Verification verify_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  Verification res;
  const int n = g.order();
  std::vector<int> first(static_cast<size_t>(n), -1), last(static_cast<size_t>(n), -1);
  int widest = 0;
  for (size_t i = 0; i < pd.bags.size(); ++i) {
    widest = std::max(widest, static_cast<int>(pd.bags[i].size()));
    for (VertexId v : pd.bags[i]) {
      if (v < 0 || v >= n) {
        res.violation = "bag " + std::to_string(i) + " holds an unknown vertex id";
        return res;
      }
      if (first[static_cast<size_t>(v)] < 0) first[static_cast<size_t>(v)] = static_cast<int>(i);
      last[static_cast<size_t>(v)] = static_cast<int>(i);
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (first[static_cast<size_t>(v)] < 0) {
      res.violation = "vertex " + g.label(v) + " is in no bag";
      return res;
    }
  // contiguity: v must appear in every bag between its first and last
  for (VertexId v = 0; v < n; ++v)
    for (int i = first[static_cast<size_t>(v)]; i <= last[static_cast<size_t>(v)]; ++i)
      if (std::find(pd.bags[static_cast<size_t>(i)].begin(), pd.bags[static_cast<size_t>(i)].end(),
                    v) == pd.bags[static_cast<size_t>(i)].end()) {
        res.violation = "vertex " + g.label(v) + " skips bag " + std::to_string(i);
        return res;
      }
  for (const Edge& e : g.edges()) {
    bool housed = false;
    for (const auto& bag : pd.bags)
      housed = housed ||
               (std::find(bag.begin(), bag.end(), e.u) != bag.end() &&
                std::find(bag.begin(), bag.end(), e.v) != bag.end());
    if (!housed) {
      res.violation = "edge " + g.label(e.u) + " -- " + g.label(e.v) + " is in no bag";
      return res;
    }
  }
  res.valid = true;
  res.width = widest - 1;
  return res;
}

DecompResult build_path_decomposition(const red::ReducedInstance& R) {
  DecompResult out;
  out.contraction = contract_degree2(R);
  const Contraction& c = out.contraction;
  const int chi = R.source.chi;

  auto anchors_of = [&](int m) {  // row-major position, 1-based
    const red::Gadget& gd = R.gadgets[static_cast<size_t>(m - 1)];
    std::vector<VertexId> out4;
    for (int h = 0; h < 4; ++h)
      out4.push_back(c.new_id[static_cast<size_t>(gd.anchor[static_cast<size_t>(h)])]);
    return out4;
  };

  for (int m = 1; m <= chi * chi; ++m) {
    const red::Gadget& gd = R.gadgets[static_cast<size_t>(m - 1)];

    std::vector<VertexId> cyc;
    for (const red::CyclePoint& cp : gd.cycle) {
      VertexId nv = c.new_id[static_cast<size_t>(cp.vid)];
      if (nv >= 0) cyc.push_back(nv);
    }

    std::set<VertexId> ladder;
    for (int h : {1, 3})
      for (VertexId v : gd.ladder_side(h)) {
        VertexId nv = c.new_id[static_cast<size_t>(v)];
        if (nv >= 0) ladder.insert(nv);
      }

    std::vector<VertexId> everywhere;
    everywhere.push_back(c.new_id[static_cast<size_t>(gd.hub)]);
    for (VertexId a : anchors_of(m)) everywhere.push_back(a);
    for (int follow = m + 1; follow <= std::min(m + chi, chi * chi); ++follow)
      for (VertexId a : anchors_of(follow)) everywhere.push_back(a);

    for (size_t t = 1; t + 1 < cyc.size(); ++t) {
      std::vector<VertexId> bag{cyc[0], cyc[t], cyc[t + 1]};
      for (VertexId member : {cyc[0], cyc[t], cyc[t + 1]})
        for (const auto& [nbr, e] : c.graph.incident(member))
          if (ladder.count(nbr)) bag.push_back(nbr);
      bag.insert(bag.end(), everywhere.begin(), everywhere.end());
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      out.pd.bags.push_back(std::move(bag));
    }
  }

  int widest = 0;
  for (const auto& bag : out.pd.bags) widest = std::max(widest, static_cast<int>(bag.size()));
  out.pd.width = widest - 1;
  return out;
}

int pathwidth_exact_tiny(const Graph& g) {
  const int n = g.order();
  if (n > 20)
    throw std::invalid_argument("pathwidth_exact_tiny: " + std::to_string(n) +
                                " vertices exceed the budget of 20");
  if (n == 0) return 0;

  std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<size_t>(e.u)] |= uint32_t(1) << e.v;
    adj[static_cast<size_t>(e.v)] |= uint32_t(1) << e.u;
  }

  // f(S) = best achievable maximum boundary when S is an ordering prefix,
  // where the boundary of S counts members with a neighbour outside S.
  const uint32_t full = (uint32_t(1) << n) - 1;
  std::vector<uint8_t> f(static_cast<size_t>(full) + 1, 0);
  for (uint32_t s = 1; s <= full; ++s) {
    int boundary = 0;
    for (int v = 0; v < n; ++v)
      if ((s >> v & 1) && (adj[static_cast<size_t>(v)] & ~s)) ++boundary;
    int best = n + 1;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1)
        best = std::min(best, std::max<int>(f[s & ~(uint32_t(1) << v)], boundary));
    f[s] = static_cast<uint8_t>(best);
  }
  return f[full];
}

}  // namespace kclab::pd
