#include "kclab/window.hpp"

#include "kclab/shortest_paths.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace kclab::win {

namespace {

void mark_gadget(const red::Gadget& gad, std::vector<char>& take) {
  take[static_cast<size_t>(gad.hub)] = 1;
  for (const red::CyclePoint& p : gad.cycle) take[static_cast<size_t>(p.vid)] = 1;
  for (VertexId v : gad.anchor) take[static_cast<size_t>(v)] = 1;
  for (const auto& ladder : gad.ladders)
    for (VertexId v : ladder) take[static_cast<size_t>(v)] = 1;
}

}  // namespace

Rational window_diameter(const red::ReducedInstance& R, int i, int j, int d) {
  const int chi = R.source.chi;
  if (i < 1 || i > chi || j < 1 || j > chi)
    throw std::invalid_argument("window center outside the grid");
  if (d < 0) throw std::invalid_argument("window radius must be >= 0");

  auto member = [&](int gi, int gj) {
    return gi >= 1 && gi <= chi && gj >= 1 && gj <= chi &&
           std::abs(gi - i) + std::abs(gj - j) <= d;
  };

  std::vector<char> take(static_cast<size_t>(R.graph.order()), 0);
  for (int gi = 1; gi <= chi; ++gi)
    for (int gj = 1; gj <= chi; ++gj)
      if (member(gi, gj)) mark_gadget(R.gadget(gi, gj), take);
  // Connector interiors belong to the window only when both end gadgets do.
  // (The anchors themselves are gadget vertices, so for interior-free
  // connectors the induced-edge rule below already does the right thing.)
  for (int gi = 1; gi < chi; ++gi)
    for (int gj = 1; gj <= chi; ++gj)
      if (member(gi, gj) && member(gi + 1, gj))
        for (VertexId v : R.down_link(gi, gj)) take[static_cast<size_t>(v)] = 1;
  for (int gi = 1; gi <= chi; ++gi)
    for (int gj = 1; gj < chi; ++gj)
      if (member(gi, gj) && member(gi, gj + 1))
        for (VertexId v : R.right_link(gi, gj)) take[static_cast<size_t>(v)] = 1;

  std::vector<VertexId> to_sub(static_cast<size_t>(R.graph.order()), -1);
  GraphBuilder gb;
  for (VertexId v = 0; v < R.graph.order(); ++v)
    if (take[static_cast<size_t>(v)]) to_sub[static_cast<size_t>(v)] = gb.add_vertex(R.graph.label(v));
  for (const Edge& e : R.graph.edges())
    if (take[static_cast<size_t>(e.u)] && take[static_cast<size_t>(e.v)])
      gb.add_edge(to_sub[static_cast<size_t>(e.u)], to_sub[static_cast<size_t>(e.v)], e.len);

  Graph sub = gb.build();
  sub.require_connected();
  return AllPairs(sub).max_distance();
}

}  // namespace kclab::win
