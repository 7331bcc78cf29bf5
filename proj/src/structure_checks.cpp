#include "kclab/structure_checks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kclab::chk {

namespace {

int succ(int h) { return h % 4 + 1; }

std::string dist_witness(const Graph& g, VertexId u, VertexId v, const Rational& got,
                         const std::string& want) {
  std::ostringstream os;
  os << "dist(" << g.label(u) << ", " << g.label(v) << ") = " << got.str() << ", expected "
     << want;
  return os.str();
}

// The pair whose cycle offset is least; with offsets 2^b - 1 + a/n this is
// the (b, a)-lexicographic minimum. x2 attaches there, x4 at the maximum.
gt::Pair offset_min_pair(const std::vector<gt::Pair>& cell, int n) {
  return *std::min_element(cell.begin(), cell.end(), [n](const gt::Pair& l, const gt::Pair& r) {
    return red::cycle_offset(l, n) < red::cycle_offset(r, n);
  });
}

int least_a_in_column_one(const std::vector<gt::Pair>& cell) {
  int best = 0;
  for (const gt::Pair& p : cell)
    if (p.b == 1 && (best == 0 || p.a < best)) best = p.a;
  if (best == 0) throw std::logic_error("cell has no column-1 pair despite b-coverage");
  return best;
}

struct Audit {
  const red::ReducedInstance& R;
  const AllPairs& ap;
  const int n;
  const int chi;

  CheckResult check_k_radius() const {
    CheckResult c{"k-and-radius", true, ""};
    if (R.k != 5 * chi * chi) {
      c.pass = false;
      c.witness = "k = " + std::to_string(R.k) + ", expected " + std::to_string(5 * chi * chi);
    } else if (R.radius != Rational::pow2(n + 1)) {
      c.pass = false;
      c.witness = "radius = " + R.radius.str() + ", expected " + Rational::pow2(n + 1).str();
    }
    return c;
  }

  CheckResult check_edge_lengths() const {
    CheckResult c{"edge-lengths", true, ""};
    const Rational scale(static_cast<long>(n) * (n + 1));
    for (const Edge& e : R.graph.edges()) {
      std::string complaint;
      if (e.len.sign() <= 0)
        complaint = "is not positive";
      else if (!(e.len * scale).is_integer())
        complaint = "has a denominator that does not divide " + scale.str();
      if (!complaint.empty()) {
        c.pass = false;
        c.witness = "edge " + R.graph.label(e.u) + " -- " + R.graph.label(e.v) + " of length " +
                    e.len.str() + " " + complaint;
        return c;
      }
    }
    return c;
  }

  CheckResult check_anchor_distances() const {
    CheckResult c{"anchor-distances", true, ""};
    for (const red::Gadget& gad : R.gadgets) {
      for (int h = 1; h <= 4; ++h) {
        for (const auto& [p, v] : gad.pair_vertex[h - 1]) {
          // Merged vertices never appear in pair_vertex maps, so every entry
          // is a genuine pair of the cell.
          Rational want = red::anchor_distance(h, p, n);
          const Rational& got = ap.at(gad.anchor[h - 1], v);
          if (got != want) {
            c.pass = false;
            c.witness = dist_witness(R.graph, gad.anchor[h - 1], v, got, want.str());
            return c;
          }
        }
      }
    }
    return c;
  }

  CheckResult check_quadrant_spacing() const {
    CheckResult c{"quadrant-spacing", true, ""};
    const Rational want = red::quadrant_length(n);
    for (const red::Gadget& gad : R.gadgets) {
      for (int h = 1; h <= 4; ++h) {
        for (const auto& [p, v] : gad.pair_vertex[h - 1]) {
          VertexId w = gad.pair_vertex[succ(h) - 1].at(p);
          const Rational& got = ap.at(v, w);
          if (got != want) {
            c.pass = false;
            c.witness = dist_witness(R.graph, v, w, got, want.str());
            return c;
          }
        }
      }
    }
    return c;
  }

  CheckResult check_sentinel_spacing() const {
    CheckResult c{"sentinel-spacing", true, ""};
    const Rational want = Rational::pow2(n + 2);
    for (const red::Gadget& gad : R.gadgets) {
      for (int h = 1; h <= 4; ++h) {
        for (const auto& [p, v] : gad.sentinel_twin[h - 1]) {
          VertexId w = gad.sentinel[succ(h) - 1].at(p);
          const Rational& got = ap.at(v, w);
          if (got != want) {
            c.pass = false;
            c.witness = dist_witness(R.graph, v, w, got, want.str());
            return c;
          }
        }
      }
    }
    return c;
  }

  CheckResult check_ladder_anchor() const {
    CheckResult c{"ladder-anchor", true, ""};
    for (const red::Gadget& gad : R.gadgets) {
      for (int h : {1, 3}) {
        const auto& ladder = gad.ladder_side(h);
        for (int b = 1; b <= n; ++b) {
          Rational want = red::ladder_to_anchor(b, n);
          const Rational& got = ap.at(ladder[static_cast<size_t>(b - 1)], gad.anchor[h - 1]);
          if (got != want) {
            c.pass = false;
            c.witness = dist_witness(R.graph, ladder[static_cast<size_t>(b - 1)],
                                     gad.anchor[h - 1], got, want.str());
            return c;
          }
        }
      }
    }
    return c;
  }

  CheckResult check_portal_entry() const {
    CheckResult c{"portal-entry", true, ""};
    for (const red::Gadget& gad : R.gadgets) {
      for (int h : {1, 3}) {
        const auto& ladder = gad.ladder_side(h);
        for (const auto& [p, v] : gad.pair_vertex[h - 1]) {
          for (int bto = 1; bto <= n; ++bto) {
            VertexId target = ladder[static_cast<size_t>(bto - 1)];
            auto path = ap.tree(v).path_to(target);
            VertexId entered = -1;
            for (VertexId step : path) {
              auto it = std::find(ladder.begin(), ladder.end(), step);
              if (it != ladder.end()) {
                entered = *it;
                break;
              }
            }
            VertexId want = ladder[static_cast<size_t>(red::predicted_portal(p.b, bto) - 1)];
            if (entered != want) {
              c.pass = false;
              std::ostringstream os;
              os << "path " << R.graph.label(v) << " .. " << R.graph.label(target)
                 << " enters the ladder at "
                 << (entered == -1 ? std::string("no ladder vertex") : R.graph.label(entered))
                 << ", expected " << R.graph.label(want);
              c.witness = os.str();
              return c;
            }
          }
        }
      }
    }
    return c;
  }

  CheckResult check_hub_isolation() const {
    CheckResult c{"hub-isolation", true, ""};
    const Rational want = Rational::pow2(n + 1) + 1;
    for (const red::Gadget& gad : R.gadgets) {
      VertexId nearest = -1;
      for (VertexId v = 0; v < R.graph.order(); ++v) {
        if (v == gad.hub) continue;
        if (nearest == -1 || ap.at(gad.hub, v) < ap.at(gad.hub, nearest)) nearest = v;
      }
      if (ap.at(gad.hub, nearest) != want) {
        c.pass = false;
        c.witness = "nearest to " + R.graph.label(gad.hub) + " is " + R.graph.label(nearest) +
                    ": " + dist_witness(R.graph, gad.hub, nearest, ap.at(gad.hub, nearest),
                                        want.str());
        return c;
      }
    }
    return c;
  }

  // Expected hub-to-anchor values; shared with the hub-hub check.
  Rational want_hub_anchor(const red::Gadget& gad, int h) const {
    const auto& cell = R.source.cell(gad.i, gad.j);
    switch (h) {
      case 1:
        return Rational::pow2(n + 2) + 2;
      case 2: {
        gt::Pair p = offset_min_pair(cell, n);
        return Rational::pow2(n + 1) + Rational::pow2(n) + Rational::pow2(p.b + 1) +
               Rational(2 * p.a, n);
      }
      case 3:
        return Rational::pow2(n + 2) + 1 + Rational(2 * least_a_in_column_one(cell), n);
      default:
        return Rational::pow2(n + 2) + 1;
    }
  }

  CheckResult check_hub_anchor() const {
    CheckResult c{"hub-anchor", true, ""};
    for (const red::Gadget& gad : R.gadgets) {
      for (int h = 1; h <= 4; ++h) {
        Rational want = want_hub_anchor(gad, h);
        const Rational& got = ap.at(gad.hub, gad.anchor[h - 1]);
        if (got != want) {
          c.pass = false;
          c.witness = dist_witness(R.graph, gad.hub, gad.anchor[h - 1], got, want.str());
          return c;
        }
      }
    }
    return c;
  }

  CheckResult check_hub_hub() const {
    CheckResult c{"hub-hub", true, ""};
    for (int i = 1; i <= chi && c.pass; ++i) {
      for (int j = 1; j <= chi && c.pass; ++j) {
        const red::Gadget& gad = R.gadget(i, j);
        // Down: through x3, the unit connector, and x1 of the gadget below.
        if (i < chi) {
          VertexId other = R.gadget(i + 1, j).hub;
          Rational want = want_hub_anchor(gad, 3) + 1 + (Rational::pow2(n + 2) + 2);
          if (ap.at(gad.hub, other) != want) {
            c.pass = false;
            c.witness = dist_witness(R.graph, gad.hub, other, ap.at(gad.hub, other), want.str());
          }
        }
        // Right: through x2, the doubling connector, and x4 of the right
        // neighbour.
        if (j < chi && c.pass) {
          VertexId other = R.gadget(i, j + 1).hub;
          Rational want = want_hub_anchor(gad, 2) + (Rational::pow2(n) - 2) +
                          (Rational::pow2(n + 2) + 1);
          if (ap.at(gad.hub, other) != want) {
            c.pass = false;
            c.witness = dist_witness(R.graph, gad.hub, other, ap.at(gad.hub, other), want.str());
          }
        }
      }
    }
    return c;
  }

  CheckResult check_anchor_separation() const {
    CheckResult c{"anchor-separation", true, ""};
    const Rational lo = Rational::pow2(n + 2) + Rational::pow2(n);
    const Rational hi = Rational::pow2(n + 3) + Rational::pow2(n + 1) + 4;
    for (const red::Gadget& gad : R.gadgets) {
      for (int h = 1; h <= 4; ++h) {
        for (int g2 = h + 1; g2 <= 4; ++g2) {
          const Rational& got = ap.at(gad.anchor[h - 1], gad.anchor[g2 - 1]);
          if (!(lo < got && got <= hi)) {
            c.pass = false;
            c.witness = dist_witness(R.graph, gad.anchor[h - 1], gad.anchor[g2 - 1], got,
                                     "in (" + lo.str() + ", " + hi.str() + "]");
            return c;
          }
        }
      }
    }
    return c;
  }

  CheckResult check_anchor_to_hub() const {
    CheckResult c{"anchor-to-hub", true, ""};
    const Rational bound = Rational::pow2(n + 2) + Rational::pow2(n) + 2;
    for (const red::Gadget& gad : R.gadgets) {
      for (int h = 1; h <= 4; ++h) {
        const Rational& got = ap.at(gad.anchor[h - 1], gad.hub);
        if (got > bound) {
          c.pass = false;
          c.witness = dist_witness(R.graph, gad.anchor[h - 1], gad.hub, got,
                                   "at most " + bound.str());
          return c;
        }
      }
    }
    return c;
  }

  CheckResult check_coverage_radius() const {
    CheckResult c{"coverage-radius", true, ""};
    const Rational bound = Rational::pow2(n + 2) + Rational::pow2(n + 1);
    for (VertexId v = 0; v < R.graph.order(); ++v) {
      Rational best = ap.at(v, R.gadgets.front().hub);
      for (const red::Gadget& gad : R.gadgets) best = min(best, ap.at(v, gad.hub));
      if (best > bound) {
        c.pass = false;
        c.witness = "vertex " + R.graph.label(v) + " has hub distance " + best.str() +
                    ", expected at most " + bound.str();
        return c;
      }
    }
    return c;
  }
};

}  // namespace

bool StructureReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* StructureReport::find(std::string_view name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string StructureReport::summary() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.pass) os << "  [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

StructureReport verify_structure(const red::ReducedInstance& R, const AllPairs& ap) {
  Audit a{R, ap, R.source.n, R.source.chi};
  StructureReport report;
  report.checks = {
      a.check_k_radius(),        a.check_edge_lengths(),   a.check_anchor_distances(),
      a.check_quadrant_spacing(), a.check_sentinel_spacing(), a.check_ladder_anchor(),
      a.check_portal_entry(),    a.check_hub_isolation(),  a.check_hub_anchor(),
      a.check_hub_hub(),         a.check_anchor_separation(), a.check_anchor_to_hub(),
      a.check_coverage_radius(),
  };
  return report;
}

StructureReport verify_structure(const red::ReducedInstance& R) {
  AllPairs ap(R.graph);
  return verify_structure(R, ap);
}

red::ReducedInstance corrupt_edge(const red::ReducedInstance& R, int edge, const Rational& delta) {
  if (edge < 0 || edge >= R.graph.size())
    throw std::invalid_argument("corrupt_edge: no edge " + std::to_string(edge));
  GraphBuilder gb;
  for (VertexId v = 0; v < R.graph.order(); ++v) gb.add_vertex(R.graph.label(v));
  for (int e = 0; e < R.graph.size(); ++e) {
    const Edge& ed = R.graph.edge(e);
    gb.add_edge(ed.u, ed.v, e == edge ? ed.len + delta : ed.len);
  }
  red::ReducedInstance out = R;
  out.graph = gb.build();
  return out;
}

}  // namespace kclab::chk
