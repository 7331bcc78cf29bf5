#include "kclab/reduction.hpp"

#include "kclab/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kclab::red {

using nlohmann::json;

namespace {

std::string coords(int i, int j) {
  return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string pair_suffix(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Pairs ordered by cycle offset: column-major in (b, a).
bool offset_less(const gt::Pair& p, const gt::Pair& q) {
  return std::pair(p.b, p.a) < std::pair(q.b, q.a);
}

}  // namespace

std::string render_ref(const VertexRef& r) {
  switch (r.role) {
    case Role::Hub:
      return "y" + coords(r.i, r.j);
    case Role::Corner:
      return "z" + std::to_string(r.h) + coords(r.i, r.j);
    case Role::PairVertex:
      return "v" + std::to_string(r.h) + coords(r.i, r.j) + pair_suffix(r.a, r.b);
    case Role::Sentinel:
      return "p" + std::to_string(r.h) + coords(r.i, r.j) + pair_suffix(r.a, r.b);
    case Role::SentinelTwin:
      return "q" + std::to_string(r.h) + coords(r.i, r.j) + pair_suffix(r.a, r.b);
    case Role::MergedSentinel:
      return "m" + std::to_string(r.h) + coords(r.i, r.j) + pair_suffix(r.a, r.b);
    case Role::Anchor:
      return "x" + std::to_string(r.h) + coords(r.i, r.j);
    case Role::Ladder:
      return "u" + std::to_string(r.h) + coords(r.i, r.j) + ":" + std::to_string(r.t);
    case Role::DownLink:
      return "d" + coords(r.i, r.j) + ":" + std::to_string(r.t);
    case Role::RightLink:
      return "r" + coords(r.i, r.j) + ":" + std::to_string(r.t);
  }
  throw std::logic_error("render_ref: bad role");
}

namespace {

struct Scanner {
  const std::string& s;
  size_t at = 0;

  [[noreturn]] void bail() const {
    throw std::invalid_argument("parse_ref: malformed label '" + s + "'");
  }
  char peek() const { return at < s.size() ? s[at] : '\0'; }
  void expect(char c) {
    if (peek() != c) bail();
    ++at;
  }
  int integer() {
    size_t start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    if (at == start || at - start > 9) bail();
    return std::stoi(s.substr(start, at - start));
  }
  void coords(int& i, int& j) {
    expect('[');
    i = integer();
    expect(',');
    j = integer();
    expect(']');
  }
  void pair(int& a, int& b) {
    expect('(');
    a = integer();
    expect(',');
    b = integer();
    expect(')');
  }
  void done() const {
    if (at != s.size()) bail();
  }
};

}  // namespace

VertexRef parse_ref(const std::string& label) {
  Scanner sc{label};
  VertexRef r{};
  switch (sc.peek()) {
    case 'y':
      r.role = Role::Hub;
      ++sc.at;
      sc.coords(r.i, r.j);
      break;
    case 'z':
    case 'x':
      r.role = sc.peek() == 'z' ? Role::Corner : Role::Anchor;
      ++sc.at;
      r.h = sc.integer();
      sc.coords(r.i, r.j);
      break;
    case 'v':
    case 'p':
    case 'q':
    case 'm': {
      char c = sc.peek();
      r.role = c == 'v'   ? Role::PairVertex
               : c == 'p' ? Role::Sentinel
               : c == 'q' ? Role::SentinelTwin
                          : Role::MergedSentinel;
      ++sc.at;
      r.h = sc.integer();
      sc.coords(r.i, r.j);
      sc.pair(r.a, r.b);
      break;
    }
    case 'u':
      r.role = Role::Ladder;
      ++sc.at;
      r.h = sc.integer();
      sc.coords(r.i, r.j);
      sc.expect(':');
      r.t = sc.integer();
      break;
    case 'd':
    case 'r':
      r.role = sc.peek() == 'd' ? Role::DownLink : Role::RightLink;
      ++sc.at;
      sc.coords(r.i, r.j);
      sc.expect(':');
      r.t = sc.integer();
      break;
    default:
      sc.bail();
  }
  sc.done();
  return r;
}

const std::vector<VertexId>& Gadget::ladder_side(int h) const {
  if (h == 1) return ladders[0];
  if (h == 3) return ladders[1];
  throw std::invalid_argument("ladder_side: ladders exist on sides 1 and 3 only");
}

const Gadget& ReducedInstance::gadget(int i, int j) const {
  int chi = source.chi;
  if (i < 1 || i > chi || j < 1 || j > chi)
    throw std::invalid_argument("gadget: index " + coords(i, j) + " outside the grid");
  return gadgets.at(static_cast<size_t>(i - 1) * chi + (j - 1));
}

const std::vector<VertexId>& ReducedInstance::down_link(int i, int j) const {
  if (i < 1 || i >= source.chi || j < 1 || j > source.chi)
    throw std::invalid_argument("down_link: no vertical connector at " + coords(i, j));
  return down_links.at(static_cast<size_t>(i - 1) * source.chi + (j - 1));
}

const std::vector<VertexId>& ReducedInstance::right_link(int i, int j) const {
  if (i < 1 || i > source.chi || j < 1 || j >= source.chi)
    throw std::invalid_argument("right_link: no horizontal connector at " + coords(i, j));
  return right_links.at(static_cast<size_t>(i - 1) * source.chi + (j - 1));
}

VertexRef ReducedInstance::ref_of(VertexId v) const { return parse_ref(graph.label(v)); }

Rational quadrant_length(int n) { return Rational::pow2(n + 2) + Rational(1, n); }

Rational cycle_offset(const gt::Pair& p, int n) {
  return Rational::pow2(p.b) - 1 + Rational(p.a, n);
}

Rational anchor_distance(int h, const gt::Pair& p, int n) {
  switch (h) {
    case 1:
      return Rational::pow2(n + 1) - Rational(p.a, n);
    case 2:
      return Rational::pow2(n) + Rational::pow2(p.b) + Rational(p.a, n);
    case 3:
      return Rational::pow2(n + 1) - 1 + Rational(p.a, n);
    case 4:
      return Rational::pow2(n + 1) + 1 - Rational::pow2(p.b) - Rational(p.a, n);
  }
  throw std::invalid_argument("anchor_distance: side must be 1..4");
}

Rational ladder_to_anchor(int b, int n) { return Rational::pow2(n + 1) - Rational::pow2(b); }

gt::Pair portal_pair(const std::vector<gt::Pair>& cell, int h, int b) {
  if (h != 1 && h != 3) throw std::invalid_argument("portal_pair: side must be 1 or 3");
  std::optional<gt::Pair> best;
  for (const gt::Pair& p : cell) {
    if (p.b != b) continue;
    if (!best || (h == 1 ? p.a > best->a : p.a < best->a)) best = p;
  }
  if (!best)
    throw std::invalid_argument("portal_pair: cell offers no pair at column " +
                                std::to_string(b));
  return *best;
}

Rational portal_edge_length(int h, const gt::Pair& p, int n) {
  if (h == 1) return Rational::pow2(p.b) - Rational(p.a, n);
  if (h == 3) return Rational::pow2(p.b) - 1 + Rational(p.a, n);
  throw std::invalid_argument("portal_edge_length: side must be 1 or 3");
}

int predicted_portal(int b_from, int b_to) { return b_to >= b_from ? b_from : b_to; }

namespace {

// Interior point of one quadrant, before vertex creation.
struct Planned {
  Rational local;  // offset from the quadrant corner
  int kind;        // 0 = pair vertex, 1 = sentinel, 2 = twin
  gt::Pair p;
};

}  // namespace

ReducedInstance build_reduction(const gt::GTInstance& inst) {
  if (inst.n < 2) throw std::invalid_argument("build_reduction: requires n >= 2");
  if (!gt::is_b_covered(inst))
    throw std::invalid_argument(
        "build_reduction: every cell must offer every column value in [n]");

  const int chi = inst.chi, n = inst.n;
  const Rational Q = quadrant_length(n);
  const Rational back = Rational::pow2(n + 1);         // sentinel trail distance
  const Rational step = Rational(1, n);                // twin spacing
  const Rational hub_arm = Rational::pow2(n + 1) + 1;  // hub-to-corner edges

  GraphBuilder gb;
  ReducedInstance R;
  R.source = inst;
  R.k = 5 * chi * chi;
  R.radius = Rational::pow2(n + 1);

  for (int i = 1; i <= chi; ++i)
    for (int j = 1; j <= chi; ++j) {
      const auto& cell = inst.cell(i, j);
      Gadget g;
      g.i = i;
      g.j = j;
      g.hub = gb.add_vertex(render_ref({Role::Hub, i, j}));

      auto push_cycle = [&](VertexId vid, const Rational& abs) {
        if (!g.cycle.empty()) gb.add_edge(g.cycle.back().vid, vid, abs - g.cycle.back().offset);
        g.cycle.push_back({vid, abs});
      };

      for (int h = 1; h <= 4; ++h) {
        g.corner[h - 1] = gb.add_vertex(render_ref({Role::Corner, i, j, h}));
        push_cycle(g.corner[h - 1], Q * (h - 1));

        std::vector<Planned> pts;
        for (const gt::Pair& p : cell) {
          Rational d = cycle_offset(p, n);
          pts.push_back({d, 0, p});
          pts.push_back({d + back, 1, p});
          pts.push_back({d + back + step, 2, p});
        }
        std::sort(pts.begin(), pts.end(), [](const Planned& x, const Planned& y) {
          return x.local != y.local ? x.local < y.local : x.kind < y.kind;
        });
        for (size_t s = 0; s < pts.size();) {
          size_t e = s;
          while (e < pts.size() && pts[e].local == pts[s].local) ++e;
          VertexId vid;
          if (e - s == 1) {
            const Planned& pt = pts[s];
            Role role = pt.kind == 0   ? Role::PairVertex
                        : pt.kind == 1 ? Role::Sentinel
                                       : Role::SentinelTwin;
            vid = gb.add_vertex(render_ref({role, i, j, h, pt.p.a, pt.p.b}));
            auto& slot = pt.kind == 0   ? g.pair_vertex
                         : pt.kind == 1 ? g.sentinel
                                        : g.sentinel_twin;
            slot[h - 1][pt.p] = vid;
          } else if (e - s == 2 && pts[s].kind == 1 && pts[s + 1].kind == 2 &&
                     pts[s].p.a == pts[s + 1].p.a + 1 && pts[s].p.b == pts[s + 1].p.b) {
            // q of (a,b) landing on p of (a+1,b): the only collision the
            // offsets admit, fused into one vertex reachable from both maps.
            const gt::Pair lower = pts[s + 1].p;
            vid = gb.add_vertex(render_ref({Role::MergedSentinel, i, j, h, lower.a, lower.b}));
            g.sentinel[h - 1][pts[s].p] = vid;
            g.sentinel_twin[h - 1][lower] = vid;
          } else {
            throw std::logic_error("build_reduction: unexpected cycle offset collision");
          }
          push_cycle(vid, Q * (h - 1) + pts[s].local);
          s = e;
        }
      }
      gb.add_edge(g.cycle.back().vid, g.corner[0], Q * 4 - g.cycle.back().offset);

      for (int h = 1; h <= 4; ++h) gb.add_edge(g.hub, g.corner[h - 1], hub_arm);

      for (int h = 1; h <= 4; ++h)
        g.anchor[h - 1] = gb.add_vertex(render_ref({Role::Anchor, i, j, h}));

      for (int h : {1, 3}) {
        auto& lad = g.ladders[h == 1 ? 0 : 1];
        for (int t = 1; t <= n; ++t)
          lad.push_back(gb.add_vertex(render_ref({Role::Ladder, i, j, h, 0, 0, t})));
        for (int t = 1; t < n; ++t)
          gb.add_edge(lad[static_cast<size_t>(t - 1)], lad[static_cast<size_t>(t)],
                      Rational::pow2(t));
        gb.add_edge(lad.back(), g.anchor[h - 1], Rational::pow2(n));
        for (int b = 1; b <= n; ++b) {
          gt::Pair pp = portal_pair(cell, h, b);
          gb.add_edge(lad[static_cast<size_t>(b - 1)], g.pair_vertex[h - 1].at(pp),
                      portal_edge_length(h, pp, n));
        }
      }

      gt::Pair pmin = *std::min_element(cell.begin(), cell.end(), offset_less);
      gt::Pair pmax = *std::max_element(cell.begin(), cell.end(), offset_less);
      gb.add_edge(g.anchor[1], g.pair_vertex[1].at(pmin), anchor_distance(2, pmin, n));
      gb.add_edge(g.anchor[3], g.pair_vertex[3].at(pmax), anchor_distance(4, pmax, n));

      R.gadgets.push_back(std::move(g));
    }

  R.down_links.assign(static_cast<size_t>(chi) * chi, {});
  R.right_links.assign(static_cast<size_t>(chi) * chi, {});
  for (int i = 1; i < chi; ++i)
    for (int j = 1; j <= chi; ++j) {
      auto& link = R.down_links[static_cast<size_t>(i - 1) * chi + (j - 1)];
      VertexId prev = R.gadgets[static_cast<size_t>(i - 1) * chi + (j - 1)].anchor[2];
      for (int t = 1; t <= n; ++t) {
        VertexId w = gb.add_vertex(render_ref({Role::DownLink, i, j, 0, 0, 0, t}));
        gb.add_edge(prev, w, Rational(1, n + 1));
        link.push_back(w);
        prev = w;
      }
      gb.add_edge(prev, R.gadgets[static_cast<size_t>(i) * chi + (j - 1)].anchor[0],
                  Rational(1, n + 1));
    }
  for (int i = 1; i <= chi; ++i)
    for (int j = 1; j < chi; ++j) {
      auto& link = R.right_links[static_cast<size_t>(i - 1) * chi + (j - 1)];
      VertexId prev = R.gadgets[static_cast<size_t>(i - 1) * chi + j].anchor[3];
      for (int t = 2; t <= n - 1; ++t) {
        VertexId w = gb.add_vertex(render_ref({Role::RightLink, i, j, 0, 0, 0, t}));
        gb.add_edge(prev, w, Rational::pow2(t - 1));
        link.push_back(w);
        prev = w;
      }
      gb.add_edge(prev, R.gadgets[static_cast<size_t>(i - 1) * chi + (j - 1)].anchor[1],
                  Rational::pow2(n - 1));
    }

  R.graph = gb.build();
  R.graph.require_connected();
  return R;
}

std::vector<VertexId> solution_to_centers(const ReducedInstance& R, const gt::GTSolution& sol) {
  const int chi = R.source.chi;
  if (sol.picks.size() != static_cast<size_t>(chi) * chi)
    throw std::invalid_argument("solution_to_centers: pick count does not match the grid");
  std::vector<VertexId> centers;
  for (int i = 1; i <= chi; ++i)
    for (int j = 1; j <= chi; ++j) {
      const gt::Pair& p = sol.pick(chi, i, j);
      const Gadget& g = R.gadget(i, j);
      auto it = g.pair_vertex[0].find(p);
      if (it == g.pair_vertex[0].end())
        throw std::invalid_argument("solution_to_centers: pick " + pair_suffix(p.a, p.b) +
                                    " is not offered by cell " + coords(i, j));
      centers.push_back(g.hub);
      for (int h = 0; h < 4; ++h) centers.push_back(g.pair_vertex[static_cast<size_t>(h)].at(p));
    }
  return centers;
}

Extraction extract_solution(const ReducedInstance& R, const std::vector<VertexId>& centers,
                            const AllPairs* ap) {
  Extraction out;
  auto fail = [&out](std::string why) {
    out.failure = std::move(why);
    return out;
  };

  std::set<VertexId> cset;
  for (VertexId c : centers) {
    if (c < 0 || c >= R.graph.order()) return fail("center id out of range");
    cset.insert(c);
  }
  if (static_cast<int>(cset.size()) > R.k)
    return fail("center set holds " + std::to_string(cset.size()) + " vertices, budget is " +
                std::to_string(R.k));

  std::optional<AllPairs> local;
  if (!ap) {
    local.emplace(R.graph);
    ap = &*local;
  }
  for (VertexId v = 0; v < R.graph.order(); ++v) {
    bool covered = false;
    for (VertexId c : cset)
      if (ap->at(c, v) <= R.radius) {
        covered = true;
        break;
      }
    if (!covered)
      return fail("vertex '" + R.graph.label(v) + "' is not within the radius of any center");
  }

  const int chi = R.source.chi;
  std::vector<std::array<std::optional<gt::Pair>, 4>> chosen(static_cast<size_t>(chi) * chi);
  for (VertexId c : cset) {
    VertexRef ref = R.ref_of(c);
    if (ref.role == Role::Hub) continue;
    if (ref.role != Role::PairVertex)
      return fail("center '" + R.graph.label(c) + "' is neither a hub nor a pair vertex");
    auto& slot = chosen[static_cast<size_t>(ref.i - 1) * chi + (ref.j - 1)]
                       [static_cast<size_t>(ref.h - 1)];
    if (slot)
      return fail("quadrant " + std::to_string(ref.h) + " of gadget " + coords(ref.i, ref.j) +
                  " holds two centers");
    slot = gt::Pair{ref.a, ref.b};
  }
  for (int i = 1; i <= chi; ++i)
    for (int j = 1; j <= chi; ++j)
      if (!cset.count(R.gadget(i, j).hub))
        return fail("hub 'y" + coords(i, j) + "' is not a center");

  gt::GTSolution sol;
  for (int i = 1; i <= chi; ++i)
    for (int j = 1; j <= chi; ++j) {
      const auto& slots = chosen[static_cast<size_t>(i - 1) * chi + (j - 1)];
      for (int h = 0; h < 4; ++h)
        if (!slots[static_cast<size_t>(h)])
          return fail("quadrant " + std::to_string(h + 1) + " of gadget " + coords(i, j) +
                      " has no pair-vertex center");
      for (int h = 1; h < 4; ++h)
        if (*slots[static_cast<size_t>(h)] != *slots[0])
          return fail("gadget " + coords(i, j) + " quadrant centers pick different pairs");
      sol.picks.push_back(*slots[0]);
    }
  out.solution = std::move(sol);
  return out;
}

void write_reduction(const ReducedInstance& R, std::ostream& os) {
  json doc;
  doc["instance"] = json::parse(gt::instance_to_string(R.source));
  doc["k"] = R.k;
  doc["radius"] = R.radius.str();
  doc["graph"] = json::parse(graph_to_string(R.graph));
  os << doc.dump(2) << "\n";
}

std::string reduction_to_string(const ReducedInstance& R) {
  std::ostringstream ss;
  write_reduction(R, ss);
  return ss.str();
}

ReducedInstance read_reduction(std::istream& is) {
  json doc;
  try {
    is >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("reduction file: bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("instance") || !doc.contains("k") ||
      !doc.contains("radius") || !doc.contains("graph"))
    throw std::invalid_argument("reduction file: instance, k, radius and graph required");
  gt::GTInstance inst = gt::instance_from_string(doc["instance"].dump());
  ReducedInstance R = build_reduction(inst);
  if (doc["k"].get<int>() != R.k ||
      Rational::parse(doc["radius"].get<std::string>()) != R.radius)
    throw std::invalid_argument("reduction file: k or radius does not match its instance");
  Graph stored = graph_from_string(doc["graph"].dump());
  if (graph_to_string(stored) != graph_to_string(R.graph))
    throw std::invalid_argument("reduction file: stored graph does not match its instance");
  return R;
}

ReducedInstance reduction_from_string(const std::string& text) {
  std::istringstream ss(text);
  return read_reduction(ss);
}

void write_reduction_dot(const ReducedInstance& R, std::ostream& os) {
  auto esc = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out;
  };
  os << "graph reduction {\n";
  for (const Gadget& g : R.gadgets) {
    os << "  subgraph cluster_" << g.i << "_" << g.j << " {\n";
    os << "    label=\"gadget (" << g.i << "," << g.j << ")\";\n";
    std::vector<VertexId> members{g.hub};
    for (const CyclePoint& cp : g.cycle) members.push_back(cp.vid);
    for (VertexId a : g.anchor) members.push_back(a);
    for (const auto& lad : g.ladders)
      for (VertexId u : lad) members.push_back(u);
    std::sort(members.begin(), members.end());
    for (VertexId v : members)
      os << "    n" << v << " [label=\"" << esc(R.graph.label(v)) << "\"];\n";
    os << "  }\n";
  }
  for (const auto& link : R.down_links)
    for (VertexId v : link) os << "  n" << v << " [label=\"" << esc(R.graph.label(v)) << "\"];\n";
  for (const auto& link : R.right_links)
    for (VertexId v : link) os << "  n" << v << " [label=\"" << esc(R.graph.label(v)) << "\"];\n";
  for (const Edge& e : R.graph.edges())
    os << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.len.str() << "\"];\n";
  os << "}\n";
}

}  // namespace kclab::red
