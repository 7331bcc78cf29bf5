#include "doctest.h"

#include "kclab/pathdecomp.hpp"
#include "support.hpp"

#include <map>
#include <set>

using namespace kclab;
using namespace kclab::pd;
using testsupport::cycle_graph;
using testsupport::path_graph;

namespace {

red::ReducedInstance t1() {
  return red::build_reduction(gt::make_instance(1, 2, {{{1, 1}, {2, 2}}}));
}

red::ReducedInstance quad() {
  auto cells = std::vector<std::vector<gt::Pair>>(4, {{1, 1}, {2, 2}});
  return red::build_reduction(gt::make_instance(2, 2, cells));
}

Graph labeled_path3() {
  GraphBuilder b;
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_vertex("c");
  b.add_edge(0, 1, Rational(1));
  b.add_edge(1, 2, Rational(3, 2));
  return b.build();
}

}  // namespace

TEST_CASE("suppressing inner vertices merges their edges") {
  auto p3 = labeled_path3();
  auto c = contract_degree2(p3, {});
  CHECK(c.graph.order() == 2);
  CHECK(c.graph.size() == 1);
  CHECK(c.graph.edge(0).len == Rational(5, 2));
  CHECK(c.graph.label(0) == "a");
  CHECK(c.graph.label(1) == "c");
  CHECK(c.new_id[1] == -1);

  auto keep_all = contract_degree2(p3, {0, 1, 2});
  CHECK(keep_all.graph.order() == 3);
  CHECK(keep_all.graph.size() == 2);

  auto c4 = cycle_graph(4);
  auto tri = contract_degree2(c4, {0, 1, 2});
  CHECK(tri.graph.order() == 3);
  CHECK(tri.graph.size() == 3);
  Rational longest(0);
  for (const Edge& e : tri.graph.edges()) longest = max(longest, e.len);
  CHECK(longest == Rational(2));

  CHECK_THROWS_AS(contract_degree2(c4, {}), std::logic_error);
  CHECK_THROWS_AS(contract_degree2(p3, {7}), std::invalid_argument);
}

TEST_CASE("the contracted gadget keeps corners portals and anchors") {
  auto R = t1();
  auto c = contract_degree2(R);
  CHECK(c.graph.order() == 17);
  CHECK(c.graph.size() == 22);
  c.graph.require_connected();

  std::map<red::Role, int> census;
  for (VertexId v = 0; v < c.graph.order(); ++v)
    ++census[red::parse_ref(c.graph.label(v)).role];
  CHECK(census[red::Role::Hub] == 1);
  CHECK(census[red::Role::Corner] == 4);
  CHECK(census[red::Role::PairVertex] == 6);  // portals of both sides plus the two anchored pairs
  CHECK(census[red::Role::Anchor] == 4);
  CHECK(census[red::Role::Ladder] == 2);
  CHECK(census[red::Role::Sentinel] == 0);
  CHECK(census[red::Role::SentinelTwin] == 0);
  for (VertexId v = 0; v < c.graph.order(); ++v) {
    auto ref = red::parse_ref(c.graph.label(v));
    if (ref.role == red::Role::Ladder) CHECK(ref.t == 2);  // u1 has degree two and dissolves
  }
}

TEST_CASE("bag sequences pass their own validity check") {
  auto p3 = labeled_path3();
  PathDecomposition good{{{0, 1}, {1, 2}}, 1};
  auto ok = verify_path_decomposition(p3, good);
  CHECK(ok.valid);
  CHECK(ok.width == 1);

  PathDecomposition one_bag{{{0, 1, 2}}, 2};
  CHECK(verify_path_decomposition(p3, one_bag).valid);
  CHECK(verify_path_decomposition(p3, one_bag).width == 2);

  PathDecomposition missing_edge{{{0, 1}, {1}, {2}}, 1};
  auto bad = verify_path_decomposition(p3, missing_edge);
  CHECK_FALSE(bad.valid);
  CHECK(bad.violation == "edge b -- c is in no bag");

  PathDecomposition gap{{{0, 1}, {1}, {0, 1, 2}}, 2};
  auto skipped = verify_path_decomposition(p3, gap);
  CHECK_FALSE(skipped.valid);
  CHECK(skipped.violation == "vertex a skips bag 1");

  PathDecomposition rogue{{{0, 9}}, 1};
  CHECK_FALSE(verify_path_decomposition(p3, rogue).valid);
}

TEST_CASE("gadget blocks assemble into a bounded-width decomposition") {
  auto R = t1();
  auto built = build_path_decomposition(R);
  CHECK(built.pd.width == 8);
  CHECK(built.pd.width <= 9 + 4 * 1);
  CHECK(built.pd.bags.size() == 8);
  auto check1 = verify_path_decomposition(built.contraction.graph, built.pd);
  INFO(check1.violation);
  CHECK(check1.valid);
  CHECK(check1.width == built.pd.width);

  auto R4 = quad();
  auto built4 = build_path_decomposition(R4);
  CHECK(built4.pd.width == 16);
  CHECK(built4.pd.width <= 9 + 4 * 2);
  CHECK(built4.pd.bags.size() == 32);
  auto check4 = verify_path_decomposition(built4.contraction.graph, built4.pd);
  INFO(check4.violation);
  CHECK(check4.valid);

  // the first block carries the anchors of the next two gadgets
  const auto& first_bag = built4.pd.bags.front();
  for (int follow : {1, 2})  // row-major gadget indices (1,2) and (2,1)
    for (int h = 0; h < 4; ++h) {
      VertexId a = built4.contraction.new_id[static_cast<size_t>(
          R4.gadgets[static_cast<size_t>(follow)].anchor[static_cast<size_t>(h)])];
      CHECK(std::find(first_bag.begin(), first_bag.end(), a) != first_bag.end());
    }
}

TEST_CASE("tiny exact pathwidth agrees with hand values") {
  CHECK(pathwidth_exact_tiny(path_graph(5)) == 1);
  CHECK(pathwidth_exact_tiny(cycle_graph(6)) == 2);

  GraphBuilder k4;
  for (int i = 0; i < 4; ++i) k4.add_vertex();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j, Rational(1));
  CHECK(pathwidth_exact_tiny(k4.build()) == 3);

  GraphBuilder lone;
  lone.add_vertex("v");
  CHECK(pathwidth_exact_tiny(lone.build()) == 0);

  GraphBuilder pairs;
  for (int i = 0; i < 4; ++i) pairs.add_vertex();
  pairs.add_edge(0, 1, Rational(1));
  pairs.add_edge(2, 3, Rational(1));
  CHECK(pathwidth_exact_tiny(pairs.build()) == 1);

  CHECK_THROWS_AS(pathwidth_exact_tiny(path_graph(21)), std::invalid_argument);
}

TEST_CASE("exact pathwidth of a contracted gadget stays under the constructive width") {
  auto R = t1();
  auto built = build_path_decomposition(R);
  int exact = pathwidth_exact_tiny(built.contraction.graph);
  CHECK(exact == 3);
  CHECK(exact <= built.pd.width);
}
