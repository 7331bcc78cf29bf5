#pragma once

#include "kclab/reduction.hpp"
#include "kclab/shortest_paths.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kclab::chk {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // first failure, with vertices and exact values
};

struct StructureReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(std::string_view name) const;  // nullptr if unknown
  std::string summary() const;                           // one line per check
};

/*
 * Distance-level audit of a reduced graph. Every check recomputes shortest
 * paths and compares against the closed forms the construction promises:
 *
 *   k-and-radius      k = 5*chi^2 and radius = 2^{n+1}
 *   edge-lengths      all edge lengths positive, denominators divide n(n+1)
 *   anchor-distances  dist(x^h, v^h_(a,b)) matches anchor_distance for all pairs
 *   quadrant-spacing  dist(v^h_p, v^{h+1}_p) = 2^{n+2} + 1/n
 *   sentinel-spacing  dist(twin^h_p, sentinel^{h+1}_p) = 2^{n+2}
 *   ladder-anchor     dist(u_b, x^h) = 2^{n+1} - 2^b on both ladder sides
 *   portal-entry      canonical paths from pair vertices enter ladders through
 *                     the portal predicted_portal names
 *   hub-isolation     the nearest non-hub vertex sits at exactly 2^{n+1} + 1
 *   hub-anchor        dist(y, x^1) = 2^{n+2}+2, dist(y, x^4) = 2^{n+2}+1,
 *                     dist(y, x^3) = 2^{n+2}+1+2a/n (a = least first component
 *                     in column 1), dist(y, x^2) = 2^{n+1}+2^n+2^{b+1}+2a/n
 *                     for the offset-least pair (a,b)
 *   hub-hub           adjacent hubs: down 2^{n+3}+4+2a/n, right
 *                     2^{n+3}+2^{b+1}+2a/n-1, parameters read off the upper
 *                     resp. left gadget as in hub-anchor
 *   anchor-separation 2^{n+2}+2^n < dist(x^h, x^{h'}) <= 2^{n+3}+2^{n+1}+4
 *   anchor-to-hub     dist(x^h, y) <= 2^{n+2} + 2^n + 2
 *   coverage-radius   every vertex is within 2^{n+2}+2^{n+1} of some hub
 *
 * Failures carry the first offending witness; the report never stops early,
 * so one corrupted edge can surface in several checks at once.
 */
StructureReport verify_structure(const red::ReducedInstance& R, const AllPairs& ap);
StructureReport verify_structure(const red::ReducedInstance& R);

// Copy of R whose edge `edge` is longer by `delta` (resulting length must
// stay positive). Vertex ids and labels are unchanged, so the gadget tables
// of the copy remain valid. This is the fault-injection hook the self-tests
// use to prove the checks above are not vacuous.
red::ReducedInstance corrupt_edge(const red::ReducedInstance& R, int edge, const Rational& delta);

}  // namespace kclab::chk
