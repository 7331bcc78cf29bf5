#pragma once

#include "kclab/reduction.hpp"

#include <string>
#include <vector>

namespace kclab::pd {

struct Contraction {
  Graph graph;
  std::vector<VertexId> new_id;  // old vertex -> contracted id, -1 if suppressed
};

/*
 * Suppress every degree-2 vertex outside the keep set, replacing its two
 * edges by one of summed length, until none is left. Labels and the
 * relative order of surviving vertices are preserved. Throws
 * std::logic_error if a contraction step would create a loop or a parallel
 * edge (a cycle with fewer than three survivors).
 */
Contraction contract_degree2(const Graph& g, const std::vector<VertexId>& keep);

// Keep set: the four side anchors of every gadget.
Contraction contract_degree2(const red::ReducedInstance& R);

struct PathDecomposition {
  std::vector<std::vector<VertexId>> bags;  // members sorted within each bag
  int width = 0;                            // largest bag size minus one
};

struct Verification {
  bool valid = false;
  int width = -1;
  std::string violation;  // names the offending vertex or edge
};

// Checks the three defining properties: every vertex in some bag, every
// edge inside some bag, and each vertex's bag indices contiguous.
Verification verify_path_decomposition(const Graph& g, const PathDecomposition& pd);

struct DecompResult {
  Contraction contraction;
  PathDecomposition pd;  // decomposition of contraction.graph
};

/*
 * Constructive decomposition of the contracted reduced graph, one block of
 * bags per gadget in row-major order. Within a block: three-vertex cycle
 * bags, ladder vertices added next to their cycle neighbours, the hub and
 * the four anchors everywhere, plus the anchors of the next chi gadgets so
 * that connector edges stay inside the block. Width is at most 9 + 4*chi.
 */
DecompResult build_path_decomposition(const red::ReducedInstance& R);

/*
 * Exact pathwidth via the vertex separation number, by dynamic programming
 * over vertex subsets. Guarded: throws std::invalid_argument above 20
 * vertices.
 */
int pathwidth_exact_tiny(const Graph& g);

}  // namespace kclab::pd
