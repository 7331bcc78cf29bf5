#pragma once

#include "kclab/rational.hpp"
#include "kclab/reduction.hpp"

namespace kclab::win {

/*
 * Grid window of a reduced graph: the gadgets whose cell index is within
 * Manhattan distance d of (i,j), clipped to the grid, plus every connector
 * path whose two end gadgets both lie inside. window_diameter builds that
 * subgraph and returns its exact diameter, with distances measured inside
 * the window (leaving it could only shorten paths, so this upper-bounds
 * the induced metric's diameter).
 */
Rational window_diameter(const red::ReducedInstance& R, int i, int j, int d);

}  // namespace kclab::win
