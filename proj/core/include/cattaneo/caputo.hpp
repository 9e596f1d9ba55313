#pragma once

#include "cattaneo/grid_function.hpp"

namespace cattaneo::transforms {

/// L1 discretization of the Caputo derivative of order alpha in (0,1) with
/// base point f.x0. The result lives on the same grid and is 0 at the first
/// node. Needs at least 4 points.
GridFunction caputo_l1(const GridFunction& f, double alpha);

/// (lambda + d/dx)^alpha f = e^{-lambda x} D^alpha [e^{lambda x} f], with x
/// measured from the base point. lambda = 0 returns caputo_l1(f, alpha).
GridFunction shifted_caputo(const GridFunction& f, double alpha, double lambda);

}  // namespace cattaneo::transforms
