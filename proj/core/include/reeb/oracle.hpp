#pragma once

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"

namespace reeb {

/// Extended persistence diagram computed by explicit boundary-matrix reduction
/// over the two-pass filtration: ascending sublevel insertion of vertices and
/// edges, then descending insertion of the cone cells (apex, cone edges, cone
/// triangles), which realizes the relative half. Slow path, kept independent
/// of extended_diagram and authoritative for tests.
ExtendedDiagram extended_diagram_oracle(const ReebGraph& g,
                                        double tol = kDefaultTolerance);

} // namespace reeb
