#pragma once

#include <string>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"

namespace reeb {

// Deterministic SVG scatter of a diagram: per-kind marker shapes, axes, and
// the diagonal. Byte-identical output for identical input.
std::string plot_diagram(const ExtendedDiagram& d);

// Deterministic SVG drawing of a graph: y is the function value, x comes from
// a barycentric layout; parallel edges bow apart.
std::string plot_graph(const ReebGraph& g, double tol = kDefaultTolerance);

} // namespace reeb
