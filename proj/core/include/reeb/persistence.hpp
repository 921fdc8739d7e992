#pragma once

#include <optional>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"

namespace reeb {

/// Extended persistence diagram of a Reeb graph, computed combinatorially:
///   - Ext0: one pair (global min, global max) per connected component.
///   - Ord0: ascending union-find sweep; each merging down fork pairs with the
///     higher of the two component minima.
///   - Rel1: the mirrored descending sweep over superlevel components.
///   - Ext1: each cycle-closing edge in the ascending sweep pairs the closing
///     down fork with the max-bottleneck value between its branch points (the
///     highest value v such that the branches connect through f >= v).
/// Value ties are broken by vertex id; pairs landing on the diagonal are not
/// stored. Provenance vertex ids are attached where defined.
ExtendedDiagram extended_diagram(const ReebGraph& g, double tol = kDefaultTolerance);

/// Partner value for a down fork: the highest bottleneck over paths joining
/// its lower branch points inside the open sublevel set, or nullopt when the
/// fork is ordinary (branches in distinct sublevel components). Throws when
/// the vertex is not a down fork.
std::optional<double> ext1_partner(const ReebGraph& g, const VertexId& downfork,
                                   double tol = kDefaultTolerance);

} // namespace reeb
