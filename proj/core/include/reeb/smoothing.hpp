#pragma once

#include <map>
#include <vector>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"

namespace reeb {

/// The (epsilon, tau) pair driving truncated smoothing and diagram transport;
/// composition requires 0 <= tau <= 2*epsilon.
struct TransportParams {
  double epsilon = 0.0;
  double tau = 0.0;
};

void require_valid_params(const TransportParams& p, double tol = kDefaultTolerance);

/// Per-vertex monotone reach: the extreme values attainable by monotone
/// increasing (up_reach) and decreasing (down_reach) paths from the vertex.
struct ReachTable {
  std::map<VertexId, double> up_reach;
  std::map<VertexId, double> down_reach;
};

ReachTable reach_table(const ReebGraph& g, double tol = kDefaultTolerance);

/// The epsilon-smoothing: the Reeb graph of (X x [-eps, eps], f + t), built
/// combinatorially by sampling band components at the candidate levels
/// {a_i +- eps} and their midpoints, gluing adjacent samples through the
/// inclusion into the union band, and suppressing regular vertices.
/// eps == 0 returns suppress_regular(g).
ReebGraph smooth(const ReebGraph& g, double epsilon, double tol = kDefaultTolerance);

/// The tau-truncation: removes every point lacking a height-tau monotone
/// up-path or down-path. Edge sub-intervals that survive get clip vertices at
/// the cut values; the result may be empty.
ReebGraph truncate(const ReebGraph& g, double tau, double tol = kDefaultTolerance);

/// truncate(smooth(g, eps), tau), valid for 0 <= tau <= 2*eps.
ReebGraph truncated_smooth(const ReebGraph& g, const TransportParams& params,
                           double tol = kDefaultTolerance);

/// The critical-value multiset the transported diagram predicts for
/// S_eps^tau: both coordinates of every surviving transported pair.
std::vector<double> predict_critical_values(const ExtendedDiagram& d,
                                            const TransportParams& params,
                                            double tol = kDefaultTolerance);

/// Critical value pairs violating 2*eps != |a_i - a_j|, the hypothesis under
/// which the smoothed critical set is exactly the predicted one.
struct GuardReport {
  std::vector<std::pair<double, double>> violations;
  bool ok() const { return violations.empty(); }
};

GuardReport genericity_guard(const ReebGraph& g, double epsilon,
                             double tol = kDefaultTolerance);

} // namespace reeb
