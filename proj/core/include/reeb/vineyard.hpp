#pragma once

#include <optional>
#include <vector>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"
#include "reeb/smoothing.hpp"

namespace reeb {

/// An ordered diagram sequence, optionally carrying the per-step transport
/// parameters that generated it.
struct Vineyard {
  std::vector<ExtendedDiagram> diagrams;
  std::optional<std::vector<TransportParams>> params;
};

/// A vineyard realized by Reeb graphs: extended_diagram(graphs[i]) matches
/// diagrams[i] and graphs[i+1] = truncated_smooth(graphs[i], params[i]).
struct Realization {
  std::vector<ReebGraph> graphs;
  std::vector<TransportParams> params;
};

/// All verified (epsilon, tau) with transport(d_from, .) = d_to within tol.
/// Candidates come from cross-pair coordinate differences, removal boundary
/// values, and the underdetermined all-Ext0 family; results are sorted by
/// epsilon and deduplicated. Besides the identity pair (0, 0), only pairs with
/// tau < 2*epsilon strictly are reported. Empty result = the step is not
/// admissible.
std::vector<TransportParams> recover_params(const ExtendedDiagram& d_from,
                                            const ExtendedDiagram& d_to,
                                            double tol = kDefaultTolerance);

struct AdmissibilityResult {
  bool admissible = false;
  std::vector<TransportParams> params;  // minimal-epsilon choice per step
  std::optional<std::size_t> failed_step;
};

/// Checks Vineyard admissibility: every consecutive pair must admit a verified
/// (epsilon_i, tau_i) with tau_i < 2*epsilon_i strictly. Identity steps force
/// (0, 0), which violates the strict inequality; `allow_identity` opts in to
/// accepting them.
AdmissibilityResult is_admissible(const Vineyard& v, double tol = kDefaultTolerance,
                                  bool allow_identity = false);

struct RealizeOptions {
  double tol = kDefaultTolerance;
  bool allow_identity = false;
};

/// Builds the Reeb graph sequence realizing an admissible vineyard from the
/// initial graph: folds truncated_smooth over recovered parameters, verifying
/// the diagram at every step (at 10x the value tolerance, absorbing
/// accumulated arithmetic error). Throws Error on initial mismatch or on an
/// unrealizable step.
Realization realize(const ReebGraph& r0, const Vineyard& v,
                    const RealizeOptions& options = {});

/// truncated_smooth(r, (t*epsilon, t*tau)) for t in [0, 1]; t = 0 is
/// suppress_regular(r) and t = 1 the full step.
ReebGraph interpolate(const ReebGraph& r, const TransportParams& params, double t,
                      double tol = kDefaultTolerance);

struct PathSample {
  double time = 0.0;
  ReebGraph graph;
  ExtendedDiagram diagram;
};

/// Uniform interpolation samples along a realization, steps_per_segment >= 1.
std::vector<PathSample> sample_path(const Realization& realization,
                                    std::size_t steps_per_segment,
                                    double tol = kDefaultTolerance);

} // namespace reeb
