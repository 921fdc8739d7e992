#pragma once

#include <optional>

#include "reeb/diagram.hpp"
#include "reeb/smoothing.hpp"

namespace reeb {

/// Image of a single pair under truncated smoothing, per its kind:
///   Ext0 (a,b) -> (a-eps+tau, b+eps-tau)    Ord0 (a,b) -> (a-eps+tau, b-eps)
///   Rel1 (a,b) -> (a+eps, b+eps-tau)        Ext1 (a,b) -> (a+eps, b-eps)
/// The point is kept iff it stays strictly above the diagonal; points landing
/// on the diagonal (within tol) are removed.
std::optional<PersistencePair> transport_point(const PersistencePair& p,
                                               const TransportParams& params,
                                               double tol = kDefaultTolerance);

/// Pointwise transport of a whole diagram; removed points are dropped.
ExtendedDiagram transport(const ExtendedDiagram& d, const TransportParams& params,
                          double tol = kDefaultTolerance);

struct MatchAssignment {
  PairKind kind = PairKind::Ext0;
  std::optional<PersistencePair> from; // nullopt = diagonal
  std::optional<PersistencePair> to;   // nullopt = diagonal
  double cost = 0.0;
};

/// A type-preserving matching between two diagrams: every off-diagonal point
/// of both sides appears in exactly one assignment, cross assignments never
/// join different kinds, and cost is the max assignment cost.
struct Matching {
  std::vector<MatchAssignment> assignments;
  double cost = 0.0;
};

struct BottleneckResult {
  double distance = 0.0;
  Matching matching;
};

/// Exact bottleneck distance with a witness matching: per kind, binary search
/// over the candidate distances (pairwise L-inf distances and diagonal
/// distances) with an augmenting-path feasibility matching; the overall
/// distance is the max over kinds.
BottleneckResult bottleneck(const ExtendedDiagram& a, const ExtendedDiagram& b);

/// Per-kind translation vector for single-type diagrams.
struct ShiftVector {
  double dx = 0.0;
  double dy = 0.0;
  double magnitude() const { return std::max(std::fabs(dx), std::fabs(dy)); }
};

/// Largest shift magnitude for which the translate-everything matching is
/// guaranteed bottleneck-optimal:
///   1/2 * min over points x of min(d(x, diagonal), min over y != x of
///   L-inf(x, y)). +infinity for the empty diagram.
double shift_bound(const ExtendedDiagram& single_kind);

/// Translates every point of a single-kind diagram by v. Points crossing or
/// reaching the diagonal are dropped; the returned matching sends survivors
/// to their translates and dropped points to the diagonal.
std::pair<ExtendedDiagram, Matching> shift_diagram(const ExtendedDiagram& single_kind,
                                                   const ShiftVector& v,
                                                   double tol = kDefaultTolerance);

} // namespace reeb
