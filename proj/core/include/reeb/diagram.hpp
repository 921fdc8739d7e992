#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

// The four sub-diagrams of extended persistence.
enum class PairKind { Ext0, Ord0, Rel1, Ext1 };

inline constexpr PairKind kAllKinds[] = {PairKind::Ext0, PairKind::Ord0,
                                         PairKind::Rel1, PairKind::Ext1};

std::string kind_name(PairKind k);
std::optional<PairKind> kind_from_name(const std::string& name);

/// One off-diagonal persistence point, stored as (low, high) with low < high
/// regardless of plotting convention. Provenance records the vertices that
/// produced the pair when known.
struct PersistencePair {
  PairKind kind = PairKind::Ext0;
  double low = 0.0;
  double high = 0.0;
  std::optional<VertexId> low_vertex;
  std::optional<VertexId> high_vertex;

  double lifetime() const { return high - low; }
  // L-infinity distance from the diagonal.
  double diagonal_distance() const { return (high - low) / 2.0; }
};

inline double linf_distance(const PersistencePair& a, const PersistencePair& b) {
  return std::max(std::fabs(a.low - b.low), std::fabs(a.high - b.high));
}

/// A multiset of typed persistence pairs. Diagonal points are implicit and
/// never stored.
struct ExtendedDiagram {
  std::vector<PersistencePair> points;

  void add(PersistencePair p) { points.push_back(std::move(p)); }
  void add(PairKind kind, double low, double high) {
    points.push_back(PersistencePair{kind, low, high, std::nullopt, std::nullopt});
  }
  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  std::vector<PersistencePair> of_kind(PairKind k) const;
  std::size_t count(PairKind k) const { return of_kind(k).size(); }
};

// Kind-wise multiset equality: per kind, a bijection with coordinatewise
// distance <= tol must exist; points are compared in sorted order.
bool diagram_equal(const ExtendedDiagram& a, const ExtendedDiagram& b,
                   double tol = kDefaultTolerance);

// Sorted (kind, low, high) view used for deterministic output and comparison.
std::vector<PersistencePair> sorted_points(const ExtendedDiagram& d);

} // namespace reeb
