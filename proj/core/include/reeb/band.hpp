#pragma once

#include <map>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

// An element of a band: either a vertex whose value lies in the interval, or
// one copy of an edge whose value span intersects it.
struct BandElement {
  enum class Type { Vertex, Edge };
  Type type = Type::Vertex;
  VertexId a; // vertex id, or lower-keyed edge endpoint
  VertexId b; // empty for vertices
  int copy = 0;

  auto operator<=>(const BandElement&) const = default;
};

inline BandElement vertex_element(VertexId id) {
  return BandElement{BandElement::Type::Vertex, std::move(id), {}, 0};
}
inline BandElement edge_element(const EdgeKey& key, int copy) {
  return BandElement{BandElement::Type::Edge, key.a, key.b, copy};
}

/// Connected components of f^{-1}([lo, hi]). Two elements share a label iff
/// they are connected within the band; an edge is unioned with an endpoint iff
/// that endpoint's value lies in the interval. Labels are assigned by sorting
/// components on their minimal element, so re-runs are stable.
struct BandPartition {
  double lo = 0.0;
  double hi = 0.0;
  std::map<BandElement, int> component_of;
  int component_count = 0;

  int label(const BandElement& e) const { return component_of.at(e); }
};

BandPartition band_components(const ReebGraph& g, double lo, double hi,
                              double tol = kDefaultTolerance);

// Maps each component of `inner` to the component of `outer` containing its
// elements. Requires inner's interval nested in outer's and both partitions
// computed on the same graph.
std::map<int, int> band_inclusion(const ReebGraph& g, const BandPartition& inner,
                                  const BandPartition& outer,
                                  double tol = kDefaultTolerance);

} // namespace reeb
