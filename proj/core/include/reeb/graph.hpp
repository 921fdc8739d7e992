#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reeb/tolerance.hpp"

namespace reeb {

using VertexId = std::string;

// Unordered vertex pair, stored with the lexicographically smaller id first.
struct EdgeKey {
  VertexId a;
  VertexId b;
  auto operator<=>(const EdgeKey&) const = default;
};

inline EdgeKey make_edge_key(VertexId u, VertexId v) {
  if (v < u) std::swap(u, v);
  return EdgeKey{std::move(u), std::move(v)};
}

/// A Reeb graph: finite multigraph with a real function value per vertex and
/// edges monotone in value. The container itself is permissive (so that
/// malformed input can be loaded and reported); validate() checks the
/// structural invariants.
class ReebGraph {
public:
  void add_vertex(const VertexId& id, double value);
  // Accumulates multiplicity; endpoints need not exist yet (validate reports).
  void add_edge(const VertexId& u, const VertexId& v, int multiplicity = 1);
  void remove_vertex(const VertexId& id); // drops incident edges
  void remove_edge(const VertexId& u, const VertexId& v, int multiplicity = 1);

  bool has_vertex(const VertexId& id) const { return vertices_.count(id) > 0; }
  double value(const VertexId& id) const;

  const std::map<VertexId, double>& vertices() const { return vertices_; }
  const std::map<EdgeKey, int>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const; // counts multiplicity
  bool empty() const { return vertices_.empty(); }

private:
  std::map<VertexId, double> vertices_;
  std::map<EdgeKey, int> edges_;
};

struct Violation {
  enum class Kind { UnknownEndpoint, HorizontalEdge, SelfLoop, NonFiniteValue };
  Kind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const ReebGraph& g, double tol = kDefaultTolerance);

// Throws Error when the graph fails validation; used by operations whose
// precondition is a valid graph.
void require_valid(const ReebGraph& g, double tol = kDefaultTolerance);

struct VertexClass {
  int down_degree = 0;
  int up_degree = 0;

  bool local_min() const { return down_degree == 0; }
  bool local_max() const { return up_degree == 0; }
  bool up_fork() const { return up_degree >= 2; }
  bool down_fork() const { return down_degree >= 2; }
  bool regular() const { return down_degree == 1 && up_degree == 1; }
};

// Degrees counted over edge multiplicity. Throws on unknown vertex.
VertexClass classify(const ReebGraph& g, const VertexId& v);

struct GenericityFlags {
  bool function_generic = false; // all vertex values pairwise distinct
  bool morse_generic = false;    // every vertex one of (0,1),(1,2),(2,1),(1,0)
  bool generic() const { return function_generic && morse_generic; }
};

GenericityFlags genericity(const ReebGraph& g, double tol = kDefaultTolerance);

// Splices out every vertex of down-degree 1 and up-degree 1. Idempotent and
// realizes the same quotient space; surviving vertices keep their ids.
ReebGraph suppress_regular(const ReebGraph& g, double tol = kDefaultTolerance);

struct BettiNumbers {
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  bool operator==(const BettiNumbers&) const = default;
};

BettiNumbers betti(const ReebGraph& g, double tol = kDefaultTolerance);

// Structural equality up to vertex-id renaming: both graphs are put in a
// canonical vertex order keyed by (value, degree profile, neighbor value
// multiset, id) and compared position-wise.
bool structurally_equal(const ReebGraph& a, const ReebGraph& b,
                        double tol = kDefaultTolerance);

// Neighbors of v with strictly lower / higher value, repeated per multiplicity.
std::vector<VertexId> lower_neighbors(const ReebGraph& g, const VertexId& v);
std::vector<VertexId> upper_neighbors(const ReebGraph& g, const VertexId& v);

} // namespace reeb
