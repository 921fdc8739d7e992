#pragma once

#include "reeb/graph.hpp"

namespace reeb::testing {

// Single loop: min 0, up fork 1, down fork 3 (parallel edges between the
// forks), max 4.
inline ReebGraph make_g2() {
  ReebGraph g;
  g.add_vertex("a", 0.0);
  g.add_vertex("b", 1.0);
  g.add_vertex("c", 3.0);
  g.add_vertex("d", 4.0);
  g.add_edge("a", "b");
  g.add_edge("b", "c", 2);
  g.add_edge("c", "d");
  return g;
}

// Two minima merging at an ordinary down fork: mins 0 and 2, fork 3, max 5.
inline ReebGraph make_g4() {
  ReebGraph g;
  g.add_vertex("a", 0.0);
  g.add_vertex("b", 2.0);
  g.add_vertex("c", 3.0);
  g.add_vertex("d", 5.0);
  g.add_edge("a", "c");
  g.add_edge("b", "c");
  g.add_edge("c", "d");
  return g;
}

// Nested loops: min 0, up forks 1 and 2, down forks 3 and 4, max 5. The inner
// loop runs 2..3 over parallel edges, the outer loop 1..4.
inline ReebGraph make_g5() {
  ReebGraph g;
  g.add_vertex("a", 0.0);
  g.add_vertex("b", 1.0);
  g.add_vertex("c", 2.0);
  g.add_vertex("d", 3.0);
  g.add_vertex("e", 4.0);
  g.add_vertex("f", 5.0);
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("c", "d", 2);
  g.add_edge("d", "e");
  g.add_edge("b", "e");
  g.add_edge("e", "f");
  return g;
}

// Single edge from lo to hi.
inline ReebGraph make_edge(double lo = 0.0, double hi = 1.0) {
  ReebGraph g;
  g.add_vertex("lo", lo);
  g.add_vertex("hi", hi);
  g.add_edge("lo", "hi");
  return g;
}

} // namespace reeb::testing
