#include "doctest.h"

#include <random>

#include "reeb/graph.hpp"
#include "support/fixtures.hpp"
#include "support/random_inputs.hpp"

using namespace reeb;
using namespace reeb::testing;

TEST_CASE("validate accepts a minimal well-formed graph") {
  ReebGraph g = make_edge();
  CHECK(validate(g).valid());
}

TEST_CASE("validate flags equal adjacent values") {
  ReebGraph g;
  g.add_vertex("v1", 0.0);
  g.add_vertex("v2", 0.0);
  g.add_edge("v1", "v2");
  auto report = validate(g);
  REQUIRE_FALSE(report.valid());
  CHECK(report.violations.front().kind == Violation::Kind::HorizontalEdge);
}

TEST_CASE("validate flags unknown endpoints and self-loops") {
  ReebGraph g;
  g.add_vertex("v1", 0.0);
  g.add_edge("v1", "v9");
  auto report = validate(g);
  REQUIRE_FALSE(report.valid());
  CHECK(report.violations.front().kind == Violation::Kind::UnknownEndpoint);

  ReebGraph loop;
  loop.add_vertex("v1", 0.0);
  loop.add_edge("v1", "v1");
  CHECK_FALSE(validate(loop).valid());
}

TEST_CASE("classify counts degrees over multiplicity") {
  ReebGraph g2 = make_g2();
  VertexClass at1 = classify(g2, "b");
  CHECK(at1.down_degree == 1);
  CHECK(at1.up_degree == 2);
  CHECK(at1.up_fork());

  VertexClass at0 = classify(g2, "a");
  CHECK(at0.down_degree == 0);
  CHECK(at0.up_degree == 1);
  CHECK(at0.local_min());

  VertexClass at3 = classify(g2, "c");
  CHECK(at3.down_degree == 2);
  CHECK(at3.up_degree == 1);
  CHECK(at3.down_fork());

  CHECK_THROWS_AS(classify(g2, "nope"), std::invalid_argument);
}

TEST_CASE("genericity") {
  auto flags = genericity(make_g2());
  CHECK(flags.function_generic);
  CHECK(flags.morse_generic);

  ReebGraph dup;
  dup.add_vertex("m1", 0.0);
  dup.add_vertex("m2", 0.0);
  dup.add_vertex("t", 1.0);
  dup.add_edge("m1", "t");
  dup.add_edge("m2", "t");
  CHECK_FALSE(genericity(dup).function_generic);

  ReebGraph x; // a (2,2) vertex
  x.add_vertex("a", 0.0);
  x.add_vertex("b", 0.5);
  x.add_vertex("m", 1.0);
  x.add_vertex("c", 2.0);
  x.add_vertex("d", 2.5);
  x.add_edge("a", "m");
  x.add_edge("b", "m");
  x.add_edge("m", "c");
  x.add_edge("m", "d");
  CHECK_FALSE(genericity(x).morse_generic);
}

TEST_CASE("suppress_regular splices chains") {
  ReebGraph path;
  path.add_vertex("a", 0.0);
  path.add_vertex("b", 1.0);
  path.add_vertex("c", 2.0);
  path.add_edge("a", "b");
  path.add_edge("b", "c");
  ReebGraph reduced = suppress_regular(path);
  CHECK(reduced.vertex_count() == 2);
  CHECK(reduced.edge_count() == 1);
  CHECK(structurally_equal(reduced, make_edge(0.0, 2.0)));

  ReebGraph chain;
  chain.add_vertex("a", 0.0);
  chain.add_vertex("b", 1.0);
  chain.add_vertex("c", 2.0);
  chain.add_vertex("d", 3.0);
  chain.add_edge("a", "b");
  chain.add_edge("b", "c");
  chain.add_edge("c", "d");
  CHECK(structurally_equal(suppress_regular(chain), make_edge(0.0, 3.0)));

  ReebGraph g2 = make_g2();
  CHECK(structurally_equal(suppress_regular(g2), g2));
}

TEST_CASE("betti on fixtures") {
  CHECK(betti(make_g2()) == BettiNumbers{1, 1});
  CHECK(betti(ReebGraph{}) == BettiNumbers{0, 0});

  ReebGraph two;
  two.add_vertex("a", 0.0);
  two.add_vertex("b", 1.0);
  two.add_vertex("c", 5.0);
  two.add_vertex("d", 6.0);
  two.add_edge("a", "b");
  two.add_edge("c", "d");
  CHECK(betti(two) == BettiNumbers{2, 0});
}

TEST_CASE("suppress_regular is idempotent and preserves betti") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 50; ++trial) {
    ReebGraph g = random_generic_graph(rng);
    ReebGraph once = suppress_regular(g);
    CHECK(structurally_equal(once, suppress_regular(once)));
    CHECK(betti(g) == betti(once));
  }
}

TEST_CASE("structural equality is id-independent") {
  ReebGraph a = make_g2();
  ReebGraph b;
  b.add_vertex("x3", 3.0);
  b.add_vertex("x0", 0.0);
  b.add_vertex("x4", 4.0);
  b.add_vertex("x1", 1.0);
  b.add_edge("x0", "x1");
  b.add_edge("x1", "x3", 2);
  b.add_edge("x3", "x4");
  CHECK(structurally_equal(a, b));
  CHECK_FALSE(structurally_equal(a, make_g4()));
}
