#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"
#include "reeb/smoothing.hpp"

namespace reeb::testing {

struct GraphOptions {
  std::size_t min_vertices = 4;
  std::size_t max_vertices = 12;
  double value_lo = 0.0;
  double value_hi = 10.0;
  double min_gap = 1e-3; // keeps value collisions away from the tolerance
};

// Random generic (function- and Morse-generic) Reeb graph, built bottom-up by
// choosing a vertex type per level and wiring open strands. Components always
// contain at least one edge.
inline ReebGraph random_generic_graph(std::mt19937_64& rng,
                                      const GraphOptions& options = {}) {
  // Every Morse-generic Reeb graph has an even vertex count: each vertex
  // changes the open-strand count by exactly one.
  std::uniform_int_distribution<std::size_t> size_dist(options.min_vertices,
                                                       options.max_vertices);
  std::size_t n = size_dist(rng);
  if (n % 2 == 1) n = (n + 1 <= options.max_vertices) ? n + 1 : n - 1;

  std::uniform_real_distribution<double> value_dist(options.value_lo, options.value_hi);
  std::vector<double> values;
  while (true) {
    values.clear();
    for (std::size_t i = 0; i < n; ++i) values.push_back(value_dist(rng));
    std::sort(values.begin(), values.end());
    bool separated = true;
    for (std::size_t i = 1; i < n; ++i)
      if (values[i] - values[i - 1] < options.min_gap) separated = false;
    if (separated) break;
  }

  enum class Type { Min, Max, UpFork, DownFork };
  ReebGraph g;
  std::vector<VertexId> strand_origin; // open strands awaiting an upper endpoint
  for (std::size_t i = 0; i < n; ++i) {
    VertexId id = "v" + std::to_string(i);
    g.add_vertex(id, values[i]);
    std::size_t open = strand_origin.size();
    std::size_t remaining = n - 1 - i;
    auto feasible = [&](std::size_t open_after) {
      return open_after <= remaining && (remaining - open_after) % 2 == 0;
    };
    std::vector<Type> menu;
    if (feasible(open + 1)) menu.push_back(Type::Min);
    if (open >= 1 && feasible(open - 1)) menu.push_back(Type::Max);
    if (open >= 1 && feasible(open + 1)) menu.push_back(Type::UpFork);
    if (open >= 2 && feasible(open - 1)) menu.push_back(Type::DownFork);
    if (menu.empty()) throw std::logic_error("random_generic_graph: no feasible type");
    Type type = menu[std::uniform_int_distribution<std::size_t>(0, menu.size() - 1)(rng)];

    auto take_strand = [&]() {
      std::uniform_int_distribution<std::size_t> pick(0, strand_origin.size() - 1);
      std::size_t k = pick(rng);
      VertexId origin = strand_origin[k];
      strand_origin.erase(strand_origin.begin() + static_cast<std::ptrdiff_t>(k));
      return origin;
    };
    switch (type) {
      case Type::Min:
        strand_origin.push_back(id);
        break;
      case Type::Max:
        g.add_edge(take_strand(), id);
        break;
      case Type::UpFork:
        g.add_edge(take_strand(), id);
        strand_origin.push_back(id);
        strand_origin.push_back(id);
        break;
      case Type::DownFork:
        g.add_edge(take_strand(), id);
        g.add_edge(take_strand(), id);
        strand_origin.push_back(id);
        break;
    }
  }
  return g;
}

// Random parameters with tau <= 2*epsilon (the closed boundary included).
inline TransportParams random_params(std::mt19937_64& rng, double eps_lo = 0.05,
                                     double eps_hi = 2.0) {
  std::uniform_real_distribution<double> eps_dist(eps_lo, eps_hi);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  double eps = eps_dist(rng);
  return {eps, frac(rng) * 2.0 * eps};
}

inline ExtendedDiagram random_diagram(std::mt19937_64& rng,
                                      std::size_t max_per_kind = 6) {
  std::uniform_real_distribution<double> low_dist(0.0, 10.0);
  std::uniform_real_distribution<double> life_dist(0.1, 5.0);
  ExtendedDiagram d;
  for (PairKind kind : kAllKinds) {
    std::uniform_int_distribution<std::size_t> count_dist(0, max_per_kind);
    std::size_t count = count_dist(rng);
    for (std::size_t i = 0; i < count; ++i) {
      double low = low_dist(rng);
      d.add(kind, low, low + life_dist(rng));
    }
  }
  return d;
}

inline ExtendedDiagram random_single_kind_diagram(std::mt19937_64& rng,
                                                  std::size_t min_points = 1,
                                                  std::size_t max_points = 8) {
  std::uniform_int_distribution<std::size_t> kind_dist(0, 3);
  PairKind kind = kAllKinds[kind_dist(rng)];
  std::uniform_int_distribution<std::size_t> count_dist(min_points, max_points);
  std::uniform_real_distribution<double> low_dist(0.0, 10.0);
  std::uniform_real_distribution<double> life_dist(0.2, 5.0);
  ExtendedDiagram d;
  std::size_t count = count_dist(rng);
  for (std::size_t i = 0; i < count; ++i) {
    double low = low_dist(rng);
    d.add(kind, low, low + life_dist(rng));
  }
  return d;
}

} // namespace reeb::testing
