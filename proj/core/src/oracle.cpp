#include "reeb/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace reeb {

namespace {

enum class CellType { Apex, Vertex, Edge, ConeEdge, ConeTriangle };

struct Cell {
  CellType type;
  double level = 0.0; // insertion value within its phase
  VertexId anchor;    // vertex id, or the endpoint that sets `level` for edges
  VertexId other;     // second endpoint for edge-backed cells
  int copy = 0;
  std::vector<std::size_t> boundary; // filled after index assignment
};

// Phase-1 order: ascending (level, anchor id, dim, other, copy).
bool ascending_before(const Cell& a, const Cell& b) {
  auto dim = [](const Cell& c) { return c.type == CellType::Vertex ? 0 : 1; };
  return std::tie(a.level, a.anchor) < std::tie(b.level, b.anchor) ||
         (std::tie(a.level, a.anchor) == std::tie(b.level, b.anchor) &&
          std::make_tuple(dim(a), a.other, a.copy) <
              std::make_tuple(dim(b), b.other, b.copy));
}

// Phase-2 order: descending (level, anchor id), then lower dimension first.
bool descending_before(const Cell& a, const Cell& b) {
  auto dim = [](const Cell& c) { return c.type == CellType::ConeEdge ? 1 : 2; };
  if (std::tie(a.level, a.anchor) != std::tie(b.level, b.anchor))
    return std::tie(b.level, b.anchor) < std::tie(a.level, a.anchor);
  return std::make_tuple(dim(a), a.other, a.copy) <
         std::make_tuple(dim(b), b.other, b.copy);
}

std::vector<std::size_t> add_columns(const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

} // namespace

ExtendedDiagram extended_diagram_oracle(const ReebGraph& g, double tol) {
  require_valid(g, tol);
  ExtendedDiagram diagram;
  if (g.empty()) return diagram;

  std::vector<Cell> ascending, descending;
  for (const auto& [id, val] : g.vertices()) {
    ascending.push_back({CellType::Vertex, val, id, {}, 0, {}});
    descending.push_back({CellType::ConeEdge, val, id, {}, 0, {}});
  }
  for (const auto& [key, mult] : g.edges()) {
    double va = g.value(key.a);
    double vb = g.value(key.b);
    const VertexId& lower = va < vb ? key.a : key.b;
    const VertexId& upper = va < vb ? key.b : key.a;
    for (int c = 0; c < mult; ++c) {
      ascending.push_back({CellType::Edge, std::max(va, vb), upper, lower, c, {}});
      descending.push_back({CellType::ConeTriangle, std::min(va, vb), lower, upper, c, {}});
    }
  }
  std::sort(ascending.begin(), ascending.end(), ascending_before);
  std::sort(descending.begin(), descending.end(), descending_before);

  std::vector<Cell> cells;
  cells.push_back({CellType::Apex, 0.0, {}, {}, 0, {}});
  cells.insert(cells.end(), ascending.begin(), ascending.end());
  cells.insert(cells.end(), descending.begin(), descending.end());

  std::map<VertexId, std::size_t> vertex_index, cone_edge_index;
  std::map<std::tuple<VertexId, VertexId, int>, std::size_t> edge_index;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    switch (c.type) {
      case CellType::Vertex: vertex_index[c.anchor] = i; break;
      case CellType::ConeEdge: cone_edge_index[c.anchor] = i; break;
      case CellType::Edge: edge_index[{c.anchor, c.other, c.copy}] = i; break;
      default: break;
    }
  }
  for (auto& c : cells) {
    switch (c.type) {
      case CellType::Apex:
      case CellType::Vertex:
        break;
      case CellType::Edge:
        c.boundary = {vertex_index.at(c.anchor), vertex_index.at(c.other)};
        break;
      case CellType::ConeEdge:
        c.boundary = {0, vertex_index.at(c.anchor)};
        break;
      case CellType::ConeTriangle:
        c.boundary = {edge_index.at({c.other, c.anchor, c.copy}),
                      cone_edge_index.at(c.anchor), cone_edge_index.at(c.other)};
        break;
    }
    std::sort(c.boundary.begin(), c.boundary.end());
  }

  // Standard reduction: columns are reduced left to right; a surviving lowest
  // one pairs its row cell (birth) with the column cell (death).
  std::vector<std::vector<std::size_t>> reduced(cells.size());
  std::map<std::size_t, std::size_t> low_owner; // row -> column with that low
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    std::vector<std::size_t> col = cells[j].boundary;
    while (!col.empty()) {
      std::size_t low = col.back();
      auto it = low_owner.find(low);
      if (it == low_owner.end()) break;
      col = add_columns(col, reduced[it->second]);
    }
    reduced[j] = col;
    if (!col.empty()) {
      low_owner[col.back()] = j;
      pairs.emplace_back(col.back(), j);
    }
  }

  for (const auto& [bi, di] : pairs) {
    const Cell& birth = cells[bi];
    const Cell& death = cells[di];
    if (birth.type == CellType::Apex) continue; // artificial apex class
    PersistencePair p;
    if (birth.type == CellType::Vertex && death.type == CellType::Edge) {
      p.kind = PairKind::Ord0;
      p.low = birth.level;
      p.high = death.level;
    } else if (birth.type == CellType::Vertex && death.type == CellType::ConeEdge) {
      p.kind = PairKind::Ext0;
      p.low = birth.level;
      p.high = death.level;
    } else if (birth.type == CellType::Edge && death.type == CellType::ConeTriangle) {
      p.kind = PairKind::Ext1;
      p.low = death.level;
      p.high = birth.level;
    } else if (birth.type == CellType::ConeEdge && death.type == CellType::ConeTriangle) {
      p.kind = PairKind::Rel1;
      p.low = death.level;
      p.high = birth.level;
    } else {
      throw Error("extended_diagram_oracle: unexpected pairing of cell types");
    }
    if (p.low < p.high) diagram.add(std::move(p));
  }
  return diagram;
}

} // namespace reeb
