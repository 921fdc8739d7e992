#include "reeb/band.hpp"

#include <algorithm>
#include <numeric>

namespace reeb {

namespace {

class ElementUnionFind {
public:
  explicit ElementUnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(b)] = find(a); }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

BandPartition band_components(const ReebGraph& g, double lo, double hi, double tol) {
  if (lo > hi + tol) throw std::invalid_argument("band interval has lo > hi");

  BandPartition part;
  part.lo = lo;
  part.hi = hi;

  std::vector<BandElement> elements;
  auto vertex_in_band = [&](const VertexId& id) {
    double v = g.value(id);
    return approx_le(lo, v, tol) && approx_le(v, hi, tol);
  };
  for (const auto& [id, val] : g.vertices())
    if (vertex_in_band(id)) elements.push_back(vertex_element(id));
  for (const auto& [key, mult] : g.edges()) {
    double va = g.value(key.a);
    double vb = g.value(key.b);
    double span_lo = std::min(va, vb);
    double span_hi = std::max(va, vb);
    if (approx_le(span_lo, hi, tol) && approx_le(lo, span_hi, tol))
      for (int c = 0; c < mult; ++c) elements.push_back(edge_element(key, c));
  }
  std::sort(elements.begin(), elements.end());

  std::map<BandElement, std::size_t> index;
  for (const auto& e : elements) index.emplace(e, index.size());
  ElementUnionFind uf(elements.size());
  for (const auto& e : elements) {
    if (e.type != BandElement::Type::Edge) continue;
    for (const VertexId* id : {&e.a, &e.b}) {
      if (!vertex_in_band(*id)) continue;
      uf.unite(index.at(vertex_element(*id)), index.at(e));
    }
  }

  // Components keyed by their minimal element; elements are already sorted,
  // so the first element seen per root is the minimum.
  std::map<std::size_t, int> root_label;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::size_t r = uf.find(i);
    auto [it, inserted] = root_label.emplace(r, static_cast<int>(root_label.size()));
    part.component_of.emplace(elements[i], it->second);
  }
  part.component_count = static_cast<int>(root_label.size());
  return part;
}

std::map<int, int> band_inclusion(const ReebGraph& g, const BandPartition& inner,
                                  const BandPartition& outer, double tol) {
  if (inner.lo < outer.lo - tol || inner.hi > outer.hi + tol)
    throw std::invalid_argument("band_inclusion requires nested intervals");
  std::map<int, int> out;
  for (const auto& [element, label] : inner.component_of) {
    auto it = outer.component_of.find(element);
    if (it == outer.component_of.end())
      throw Error("band_inclusion: inner element missing from outer band");
    auto [pos, inserted] = out.emplace(label, it->second);
    if (!inserted && pos->second != it->second)
      throw Error("band_inclusion: inner component split across outer components");
  }
  return out;
}

} // namespace reeb
