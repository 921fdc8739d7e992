#include "reeb/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace reeb {

void ReebGraph::add_vertex(const VertexId& id, double value) {
  if (id.empty()) throw std::invalid_argument("vertex id must be non-empty");
  auto [it, inserted] = vertices_.emplace(id, value);
  if (!inserted) throw std::invalid_argument("duplicate vertex id: " + id);
}

void ReebGraph::add_edge(const VertexId& u, const VertexId& v, int multiplicity) {
  if (multiplicity <= 0) throw std::invalid_argument("edge multiplicity must be positive");
  edges_[make_edge_key(u, v)] += multiplicity;
}

void ReebGraph::remove_vertex(const VertexId& id) {
  vertices_.erase(id);
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->first.a == id || it->first.b == id)
      it = edges_.erase(it);
    else
      ++it;
  }
}

void ReebGraph::remove_edge(const VertexId& u, const VertexId& v, int multiplicity) {
  auto it = edges_.find(make_edge_key(u, v));
  if (it == edges_.end()) throw std::invalid_argument("no such edge");
  if (it->second < multiplicity) throw std::invalid_argument("edge multiplicity underflow");
  it->second -= multiplicity;
  if (it->second == 0) edges_.erase(it);
}

double ReebGraph::value(const VertexId& id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw std::invalid_argument("unknown vertex id: " + id);
  return it->second;
}

std::size_t ReebGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& [k, m] : edges_) n += static_cast<std::size_t>(m);
  return n;
}

ValidationReport validate(const ReebGraph& g, double tol) {
  ValidationReport report;
  for (const auto& [id, val] : g.vertices()) {
    if (!std::isfinite(val))
      report.violations.push_back({Violation::Kind::NonFiniteValue,
                                   "non-finite value at vertex " + id});
  }
  for (const auto& [key, mult] : g.edges()) {
    if (key.a == key.b) {
      report.violations.push_back({Violation::Kind::SelfLoop, "self-loop at " + key.a});
      continue;
    }
    bool known = true;
    for (const VertexId* id : {&key.a, &key.b}) {
      if (!g.has_vertex(*id)) {
        report.violations.push_back({Violation::Kind::UnknownEndpoint,
                                     "unknown endpoint " + *id});
        known = false;
      }
    }
    if (!known) continue;
    if (approx_eq(g.value(key.a), g.value(key.b), tol))
      report.violations.push_back({Violation::Kind::HorizontalEdge,
                                   "equal adjacent values on edge " + key.a + " -- " + key.b});
  }
  return report;
}

void require_valid(const ReebGraph& g, double tol) {
  ValidationReport r = validate(g, tol);
  if (!r.valid()) {
    std::ostringstream os;
    os << "invalid Reeb graph:";
    for (const auto& v : r.violations) os << " [" << v.detail << "]";
    throw Error(os.str());
  }
}

VertexClass classify(const ReebGraph& g, const VertexId& v) {
  double fv = g.value(v); // throws on unknown id
  VertexClass c;
  for (const auto& [key, mult] : g.edges()) {
    const VertexId* other = nullptr;
    if (key.a == v)
      other = &key.b;
    else if (key.b == v)
      other = &key.a;
    else
      continue;
    if (!g.has_vertex(*other)) continue;
    double fo = g.value(*other);
    if (fo < fv)
      c.down_degree += mult;
    else if (fo > fv)
      c.up_degree += mult;
  }
  return c;
}

GenericityFlags genericity(const ReebGraph& g, double tol) {
  require_valid(g, tol);
  GenericityFlags flags;
  std::vector<double> values;
  values.reserve(g.vertex_count());
  for (const auto& [id, val] : g.vertices()) values.push_back(val);
  std::sort(values.begin(), values.end());
  flags.function_generic = true;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (approx_eq(values[i - 1], values[i], tol)) flags.function_generic = false;
  flags.morse_generic = true;
  for (const auto& [id, val] : g.vertices()) {
    VertexClass c = classify(g, id);
    bool ok = (c.down_degree == 0 && c.up_degree == 1) ||
              (c.down_degree == 1 && c.up_degree == 2) ||
              (c.down_degree == 2 && c.up_degree == 1) ||
              (c.down_degree == 1 && c.up_degree == 0);
    if (!ok) flags.morse_generic = false;
  }
  return flags;
}

ReebGraph suppress_regular(const ReebGraph& g, double tol) {
  require_valid(g, tol);
  ReebGraph out = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [id, val] : out.vertices()) {
      VertexClass c = classify(out, id);
      if (!c.regular()) continue;
      std::vector<VertexId> lower = lower_neighbors(out, id);
      std::vector<VertexId> upper = upper_neighbors(out, id);
      VertexId below = lower.front();
      VertexId above = upper.front();
      out.remove_vertex(id);
      out.add_edge(below, above);
      changed = true;
      break; // iterator invalidated
    }
  }
  return out;
}

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

BettiNumbers betti(const ReebGraph& g, double tol) {
  require_valid(g, tol);
  std::map<VertexId, std::size_t> index;
  for (const auto& [id, val] : g.vertices()) index.emplace(id, index.size());
  UnionFind uf(index.size());
  for (const auto& [key, mult] : g.edges()) uf.unite(index.at(key.a), index.at(key.b));
  std::size_t components = 0;
  for (const auto& [id, i] : index)
    if (uf.find(i) == i) ++components;
  BettiNumbers b;
  b.b0 = components;
  b.b1 = g.edge_count() - g.vertex_count() + components;
  return b;
}

std::vector<VertexId> lower_neighbors(const ReebGraph& g, const VertexId& v) {
  std::vector<VertexId> out;
  double fv = g.value(v);
  for (const auto& [key, mult] : g.edges()) {
    const VertexId* other = nullptr;
    if (key.a == v)
      other = &key.b;
    else if (key.b == v)
      other = &key.a;
    else
      continue;
    if (g.has_vertex(*other) && g.value(*other) < fv)
      for (int i = 0; i < mult; ++i) out.push_back(*other);
  }
  return out;
}

std::vector<VertexId> upper_neighbors(const ReebGraph& g, const VertexId& v) {
  std::vector<VertexId> out;
  double fv = g.value(v);
  for (const auto& [key, mult] : g.edges()) {
    const VertexId* other = nullptr;
    if (key.a == v)
      other = &key.b;
    else if (key.b == v)
      other = &key.a;
    else
      continue;
    if (g.has_vertex(*other) && g.value(*other) > fv)
      for (int i = 0; i < mult; ++i) out.push_back(*other);
  }
  return out;
}

namespace {

struct CanonicalVertex {
  double value;
  int down_degree;
  int up_degree;
  std::vector<double> neighbor_values; // sorted, with multiplicity
  VertexId id;

  bool operator<(const CanonicalVertex& o) const {
    if (value != o.value) return value < o.value;
    if (down_degree != o.down_degree) return down_degree < o.down_degree;
    if (up_degree != o.up_degree) return up_degree < o.up_degree;
    if (neighbor_values != o.neighbor_values) return neighbor_values < o.neighbor_values;
    return id < o.id;
  }
};

std::vector<CanonicalVertex> canonical_order(const ReebGraph& g) {
  std::vector<CanonicalVertex> order;
  order.reserve(g.vertex_count());
  for (const auto& [id, val] : g.vertices()) {
    CanonicalVertex cv;
    cv.value = val;
    cv.id = id;
    VertexClass c = classify(g, id);
    cv.down_degree = c.down_degree;
    cv.up_degree = c.up_degree;
    for (const auto& n : lower_neighbors(g, id)) cv.neighbor_values.push_back(g.value(n));
    for (const auto& n : upper_neighbors(g, id)) cv.neighbor_values.push_back(g.value(n));
    std::sort(cv.neighbor_values.begin(), cv.neighbor_values.end());
    order.push_back(std::move(cv));
  }
  std::sort(order.begin(), order.end());
  return order;
}

} // namespace

bool structurally_equal(const ReebGraph& a, const ReebGraph& b, double tol) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  auto oa = canonical_order(a);
  auto ob = canonical_order(b);
  std::map<VertexId, std::size_t> ia, ib;
  for (std::size_t i = 0; i < oa.size(); ++i) {
    if (!approx_eq(oa[i].value, ob[i].value, tol)) return false;
    if (oa[i].down_degree != ob[i].down_degree || oa[i].up_degree != ob[i].up_degree)
      return false;
    ia.emplace(oa[i].id, i);
    ib.emplace(ob[i].id, i);
  }
  auto index_edges = [](const ReebGraph& g, const std::map<VertexId, std::size_t>& idx) {
    std::map<std::pair<std::size_t, std::size_t>, int> out;
    for (const auto& [key, mult] : g.edges()) {
      std::size_t i = idx.at(key.a), j = idx.at(key.b);
      if (j < i) std::swap(i, j);
      out[{i, j}] += mult;
    }
    return out;
  };
  return index_edges(a, ia) == index_edges(b, ib);
}

} // namespace reeb
