#include "reeb/persistence.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

namespace reeb {

namespace {

// Sweep position: (value, id) lexicographic. The descending sweep uses the
// exact reverse of this order, and ties everywhere are broken the same way.
using SweepKey = std::pair<double, VertexId>;

inline SweepKey sweep_key(const ReebGraph& g, const VertexId& id) {
  return {g.value(id), id};
}

// Union-find tracking, per component, the extremal sweep key reached so far.
// `prefer_low` selects the minimum (ascending sweep) or maximum (descending).
class ComponentTracker {
public:
  explicit ComponentTracker(bool prefer_low) : prefer_low_(prefer_low) {}

  void add(const VertexId& id, double value) {
    parent_.emplace(id, id);
    extremum_.emplace(id, SweepKey{value, id});
  }

  VertexId find(VertexId x) {
    while (parent_.at(x) != x) {
      parent_.at(x) = parent_.at(parent_.at(x));
      x = parent_.at(x);
    }
    return x;
  }

  // Merges the components of a and b; returns the extremum record of the
  // younger component (whose extremum loses), or nullopt if already joined.
  std::optional<SweepKey> merge(const VertexId& a, const VertexId& b) {
    VertexId ra = find(a), rb = find(b);
    if (ra == rb) return std::nullopt;
    const SweepKey& ea = extremum_.at(ra);
    const SweepKey& eb = extremum_.at(rb);
    bool a_elder = prefer_low_ ? ea < eb : eb < ea;
    const VertexId& winner = a_elder ? ra : rb;
    const VertexId& loser = a_elder ? rb : ra;
    SweepKey dying = extremum_.at(loser);
    parent_.at(loser) = winner;
    return dying;
  }

  SweepKey extremum(const VertexId& member) { return extremum_.at(find(member)); }

private:
  bool prefer_low_;
  std::map<VertexId, VertexId> parent_;
  std::map<VertexId, SweepKey> extremum_;
};

// Widest-path queries: maximize, over connecting paths, the minimum sweep key
// of the path's vertices (endpoints included).
class BottleneckGraph {
public:
  void add_vertex(const VertexId& id, double value) {
    values_.emplace(id, value);
    adjacency_.emplace(id, std::vector<VertexId>{});
  }
  bool has_vertex(const VertexId& id) const { return values_.count(id) > 0; }
  void add_edge(const VertexId& u, const VertexId& v) {
    adjacency_.at(u).push_back(v);
    adjacency_.at(v).push_back(u);
  }

  std::optional<SweepKey> widest_path(const VertexId& src, const VertexId& dst) const {
    using Entry = std::pair<SweepKey, VertexId>;
    std::priority_queue<Entry> queue; // pops the largest bottleneck first
    std::map<VertexId, SweepKey> best;
    SweepKey start{values_.at(src), src};
    best.emplace(src, start);
    queue.push({start, src});
    while (!queue.empty()) {
      auto [bottleneck, v] = queue.top();
      queue.pop();
      if (bottleneck < best.at(v)) continue;
      if (v == dst) return bottleneck;
      for (const auto& w : adjacency_.at(v)) {
        SweepKey through{values_.at(w), w};
        SweepKey candidate = std::min(through, bottleneck);
        auto it = best.find(w);
        if (it == best.end() || it->second < candidate) {
          best[w] = candidate;
          queue.push({candidate, w});
        }
      }
    }
    return std::nullopt;
  }

private:
  std::map<VertexId, double> values_;
  std::map<VertexId, std::vector<VertexId>> adjacency_;
};

std::vector<SweepKey> ascending_order(const ReebGraph& g) {
  std::vector<SweepKey> order;
  order.reserve(g.vertex_count());
  for (const auto& [id, val] : g.vertices()) order.push_back({val, id});
  std::sort(order.begin(), order.end());
  return order;
}

} // namespace

ExtendedDiagram extended_diagram(const ReebGraph& g, double tol) {
  require_valid(g, tol);
  ExtendedDiagram diagram;
  if (g.empty()) return diagram;

  auto order = ascending_order(g);

  // Ascending sweep: Ord0 merges, Ext1 cycle closures, Ext0 component minima.
  ComponentTracker components(/*prefer_low=*/true);
  BottleneckGraph processed;
  for (const auto& [value, id] : order) {
    components.add(id, value);
    processed.add_vertex(id, value);
    auto lower = lower_neighbors(g, id);
    std::sort(lower.begin(), lower.end(), [&](const VertexId& x, const VertexId& y) {
      return sweep_key(g, x) < sweep_key(g, y);
    });
    for (const auto& u : lower) {
      auto dying = components.merge(id, u);
      if (dying) {
        // Ordinary merge: the younger component's minimum pairs with the
        // fork. A vertex joining its own fresh component lands on the
        // diagonal and is skipped.
        if (dying->first < value) {
          PersistencePair p;
          p.kind = PairKind::Ord0;
          p.low = dying->first;
          p.high = value;
          p.low_vertex = dying->second;
          p.high_vertex = id;
          diagram.add(std::move(p));
        }
      } else {
        // Cycle closure: the loop tops out here; its bottom is the widest
        // path between the branch points through the processed sublevel set.
        auto partner = processed.widest_path(u, id);
        if (partner && partner->first < value) {
          PersistencePair p;
          p.kind = PairKind::Ext1;
          p.low = partner->first;
          p.high = value;
          p.low_vertex = partner->second;
          p.high_vertex = id;
          diagram.add(std::move(p));
        }
      }
      processed.add_edge(u, id);
    }
  }

  // Ext0: per final component, (global min, global max).
  std::map<VertexId, SweepKey> max_of_root;
  for (const auto& [value, id] : order) {
    VertexId root = components.find(id);
    auto it = max_of_root.find(root);
    if (it == max_of_root.end() || it->second.first < value)
      max_of_root[root] = {value, id};
  }
  for (const auto& [root, maxrec] : max_of_root) {
    SweepKey minrec = components.extremum(root);
    if (minrec.first < maxrec.first) {
      PersistencePair p;
      p.kind = PairKind::Ext0;
      p.low = minrec.first;
      p.high = maxrec.first;
      p.low_vertex = minrec.second;
      p.high_vertex = maxrec.second;
      diagram.add(std::move(p));
    }
  }

  // Descending sweep for Rel1: superlevel merges at up forks pair the fork
  // with the lower of the two component maxima.
  ComponentTracker super(/*prefer_low=*/false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& [value, id] = *it;
    super.add(id, value);
    auto upper = upper_neighbors(g, id);
    std::sort(upper.begin(), upper.end(), [&](const VertexId& x, const VertexId& y) {
      return sweep_key(g, y) < sweep_key(g, x);
    });
    for (const auto& u : upper) {
      auto dying = super.merge(id, u);
      if (dying && dying->first > value) {
        PersistencePair p;
        p.kind = PairKind::Rel1;
        p.low = value;
        p.high = dying->first;
        p.low_vertex = id;
        p.high_vertex = dying->second;
        diagram.add(std::move(p));
      }
    }
  }

  return diagram;
}

std::optional<double> ext1_partner(const ReebGraph& g, const VertexId& downfork,
                                   double tol) {
  require_valid(g, tol);
  VertexClass c = classify(g, downfork);
  if (!c.down_fork())
    throw std::invalid_argument("ext1_partner: vertex " + downfork + " is not a down fork");

  // Open sublevel set below the fork, ties broken by id.
  SweepKey fork = sweep_key(g, downfork);
  BottleneckGraph sublevel;
  for (const auto& [id, val] : g.vertices())
    if (SweepKey{val, id} < fork) sublevel.add_vertex(id, val);
  for (const auto& [key, mult] : g.edges())
    if (sublevel.has_vertex(key.a) && sublevel.has_vertex(key.b))
      sublevel.add_edge(key.a, key.b);

  auto branches = lower_neighbors(g, downfork);
  std::optional<double> best;
  for (std::size_t i = 0; i < branches.size(); ++i)
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      std::optional<SweepKey> b;
      if (branches[i] == branches[j])
        b = SweepKey{g.value(branches[i]), branches[i]}; // parallel edges
      else
        b = sublevel.widest_path(branches[i], branches[j]);
      if (b && (!best || *best < b->first)) best = b->first;
    }
  return best;
}

} // namespace reeb
