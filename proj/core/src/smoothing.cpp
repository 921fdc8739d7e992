#include "reeb/smoothing.hpp"

#include <algorithm>
#include <string>

#include "reeb/band.hpp"
#include "reeb/transport.hpp"
#include "reeb/value_format.hpp"

namespace reeb {

void require_valid_params(const TransportParams& p, double tol) {
  if (p.epsilon < -tol) throw std::invalid_argument("epsilon must be >= 0");
  if (p.tau < -tol) throw std::invalid_argument("tau must be >= 0");
  if (p.tau > 2.0 * p.epsilon + tol)
    throw std::invalid_argument("tau must be <= 2*epsilon");
}

ReachTable reach_table(const ReebGraph& g, double tol) {
  require_valid(g, tol);
  ReachTable table;
  std::vector<std::pair<double, VertexId>> order;
  for (const auto& [id, val] : g.vertices()) order.push_back({val, id});
  std::sort(order.begin(), order.end());

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& [val, id] = *it;
    double reach = val;
    for (const auto& up : upper_neighbors(g, id))
      reach = std::max(reach, table.up_reach.at(up));
    table.up_reach[id] = reach;
  }
  for (const auto& [val, id] : order) {
    double reach = val;
    for (const auto& down : lower_neighbors(g, id))
      reach = std::min(reach, table.down_reach.at(down));
    table.down_reach[id] = reach;
  }
  return table;
}

ReebGraph smooth(const ReebGraph& g, double epsilon, double tol) {
  require_valid(g, tol);
  if (epsilon < -tol) throw std::invalid_argument("epsilon must be >= 0");
  if (epsilon <= tol) return suppress_regular(g, tol);
  if (g.empty()) return g;

  // Candidate levels a_i +- eps, deduplicated at the value tolerance so that
  // colliding candidates merge, then interleaved with midpoints.
  std::vector<double> candidates;
  for (const auto& [id, val] : g.vertices()) {
    candidates.push_back(val - epsilon);
    candidates.push_back(val + epsilon);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<double> levels;
  for (double c : candidates)
    if (levels.empty() || !approx_eq(levels.back(), c, tol)) levels.push_back(c);

  std::vector<double> samples;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0) samples.push_back((levels[i - 1] + levels[i]) / 2.0);
    samples.push_back(levels[i]);
  }

  std::vector<BandPartition> nodes;
  nodes.reserve(samples.size());
  for (double s : samples)
    nodes.push_back(band_components(g, s - epsilon, s + epsilon, tol));

  ReebGraph result;
  auto node_id = [](std::size_t sample, int label) {
    return "s" + std::to_string(sample) + "_" + std::to_string(label);
  };
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (int label = 0; label < nodes[i].component_count; ++label)
      result.add_vertex(node_id(i, label), samples[i]);

  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    BandPartition joint =
        band_components(g, samples[i] - epsilon, samples[i + 1] + epsilon, tol);
    auto lower_map = band_inclusion(g, nodes[i], joint, tol);
    auto upper_map = band_inclusion(g, nodes[i + 1], joint, tol);
    // Each joint component is a star: one side holds a single node, so the
    // cross product is exactly the arc set between the two samples.
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> buckets;
    for (const auto& [node, joint_label] : lower_map)
      buckets[joint_label].first.push_back(node);
    for (const auto& [node, joint_label] : upper_map)
      buckets[joint_label].second.push_back(node);
    for (const auto& [joint_label, sides] : buckets)
      for (int lo : sides.first)
        for (int hi : sides.second)
          result.add_edge(node_id(i, lo), node_id(i + 1, hi));
  }

  return suppress_regular(result, tol);
}

namespace {

std::string clip_id(const EdgeKey& key, int copy, double value) {
  return "t:" + key.a + "~" + key.b + "#" + std::to_string(copy) + "@" +
         format_value(value);
}

} // namespace

ReebGraph truncate(const ReebGraph& g, double tau, double tol) {
  require_valid(g, tol);
  if (tau < -tol) throw std::invalid_argument("tau must be >= 0");
  if (tau <= tol) return suppress_regular(g, tol);

  ReachTable reach = reach_table(g, tol);
  ReebGraph out;
  auto survives = [&](const VertexId& id) {
    double f = g.value(id);
    return approx_le(f + tau, reach.up_reach.at(id), tol) &&
           approx_le(reach.down_reach.at(id), f - tau, tol);
  };
  for (const auto& [id, val] : g.vertices())
    if (survives(id)) out.add_vertex(id, val);

  for (const auto& [key, mult] : g.edges()) {
    double va = g.value(key.a);
    double vb = g.value(key.b);
    const VertexId& lower = va < vb ? key.a : key.b;
    const VertexId& upper = va < vb ? key.b : key.a;
    double flo = std::min(va, vb);
    double fhi = std::max(va, vb);
    // A point at height h on the edge survives iff
    //   down_reach(lower) + tau <= h <= up_reach(upper) - tau.
    double lo_clip = std::max(flo, reach.down_reach.at(lower) + tau);
    double hi_clip = std::min(fhi, reach.up_reach.at(upper) - tau);
    if (lo_clip > hi_clip + tol) continue;

    for (int copy = 0; copy < mult; ++copy) {
      if (approx_eq(lo_clip, hi_clip, tol)) {
        // The surviving interval is a single point.
        if (approx_eq(lo_clip, flo, tol)) {
          if (!out.has_vertex(lower)) out.add_vertex(lower, flo);
        } else if (approx_eq(hi_clip, fhi, tol)) {
          if (!out.has_vertex(upper)) out.add_vertex(upper, fhi);
        } else {
          VertexId point = clip_id(key, copy, lo_clip);
          if (!out.has_vertex(point)) out.add_vertex(point, lo_clip);
        }
        continue;
      }
      VertexId bottom, top;
      if (approx_eq(lo_clip, flo, tol)) {
        bottom = lower;
        if (!out.has_vertex(bottom)) out.add_vertex(bottom, flo);
      } else {
        bottom = clip_id(key, copy, lo_clip);
        if (!out.has_vertex(bottom)) out.add_vertex(bottom, lo_clip);
      }
      if (approx_eq(hi_clip, fhi, tol)) {
        top = upper;
        if (!out.has_vertex(top)) out.add_vertex(top, fhi);
      } else {
        top = clip_id(key, copy, hi_clip);
        if (!out.has_vertex(top)) out.add_vertex(top, hi_clip);
      }
      out.add_edge(bottom, top);
    }
  }
  return suppress_regular(out, tol);
}

ReebGraph truncated_smooth(const ReebGraph& g, const TransportParams& params,
                           double tol) {
  require_valid_params(params, tol);
  return truncate(smooth(g, params.epsilon, tol), params.tau, tol);
}

std::vector<double> predict_critical_values(const ExtendedDiagram& d,
                                            const TransportParams& params,
                                            double tol) {
  require_valid_params(params, tol);
  std::vector<double> values;
  for (const auto& p : d.points) {
    auto moved = transport_point(p, params, tol);
    if (moved) {
      values.push_back(moved->low);
      values.push_back(moved->high);
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

GuardReport genericity_guard(const ReebGraph& g, double epsilon, double tol) {
  require_valid(g, tol);
  std::vector<double> values;
  for (const auto& [id, val] : g.vertices()) values.push_back(val);
  std::sort(values.begin(), values.end());
  GuardReport report;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (approx_eq(std::fabs(values[i] - values[j]), 2.0 * epsilon, tol))
        report.violations.emplace_back(values[i], values[j]);
  return report;
}

} // namespace reeb
