#include "reeb/transport.hpp"

#include <algorithm>
#include <limits>

namespace reeb {

std::optional<PersistencePair> transport_point(const PersistencePair& p,
                                               const TransportParams& params,
                                               double tol) {
  require_valid_params(params, tol);
  double e = params.epsilon;
  double t = params.tau;
  double low = p.low, high = p.high;
  switch (p.kind) {
    case PairKind::Ext0: low -= e - t; high += e - t; break;
    case PairKind::Ord0: low -= e - t; high -= e; break;
    case PairKind::Rel1: low += e; high += e - t; break;
    case PairKind::Ext1: low += e; high -= e; break;
  }
  if (high - low <= tol) return std::nullopt;
  PersistencePair out;
  out.kind = p.kind;
  out.low = low;
  out.high = high;
  return out;
}

ExtendedDiagram transport(const ExtendedDiagram& d, const TransportParams& params,
                          double tol) {
  require_valid_params(params, tol);
  ExtendedDiagram out;
  for (const auto& p : d.points) {
    auto moved = transport_point(p, params, tol);
    if (moved) out.add(std::move(*moved));
  }
  return out;
}

namespace {

// Feasibility matching for one kind at radius r: left side is every point of
// `a` plus |b| diagonal slots, right side every point of `b` plus |a| slots.
// Kuhn's augmenting paths; sizes here are small.
class FeasibilityMatcher {
public:
  FeasibilityMatcher(const std::vector<PersistencePair>& a,
                     const std::vector<PersistencePair>& b)
      : a_(a), b_(b), left_count_(a.size() + b.size()),
        right_count_(b.size() + a.size()) {}

  bool feasible(double r) {
    match_right_.assign(right_count_, kUnmatched);
    match_left_.assign(left_count_, kUnmatched);
    for (std::size_t l = 0; l < left_count_; ++l) {
      std::vector<bool> visited(right_count_, false);
      if (!augment(l, r, visited)) return false;
    }
    return true;
  }

  // Valid after a successful feasible() call.
  std::size_t matched_right(std::size_t l) const { return match_left_[l]; }

private:
  static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

  bool allowed(std::size_t l, std::size_t r_node, double r) const {
    bool l_point = l < a_.size();
    bool r_point = r_node < b_.size();
    if (l_point && r_point) return linf_distance(a_[l], b_[r_node]) <= r;
    if (l_point) return a_[l].diagonal_distance() <= r;
    if (r_point) return b_[r_node].diagonal_distance() <= r;
    return true; // diagonal to diagonal
  }

  bool augment(std::size_t l, double r, std::vector<bool>& visited) {
    for (std::size_t r_node = 0; r_node < right_count_; ++r_node) {
      if (visited[r_node] || !allowed(l, r_node, r)) continue;
      visited[r_node] = true;
      if (match_right_[r_node] == kUnmatched || augment(match_right_[r_node], r, visited)) {
        match_right_[r_node] = l;
        match_left_[l] = r_node;
        return true;
      }
    }
    return false;
  }

  const std::vector<PersistencePair>& a_;
  const std::vector<PersistencePair>& b_;
  std::size_t left_count_;
  std::size_t right_count_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> match_left_;
};

struct KindResult {
  double distance = 0.0;
  std::vector<MatchAssignment> assignments;
};

KindResult bottleneck_one_kind(PairKind kind, const std::vector<PersistencePair>& a,
                               const std::vector<PersistencePair>& b) {
  KindResult result;
  if (a.empty() && b.empty()) return result;

  std::vector<double> candidates;
  for (const auto& pa : a) {
    candidates.push_back(pa.diagonal_distance());
    for (const auto& pb : b) candidates.push_back(linf_distance(pa, pb));
  }
  for (const auto& pb : b) candidates.push_back(pb.diagonal_distance());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  FeasibilityMatcher matcher(a, b);
  std::size_t lo = 0, hi = candidates.size() - 1;
  if (!matcher.feasible(candidates[hi]))
    throw Error("bottleneck: no feasible matching at maximal candidate");
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (matcher.feasible(candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  result.distance = candidates[lo];
  matcher.feasible(result.distance); // rebuild witness at the optimum

  for (std::size_t l = 0; l < a.size() + b.size(); ++l) {
    std::size_t r_node = matcher.matched_right(l);
    bool l_point = l < a.size();
    bool r_point = r_node < b.size();
    if (!l_point && !r_point) continue;
    MatchAssignment m;
    m.kind = kind;
    if (l_point) m.from = a[l];
    if (r_point) m.to = b[r_node];
    if (l_point && r_point)
      m.cost = linf_distance(a[l], b[r_node]);
    else if (l_point)
      m.cost = a[l].diagonal_distance();
    else
      m.cost = b[r_node].diagonal_distance();
    result.assignments.push_back(std::move(m));
  }
  return result;
}

} // namespace

BottleneckResult bottleneck(const ExtendedDiagram& a, const ExtendedDiagram& b) {
  BottleneckResult out;
  for (PairKind kind : kAllKinds) {
    KindResult kr = bottleneck_one_kind(kind, a.of_kind(kind), b.of_kind(kind));
    out.distance = std::max(out.distance, kr.distance);
    for (auto& m : kr.assignments) out.matching.assignments.push_back(std::move(m));
  }
  out.matching.cost = out.distance;
  return out;
}

namespace {

PairKind single_kind_of(const ExtendedDiagram& d, const char* op) {
  PairKind kind = PairKind::Ext0;
  bool seen = false;
  for (const auto& p : d.points) {
    if (!seen) {
      kind = p.kind;
      seen = true;
    } else if (p.kind != kind) {
      throw std::invalid_argument(std::string(op) + ": diagram mixes point kinds");
    }
  }
  return kind;
}

} // namespace

double shift_bound(const ExtendedDiagram& single_kind) {
  single_kind_of(single_kind, "shift_bound");
  const auto& pts = single_kind.points;
  if (pts.empty()) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double local = pts[i].diagonal_distance();
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) local = std::min(local, linf_distance(pts[i], pts[j]));
    best = std::min(best, local);
  }
  return best / 2.0;
}

std::pair<ExtendedDiagram, Matching> shift_diagram(const ExtendedDiagram& single_kind,
                                                   const ShiftVector& v, double tol) {
  PairKind kind = single_kind_of(single_kind, "shift_diagram");
  ExtendedDiagram shifted;
  Matching omega;
  for (const auto& p : single_kind.points) {
    PersistencePair moved;
    moved.kind = kind;
    moved.low = p.low + v.dx;
    moved.high = p.high + v.dy;
    MatchAssignment m;
    m.kind = kind;
    m.from = p;
    if (moved.high - moved.low > tol) {
      m.to = moved;
      m.cost = v.magnitude();
      shifted.add(std::move(moved));
    } else {
      m.cost = p.diagonal_distance(); // dropped: matched to the diagonal
    }
    omega.assignments.push_back(std::move(m));
    omega.cost = std::max(omega.cost, omega.assignments.back().cost);
  }
  return {std::move(shifted), std::move(omega)};
}

} // namespace reeb
