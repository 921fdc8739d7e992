#include "reeb/vineyard.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "reeb/persistence.hpp"
#include "reeb/transport.hpp"

namespace reeb {

namespace {

bool identity_pair(const TransportParams& p) { return p.epsilon == 0.0 && p.tau == 0.0; }

// Strictly below the truncation ceiling, or the explicit identity pair.
bool reportable(const TransportParams& p) {
  return identity_pair(p) || (p.tau >= 0.0 && p.tau < 2.0 * p.epsilon);
}

} // namespace

std::vector<TransportParams> recover_params(const ExtendedDiagram& d_from,
                                            const ExtendedDiagram& d_to, double tol) {
  auto from_of = [&](PairKind k) { return d_from.of_kind(k); };
  auto to_of = [&](PairKind k) { return d_to.of_kind(k); };
  const double margin = std::max(1e3 * tol, 1e-9);

  // Building blocks. Survivor cross pairs pin eps directly (Ext1/Rel1 lows
  // move by +eps, Ext1/Ord0 highs by -eps) while Ext0 survivors pin only the
  // family constant c = eps - tau. Removal boundaries from d_from force
  // tau >= lifetime (Ord0/Rel1), eps >= diag (Ext1), tau - eps >= diag (Ext0).
  std::vector<double> family_constants;
  for (const auto& p : from_of(PairKind::Ext0))
    for (const auto& q : to_of(PairKind::Ext0)) {
      family_constants.push_back(p.low - q.low);
      family_constants.push_back(q.high - p.high);
    }
  std::vector<double> forced_taus; // removal boundaries acting on tau
  for (PairKind k : {PairKind::Ord0, PairKind::Rel1})
    for (const auto& p : from_of(k)) forced_taus.push_back(p.lifetime());
  std::vector<double> ext1_bounds, ext0_bounds;
  for (const auto& p : from_of(PairKind::Ext1))
    ext1_bounds.push_back(p.diagonal_distance());
  for (const auto& p : from_of(PairKind::Ext0))
    ext0_bounds.push_back(p.diagonal_distance());

  std::vector<double> eps_candidates{0.0};
  for (PairKind k : {PairKind::Ext1, PairKind::Rel1})
    for (const auto& p : from_of(k))
      for (const auto& q : to_of(k)) eps_candidates.push_back(q.low - p.low);
  for (PairKind k : {PairKind::Ext1, PairKind::Ord0})
    for (const auto& p : from_of(k))
      for (const auto& q : to_of(k)) eps_candidates.push_back(p.high - q.high);
  for (double e : ext1_bounds) eps_candidates.push_back(e);
  for (double d : ext0_bounds) eps_candidates.push_back(d + margin); // full wipe
  for (double c : family_constants) {
    if (c >= 0.0)
      eps_candidates.push_back(c); // tau = 0 member
    else
      eps_candidates.push_back(-c + margin); // shrinking family minimum
    for (double t : forced_taus) eps_candidates.push_back(c + t);
    for (double e : ext1_bounds) eps_candidates.push_back(e);
  }
  for (double t : forced_taus)
    for (double d : ext0_bounds) eps_candidates.push_back(t - d);

  std::sort(eps_candidates.begin(), eps_candidates.end());
  std::vector<double> eps_set;
  for (double e : eps_candidates) {
    if (e < -tol) continue;
    e = std::max(e, 0.0);
    if (eps_set.empty() || !approx_eq(eps_set.back(), e, tol)) eps_set.push_back(e);
  }

  std::vector<TransportParams> trial;
  for (double eps : eps_set) {
    std::vector<double> tau_candidates{0.0};
    for (const auto& p : from_of(PairKind::Ord0))
      for (const auto& q : to_of(PairKind::Ord0))
        tau_candidates.push_back(eps + (q.low - p.low));
    for (const auto& p : from_of(PairKind::Rel1))
      for (const auto& q : to_of(PairKind::Rel1))
        tau_candidates.push_back(eps - (q.high - p.high));
    for (double c : family_constants) tau_candidates.push_back(eps - c);
    for (double t : forced_taus) tau_candidates.push_back(t);
    for (double d : ext0_bounds) tau_candidates.push_back(eps + d);

    for (double tau : tau_candidates) {
      if (tau < -tol) continue;
      tau = std::max(tau, 0.0);
      if (tau > 2.0 * eps + tol) continue;
      trial.push_back({eps, std::min(tau, 2.0 * eps)});
    }
  }

  std::vector<TransportParams> verified;
  for (const auto& cand : trial) {
    if (!reportable(cand)) continue;
    bool duplicate = false;
    for (const auto& seen : verified)
      if (approx_eq(seen.epsilon, cand.epsilon, tol) && approx_eq(seen.tau, cand.tau, tol))
        duplicate = true;
    if (duplicate) continue;
    if (diagram_equal(transport(d_from, cand, tol), d_to, tol))
      verified.push_back(cand);
  }
  std::sort(verified.begin(), verified.end(), [](const TransportParams& a,
                                                 const TransportParams& b) {
    if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
    return a.tau < b.tau;
  });
  return verified;
}

AdmissibilityResult is_admissible(const Vineyard& v, double tol, bool allow_identity) {
  AdmissibilityResult result;
  if (v.diagrams.size() < 2)
    throw std::invalid_argument("is_admissible: need at least 2 diagrams");
  for (std::size_t i = 0; i + 1 < v.diagrams.size(); ++i) {
    auto candidates = recover_params(v.diagrams[i], v.diagrams[i + 1], tol);
    std::erase_if(candidates, [&](const TransportParams& p) {
      return identity_pair(p) && !allow_identity;
    });
    if (candidates.empty()) {
      result.failed_step = i;
      return result;
    }
    result.params.push_back(candidates.front());
  }
  result.admissible = true;
  return result;
}

Realization realize(const ReebGraph& r0, const Vineyard& v,
                    const RealizeOptions& options) {
  if (v.diagrams.empty()) throw std::invalid_argument("realize: empty vineyard");
  const double tol = options.tol;
  const double verify_tol = 10.0 * tol;

  if (!diagram_equal(extended_diagram(r0, tol), v.diagrams.front(), verify_tol))
    throw Error("realize: initial diagram mismatch");

  Realization out;
  out.graphs.push_back(suppress_regular(r0, tol));
  for (std::size_t i = 0; i + 1 < v.diagrams.size(); ++i) {
    auto candidates = recover_params(v.diagrams[i], v.diagrams[i + 1], tol);
    std::erase_if(candidates, [&](const TransportParams& p) {
      return identity_pair(p) && !options.allow_identity;
    });
    // Candidates are sorted by epsilon; take the least aggressive one whose
    // graph-level step reproduces the next diagram.
    bool realized = false;
    for (const auto& cand : candidates) {
      ReebGraph next = truncated_smooth(out.graphs.back(), cand, tol);
      if (diagram_equal(extended_diagram(next, tol), v.diagrams[i + 1], verify_tol)) {
        out.graphs.push_back(std::move(next));
        out.params.push_back(cand);
        realized = true;
        break;
      }
    }
    if (!realized)
      throw Error("realize: step " + std::to_string(i) + " is not admissible");
  }
  return out;
}

ReebGraph interpolate(const ReebGraph& r, const TransportParams& params, double t,
                      double tol) {
  require_valid_params(params, tol);
  if (t < -tol || t > 1.0 + tol)
    throw std::invalid_argument("interpolate: t must lie in [0, 1]");
  t = std::clamp(t, 0.0, 1.0);
  if (t == 0.0) return suppress_regular(r, tol);
  return truncated_smooth(r, {t * params.epsilon, t * params.tau}, tol);
}

std::vector<PathSample> sample_path(const Realization& realization,
                                    std::size_t steps_per_segment, double tol) {
  if (steps_per_segment < 1)
    throw std::invalid_argument("sample_path: steps_per_segment must be >= 1");
  std::vector<PathSample> out;
  if (realization.graphs.empty()) return out;

  out.push_back({0.0, realization.graphs.front(),
                 extended_diagram(realization.graphs.front(), tol)});
  for (std::size_t i = 0; i < realization.params.size(); ++i) {
    const ReebGraph& base = realization.graphs[i];
    for (std::size_t k = 1; k <= steps_per_segment; ++k) {
      double t = static_cast<double>(k) / static_cast<double>(steps_per_segment);
      ReebGraph g = interpolate(base, realization.params[i], t, tol);
      ExtendedDiagram d = extended_diagram(g, tol);
      out.push_back({static_cast<double>(i) + t, std::move(g), std::move(d)});
    }
  }
  return out;
}

} // namespace reeb
