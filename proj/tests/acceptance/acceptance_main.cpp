// Acceptance suite: each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "reeb/reeb.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/random_inputs.hpp"

using namespace reeb;
using namespace reeb::testing;

namespace {

struct Failure {
  std::string detail;
};

using CheckFn = std::function<bool(std::string&)>;

ReebGraph loop_graph(double m, double uf, double df, double M) {
  ReebGraph g;
  g.add_vertex("m", m);
  g.add_vertex("u", uf);
  g.add_vertex("d", df);
  g.add_vertex("M", M);
  g.add_edge("m", "u");
  g.add_edge("u", "d", 2);
  g.add_edge("d", "M");
  return g;
}

std::vector<double> critical_values(const ReebGraph& g) {
  std::vector<double> out;
  for (const auto& [id, val] : g.vertices()) out.push_back(val);
  std::sort(out.begin(), out.end());
  return out;
}

bool multisets_close(const std::vector<double>& a, const std::vector<double>& b,
                     double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > tol) return false;
  return true;
}

int points_at_level(const ReebGraph& g, double level, double tol) {
  int count = 0;
  for (const auto& [id, val] : g.vertices())
    if (approx_eq(val, level, tol)) ++count;
  for (const auto& [key, mult] : g.edges()) {
    double lo = std::min(g.value(key.a), g.value(key.b));
    double hi = std::max(g.value(key.a), g.value(key.b));
    if (approx_lt(lo, level, tol) && approx_lt(level, hi, tol)) count += mult;
  }
  return count;
}

// Criterion 1. Transport-smoothing commutation on >= 1000 guard-passing
// instances within 1e-9, in under 60 seconds. Criterion 4's topology checks
// ride along on the same instances.
struct CommutationOutcome {
  bool commutation_ok = true;
  bool topology_ok = true;
  double seconds = 0.0;
  std::string detail;
};

CommutationOutcome run_commutation(std::size_t instances) {
  CommutationOutcome outcome;
  std::mt19937_64 rng(90001);
  std::uniform_real_distribution<double> eps_dist(0.05, 2.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  auto start = std::chrono::steady_clock::now();
  std::size_t tested = 0;
  while (tested < instances) {
    ReebGraph g = random_generic_graph(rng);
    double eps = eps_dist(rng);
    bool guarded = false;
    for (int attempt = 0; attempt < 20; ++attempt) {
      if (genericity_guard(g, eps).ok()) {
        guarded = true;
        break;
      }
      eps = eps_dist(rng);
    }
    if (!guarded) continue;
    double tau = frac(rng) * 2.0 * eps;
    ++tested;

    ExtendedDiagram before = extended_diagram(g);
    ReebGraph smoothed = smooth(g, eps);
    ReebGraph ts = truncate(smoothed, tau);
    ExtendedDiagram via_graph = extended_diagram(ts);
    ExtendedDiagram via_diagram = transport(before, {eps, tau});
    if (!diagram_equal(via_graph, via_diagram, 1e-9)) {
      outcome.commutation_ok = false;
      outcome.detail = "instance " + std::to_string(tested) + " diverged";
    }

    if (betti(smoothed).b0 != betti(g).b0) outcome.topology_ok = false;
    std::size_t long_loops = 0;
    for (const auto& p : before.of_kind(PairKind::Ext1))
      if (p.lifetime() > 2.0 * eps) ++long_loops;
    if (betti(smoothed).b1 != long_loops) outcome.topology_ok = false;
    if (tau < 2.0 * eps && betti(ts).b1 != betti(smoothed).b1)
      outcome.topology_ok = false;
  }
  outcome.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (outcome.seconds >= 60.0) {
    outcome.commutation_ok = false;
    outcome.detail += " runtime over budget";
  }
  return outcome;
}

bool criterion_oracle_equivalence(std::string& detail) {
  std::mt19937_64 rng(90002);
  GraphOptions options;
  options.min_vertices = 4;
  options.max_vertices = 10;
  for (std::size_t i = 0; i < 500; ++i) {
    ReebGraph g = random_generic_graph(rng, options);
    ExtendedDiagram fast = extended_diagram(g);
    if (!diagram_equal(fast, extended_diagram_oracle(g), 0.0)) {
      detail = "oracle mismatch at instance " + std::to_string(i);
      return false;
    }
    BettiNumbers b = betti(g);
    if (fast.count(PairKind::Ext0) != b.b0 || fast.count(PairKind::Ext1) != b.b1) {
      detail = "betti count mismatch at instance " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool criterion_critical_prediction(std::string& detail) {
  std::mt19937_64 rng(90003);
  std::uniform_real_distribution<double> eps_dist(0.05, 2.0);
  std::size_t tested = 0;
  while (tested < 500) {
    ReebGraph g = random_generic_graph(rng);
    double eps = eps_dist(rng);
    if (!genericity_guard(g, eps).ok()) continue;
    ++tested;
    ReebGraph s = smooth(g, eps);
    if (!genericity(s).generic()) {
      detail = "smoothed graph not generic at instance " + std::to_string(tested);
      return false;
    }
    if (!multisets_close(critical_values(s),
                         predict_critical_values(extended_diagram(g), {eps, 0.0}),
                         1e-9)) {
      detail = "critical set prediction failed at instance " + std::to_string(tested);
      return false;
    }
  }
  return true;
}

bool criterion_level_count(std::string& detail) {
  std::mt19937_64 rng(90004);
  std::uniform_real_distribution<double> eps_dist(0.05, 2.0);
  for (std::size_t i = 0; i < 200; ++i) {
    ReebGraph g = random_generic_graph(rng);
    double eps = eps_dist(rng);
    ReebGraph s = smooth(g, eps);
    double lo = 1e300, hi = -1e300;
    for (const auto& [id, val] : g.vertices()) {
      lo = std::min(lo, val);
      hi = std::max(hi, val);
    }
    std::uniform_real_distribution<double> level(lo - eps - 0.5, hi + eps + 0.5);
    for (int k = 0; k < 20; ++k) {
      double b = level(rng);
      if (points_at_level(s, b, kDefaultTolerance) !=
          band_components(g, b - eps, b + eps).component_count) {
        detail = "level count mismatch at instance " + std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

bool criterion_bottleneck(std::string& detail) {
  std::mt19937_64 rng(90005);
  for (std::size_t i = 0; i < 300; ++i) {
    ExtendedDiagram a = random_diagram(rng, 6);
    ExtendedDiagram b = random_diagram(rng, 6);
    if (bottleneck(a, b).distance != brute_force_bottleneck(a, b)) {
      detail = "brute-force mismatch at pair " + std::to_string(i);
      return false;
    }
  }
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::size_t tested = 0;
  while (tested < 300) {
    ExtendedDiagram d = random_single_kind_diagram(rng);
    double bound = shift_bound(d);
    if (!std::isfinite(bound) || bound <= 0.0) continue;
    ++tested;
    ShiftVector v{unit(rng) * bound, unit(rng) * bound};
    auto [moved, omega] = shift_diagram(d, v);
    if (moved.size() != d.size()) {
      detail = "shift within the bound dropped a point";
      return false;
    }
    if (std::fabs(bottleneck(d, moved).distance - v.magnitude()) > 1e-12) {
      detail = "shift matching not bottleneck-optimal at instance " +
               std::to_string(tested);
      return false;
    }
  }
  return true;
}

bool criterion_vineyard_roundtrip(std::string& detail) {
  std::mt19937_64 rng(90006);
  std::uniform_int_distribution<std::size_t> len_dist(1, 5);
  std::uniform_real_distribution<double> eps_dist(0.05, 0.8);
  std::uniform_real_distribution<double> frac(0.0, 0.95);
  std::size_t tested = 0;
  while (tested < 200) {
    ReebGraph g0 = random_generic_graph(rng);
    std::size_t steps = len_dist(rng);
    std::vector<ReebGraph> graphs{g0};
    std::vector<ExtendedDiagram> diagrams{extended_diagram(g0)};
    std::vector<TransportParams> generating;
    bool built = true;
    for (std::size_t s = 0; s < steps && built; ++s) {
      TransportParams p{0.0, 0.0};
      int attempts = 0;
      do {
        double eps = eps_dist(rng);
        p = {eps, frac(rng) * 2.0 * eps};
        if (++attempts > 50) {
          built = false;
          break;
        }
      } while (!genericity_guard(graphs.back(), p.epsilon).ok());
      if (!built) break;
      graphs.push_back(truncated_smooth(graphs.back(), p));
      diagrams.push_back(extended_diagram(graphs.back()));
      generating.push_back(p);
    }
    if (!built || diagrams.size() < 2) continue;
    ++tested;

    Realization r;
    try {
      r = realize(g0, Vineyard{diagrams, std::nullopt});
    } catch (const Error& e) {
      detail = "realize failed at instance " + std::to_string(tested) + ": " + e.what();
      return false;
    }
    for (std::size_t i = 0; i < diagrams.size(); ++i)
      if (!diagram_equal(extended_diagram(r.graphs[i]), diagrams[i],
                         10.0 * kDefaultTolerance)) {
        detail = "diagram not reproduced at index " + std::to_string(i);
        return false;
      }
    for (std::size_t s = 0; s < generating.size(); ++s) {
      auto candidates = recover_params(diagrams[s], diagrams[s + 1], 1e-9);
      bool found = false;
      for (const auto& c : candidates) {
        if (std::fabs(c.epsilon - generating[s].epsilon) <= 1e-9 &&
            std::fabs(c.tau - generating[s].tau) <= 1e-9)
          found = true;
        if (diagram_equal(transport(diagrams[s], c, 1e-9), diagrams[s + 1], 1e-9))
          found = true;
      }
      if (!found) {
        detail = "no recovered parameters at step " + std::to_string(s);
        return false;
      }
    }
  }
  return true;
}

bool criterion_worked_cases(std::string& detail) {
  if (!structurally_equal(smooth(make_g2(), 0.5), loop_graph(-0.5, 1.5, 2.5, 4.5))) {
    detail = "smooth(G2, 0.5)";
    return false;
  }
  if (!structurally_equal(smooth(make_g2(), 1.2), make_edge(-1.2, 5.2))) {
    detail = "smooth(G2, 1.2)";
    return false;
  }
  if (!structurally_equal(truncated_smooth(make_g4(), {1.0, 1.5}),
                          make_edge(0.5, 4.5))) {
    detail = "truncated_smooth(G4, (1, 1.5))";
    return false;
  }
  ExtendedDiagram g5_expected;
  g5_expected.add(PairKind::Ext0, 0.0, 5.0);
  g5_expected.add(PairKind::Ext1, 2.0, 3.0);
  g5_expected.add(PairKind::Ext1, 1.0, 4.0);
  if (!diagram_equal(extended_diagram(make_g5()), g5_expected, 0.0) ||
      !diagram_equal(extended_diagram_oracle(make_g5()), g5_expected, 0.0)) {
    detail = "diagram(G5)";
    return false;
  }
  return true;
}

class TempDir {
public:
  TempDir()
      : path_(std::filesystem::temp_directory_path() / "reeb_acceptance_cli") {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& content) const {
    std::string full = (path_ / name).string();
    std::ofstream f(full, std::ios::binary);
    f << content;
    return full;
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
  std::filesystem::path path_;
};

int run_cli(const std::vector<std::string>& args, std::string& out_text) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  out_text = out.str();
  return code;
}

bool criterion_cli_roundtrips(std::string& detail) {
  std::mt19937_64 rng(90007);
  for (std::size_t i = 0; i < 100; ++i) {
    ReebGraph g = random_generic_graph(rng);
    if (!structurally_equal(parse_graph(serialize_graph(g)), g, 0.0)) {
      detail = "graph round trip failed at instance " + std::to_string(i);
      return false;
    }
    ExtendedDiagram d = random_diagram(rng);
    if (!diagram_equal(parse_diagram(serialize_diagram(d)), d, 0.0)) {
      detail = "diagram round trip failed at instance " + std::to_string(i);
      return false;
    }
  }

  TempDir dir;
  ExtendedDiagram d0 = extended_diagram(make_g2());
  std::string d_path = dir.write("d.dgm", serialize_diagram(d0));
  std::string moved_text;
  if (run_cli({"transport", d_path, "--epsilon", "0.5", "--tau", "0.25"},
              moved_text) != 0) {
    detail = "cli transport failed";
    return false;
  }
  std::string moved_path = dir.write("moved.dgm", moved_text);
  std::string recovered;
  if (run_cli({"recover", d_path, moved_path}, recovered) != 0) {
    detail = "cli recover failed";
    return false;
  }
  bool found = false;
  std::istringstream lines(recovered);
  double eps = 0.0, tau = 0.0;
  while (lines >> eps >> tau)
    if (std::fabs(eps - 0.5) <= 1e-9 && std::fabs(tau - 0.25) <= 1e-9) found = true;
  if (!found) {
    detail = "pipeline did not recover (0.5, 0.25)";
    return false;
  }

  std::string ignored;
  std::string svg1 = dir.file("p1.svg"), svg2 = dir.file("p2.svg");
  if (run_cli({"plot", d_path, "--out", svg1}, ignored) != 0 ||
      run_cli({"plot", d_path, "--out", svg2}, ignored) != 0) {
    detail = "cli plot failed";
    return false;
  }
  std::ifstream f1(svg1, std::ios::binary), f2(svg2, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  if (s1.str() != s2.str() || s1.str().empty()) {
    detail = "svg bytes not deterministic";
    return false;
  }
  return true;
}

} // namespace

int main() {
  bool all_ok = true;
  auto report = [&](int id, const std::string& name, bool ok,
                    const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " " << id << " " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) all_ok = false;
  };

  CommutationOutcome commutation = run_commutation(1000);
  {
    std::ostringstream detail;
    detail << "1000 instances, " << commutation.seconds << " s";
    if (!commutation.detail.empty()) detail << ", " << commutation.detail;
    report(1, "transport-smoothing commutation", commutation.commutation_ok,
           detail.str());
  }

  std::string detail;
  detail.clear();
  report(2, "persistence oracle equivalence", criterion_oracle_equivalence(detail),
         detail);
  detail.clear();
  report(3, "smoothed critical set prediction", criterion_critical_prediction(detail), detail);
  report(4, "topology preservation", commutation.topology_ok,
         "checked on criterion-1 instances");
  detail.clear();
  report(5, "level-count oracle", criterion_level_count(detail), detail);
  detail.clear();
  report(6, "bottleneck exactness and shift optimality", criterion_bottleneck(detail),
         detail);
  detail.clear();
  report(7, "vineyard round-trip", criterion_vineyard_roundtrip(detail), detail);
  detail.clear();
  report(8, "worked fixed cases", criterion_worked_cases(detail), detail);
  detail.clear();
  report(9, "cli round-trips", criterion_cli_roundtrips(detail), detail);

  return all_ok ? 0 : 1;
}
