#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "reeb/reeb.hpp"
#include "reeb/value_format.hpp"

namespace reeb::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

double resolve_tolerance(const std::optional<double>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("REEB_TOL")) {
    double value = 0.0;
    const char* end = env + std::string(env).size();
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || !(value >= 0.0))
      throw CLI::ValidationError("REEB_TOL", "REEB_TOL is not a valid tolerance");
    return value;
  }
  return kDefaultTolerance;
}

// Diagram files start with a kind tag, graph files with v/e lines.
bool looks_like_diagram(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token) || token.front() == '#') continue;
    return kind_from_name(token).has_value();
  }
  return true; // empty input: plot an empty diagram
}

void emit_params_comment(std::ostream& out, const TransportParams& p) {
  out << "# eps " << format_value(p.epsilon) << " tau " << format_value(p.tau)
      << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reeb graph smoothing, extended persistence, and vineyard realization"};
  app.require_subcommand(1);
  app.fallthrough(); // --tol may follow the subcommand

  std::optional<double> tol_flag;
  app.add_option("--tol", tol_flag, "absolute value tolerance (default 1e-9)");

  std::string graph_path, graph2_path, diagram_path, diagram2_path, vineyard_path;
  std::string input_path, output_path;
  double epsilon = 0.0, tau = 0.0, t_param = 0.0;
  std::size_t steps = 0;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a graph file");
  validate_cmd->add_option("graph", graph_path)->required();

  CLI::App* diagram_cmd =
      app.add_subcommand("diagram", "extended persistence diagram of a graph");
  diagram_cmd->add_option("graph", graph_path)->required();

  CLI::App* smooth_cmd = app.add_subcommand("smooth", "epsilon-smooth a graph");
  smooth_cmd->add_option("graph", graph_path)->required();
  smooth_cmd->add_option("--epsilon", epsilon)->required();
  CLI::Option* smooth_tau = smooth_cmd->add_option("--tau", tau);

  CLI::App* truncate_cmd = app.add_subcommand("truncate", "tau-truncate a graph");
  truncate_cmd->add_option("graph", graph_path)->required();
  truncate_cmd->add_option("--tau", tau)->required();

  CLI::App* transport_cmd =
      app.add_subcommand("transport", "transport a diagram under (epsilon, tau)");
  transport_cmd->add_option("diagram", diagram_path)->required();
  transport_cmd->add_option("--epsilon", epsilon)->required();
  transport_cmd->add_option("--tau", tau)->required();

  CLI::App* bottleneck_cmd =
      app.add_subcommand("bottleneck", "bottleneck distance between diagrams");
  bottleneck_cmd->add_option("diagram1", diagram_path)->required();
  bottleneck_cmd->add_option("diagram2", diagram2_path)->required();

  CLI::App* recover_cmd =
      app.add_subcommand("recover", "recover (epsilon, tau) between diagrams");
  recover_cmd->add_option("diagram1", diagram_path)->required();
  recover_cmd->add_option("diagram2", diagram2_path)->required();

  CLI::App* realize_cmd =
      app.add_subcommand("realize", "realize a vineyard from an initial graph");
  realize_cmd->add_option("graph", graph_path)->required();
  realize_cmd->add_option("vineyard", vineyard_path)->required();
  CLI::Option* steps_opt = realize_cmd->add_option("--steps", steps);

  CLI::App* interpolate_cmd =
      app.add_subcommand("interpolate", "partial truncated smoothing step");
  interpolate_cmd->add_option("graph", graph_path)->required();
  interpolate_cmd->add_option("--epsilon", epsilon)->required();
  interpolate_cmd->add_option("--tau", tau)->required();
  interpolate_cmd->add_option("--t", t_param)->required();

  CLI::App* plot_cmd = app.add_subcommand("plot", "render a diagram or graph as SVG");
  plot_cmd->add_option("input", input_path)->required();
  plot_cmd->add_option("--out", output_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    double tol = resolve_tolerance(tol_flag);

    if (*validate_cmd) {
      ReebGraph g = parse_graph(read_file(graph_path), tol);
      (void)g;
      return 0;
    }
    if (*diagram_cmd) {
      ReebGraph g = parse_graph(read_file(graph_path), tol);
      out << serialize_diagram(extended_diagram(g, tol));
      return 0;
    }
    if (*smooth_cmd) {
      ReebGraph g = parse_graph(read_file(graph_path), tol);
      ReebGraph result = smooth_tau->count() > 0
                             ? truncated_smooth(g, {epsilon, tau}, tol)
                             : smooth(g, epsilon, tol);
      out << serialize_graph(result);
      return 0;
    }
    if (*truncate_cmd) {
      ReebGraph g = parse_graph(read_file(graph_path), tol);
      out << serialize_graph(truncate(g, tau, tol));
      return 0;
    }
    if (*transport_cmd) {
      ExtendedDiagram d = parse_diagram(read_file(diagram_path));
      out << serialize_diagram(transport(d, {epsilon, tau}, tol));
      return 0;
    }
    if (*bottleneck_cmd) {
      ExtendedDiagram a = parse_diagram(read_file(diagram_path));
      ExtendedDiagram b = parse_diagram(read_file(diagram2_path));
      out << format_value(bottleneck(a, b).distance) << "\n";
      return 0;
    }
    if (*recover_cmd) {
      ExtendedDiagram a = parse_diagram(read_file(diagram_path));
      ExtendedDiagram b = parse_diagram(read_file(diagram2_path));
      for (const auto& p : recover_params(a, b, tol))
        out << format_value(p.epsilon) << " " << format_value(p.tau) << "\n";
      return 0;
    }
    if (*realize_cmd) {
      ReebGraph g0 = parse_graph(read_file(graph_path), tol);
      Vineyard v = parse_vineyard(read_file(vineyard_path));
      Realization r = realize(g0, v, RealizeOptions{tol, /*allow_identity=*/false});
      if (steps_opt->count() > 0) {
        auto samples = sample_path(r, steps, tol);
        for (std::size_t i = 0; i < samples.size(); ++i) {
          if (i > 0) out << "---\n";
          out << "# t " << format_value(samples[i].time) << "\n";
          out << serialize_graph(samples[i].graph);
        }
      } else {
        for (std::size_t i = 0; i < r.graphs.size(); ++i) {
          if (i > 0) {
            out << "---\n";
            emit_params_comment(out, r.params[i - 1]);
          }
          out << serialize_graph(r.graphs[i]);
        }
      }
      return 0;
    }
    if (*interpolate_cmd) {
      ReebGraph g = parse_graph(read_file(graph_path), tol);
      out << serialize_graph(interpolate(g, {epsilon, tau}, t_param, tol));
      return 0;
    }
    if (*plot_cmd) {
      std::string text = read_file(input_path);
      std::string svg = looks_like_diagram(text) ? plot_diagram(parse_diagram(text))
                                                 : plot_graph(parse_graph(text, tol), tol);
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw Error("cannot write " + output_path);
      file << svg;
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 1;
  }
  err << "no command executed\n";
  return 2;
}

} // namespace reeb::cli
