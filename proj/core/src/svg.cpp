#include "reeb/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "reeb/value_format.hpp"

namespace reeb {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 60.0;

std::string num(double v) {
  // Round to a fixed grid so layout arithmetic cannot leak nondeterminism
  // into the byte stream.
  double snapped = std::round(v * 100.0) / 100.0;
  if (snapped == 0.0) snapped = 0.0; // normalize -0
  return format_value(snapped);
}

const char* kind_color(PairKind k) {
  switch (k) {
    case PairKind::Ext0: return "#1f77b4";
    case PairKind::Ord0: return "#2ca02c";
    case PairKind::Rel1: return "#ff7f0e";
    case PairKind::Ext1: return "#d62728";
  }
  return "#000000";
}

void marker(std::ostringstream& os, PairKind kind, double x, double y) {
  const char* color = kind_color(kind);
  switch (kind) {
    case PairKind::Ext0:
      os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
         << "\" r=\"5\" fill=\"" << color << "\"/>\n";
      break;
    case PairKind::Ord0:
      os << "<rect x=\"" << num(x - 4.5) << "\" y=\"" << num(y - 4.5)
         << "\" width=\"9\" height=\"9\" fill=\"" << color << "\"/>\n";
      break;
    case PairKind::Rel1:
      os << "<polygon points=\"" << num(x) << "," << num(y - 5.5) << " "
         << num(x - 5) << "," << num(y + 4.5) << " " << num(x + 5) << ","
         << num(y + 4.5) << "\" fill=\"" << color << "\"/>\n";
      break;
    case PairKind::Ext1:
      os << "<polygon points=\"" << num(x) << "," << num(y - 6) << " "
         << num(x + 6) << "," << num(y) << " " << num(x) << "," << num(y + 6)
         << " " << num(x - 6) << "," << num(y) << "\" fill=\"" << color
         << "\"/>\n";
      break;
  }
}

std::string header(double width, double height) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << num(width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
     << num(width) << " " << num(height) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

} // namespace

std::string plot_diagram(const ExtendedDiagram& d) {
  double lo = 0.0, hi = 1.0;
  if (!d.empty()) {
    lo = d.points.front().low;
    hi = d.points.front().high;
    for (const auto& p : d.points) {
      lo = std::min(lo, p.low);
      hi = std::max(hi, p.high);
    }
  }
  double pad = (hi - lo) * 0.1;
  if (pad <= 0.0) pad = 0.5;
  lo -= pad;
  hi += pad;
  double scale = (kCanvas - 2 * kMargin) / (hi - lo);
  auto sx = [&](double v) { return kMargin + (v - lo) * scale; };
  auto sy = [&](double v) { return kCanvas - kMargin - (v - lo) * scale; };

  std::ostringstream os;
  os << header(kCanvas, kCanvas);
  os << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin)
     << "\" width=\"" << num(kCanvas - 2 * kMargin) << "\" height=\""
     << num(kCanvas - 2 * kMargin)
     << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << num(sx(lo)) << "\" y1=\"" << num(sy(lo)) << "\" x2=\""
     << num(sx(hi)) << "\" y2=\"" << num(sy(hi))
     << "\" stroke=\"#999999\" stroke-dasharray=\"5,4\"/>\n";
  for (const auto& p : sorted_points(d)) marker(os, p.kind, sx(p.low), sy(p.high));
  os << "</svg>\n";
  return os.str();
}

std::string plot_graph(const ReebGraph& g, double tol) {
  std::ostringstream os;
  if (g.empty()) {
    os << header(kCanvas, kCanvas) << "</svg>\n";
    return os.str();
  }

  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& [id, val] : g.vertices()) {
    lo = first ? val : std::min(lo, val);
    hi = first ? val : std::max(hi, val);
    first = false;
  }
  if (hi - lo <= tol) hi = lo + 1.0;

  // Barycentric layout: vertices start in (value, id) order and then relax
  // toward their neighborhood average a fixed number of rounds.
  std::vector<VertexId> order;
  for (const auto& [id, val] : g.vertices()) order.push_back(id);
  std::sort(order.begin(), order.end(), [&](const VertexId& a, const VertexId& b) {
    if (g.value(a) != g.value(b)) return g.value(a) < g.value(b);
    return a < b;
  });
  std::map<VertexId, double> x;
  for (std::size_t i = 0; i < order.size(); ++i)
    x[order[i]] = static_cast<double>(i % 7) / 7.0;
  for (int round = 0; round < 40; ++round) {
    std::map<VertexId, double> next = x;
    for (const auto& id : order) {
      double sum = 0.0;
      int count = 0;
      for (const auto& n : lower_neighbors(g, id)) { sum += x.at(n); ++count; }
      for (const auto& n : upper_neighbors(g, id)) { sum += x.at(n); ++count; }
      if (count > 0) next[id] = 0.5 * x.at(id) + 0.5 * (sum / count);
    }
    x = std::move(next);
  }
  // Spread vertices sharing a level so markers do not overlap.
  std::map<VertexId, double> spread = x;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (approx_eq(g.value(order[i]), g.value(order[j]), tol) &&
          std::fabs(spread[order[i]] - spread[order[j]]) < 0.05)
        spread[order[j]] += 0.08 * static_cast<double>(j - i);
  x = spread;

  double xmin = x.at(order.front()), xmax = xmin;
  for (const auto& [id, v] : x) {
    xmin = std::min(xmin, v);
    xmax = std::max(xmax, v);
  }
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;

  double width = kCanvas, height = kCanvas;
  auto sx = [&](double v) {
    return kMargin + (v - xmin) / (xmax - xmin) * (width - 2 * kMargin);
  };
  auto sy = [&](double v) {
    return height - kMargin - (v - lo) / (hi - lo) * (height - 2 * kMargin);
  };

  os << header(width, height);
  for (const auto& [key, mult] : g.edges()) {
    double x1 = sx(x.at(key.a)), y1 = sy(g.value(key.a));
    double x2 = sx(x.at(key.b)), y2 = sy(g.value(key.b));
    for (int c = 0; c < mult; ++c) {
      double bow = (static_cast<double>(c) - (mult - 1) / 2.0) * 28.0;
      os << "<path d=\"M " << num(x1) << " " << num(y1) << " Q "
         << num((x1 + x2) / 2.0 + bow) << " " << num((y1 + y2) / 2.0) << " "
         << num(x2) << " " << num(y2)
         << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const auto& id : order) {
    os << "<circle cx=\"" << num(sx(x.at(id))) << "\" cy=\""
       << num(sy(g.value(id))) << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    os << "<text x=\"" << num(sx(x.at(id)) + 7) << "\" y=\""
       << num(sy(g.value(id)) - 5) << "\" font-size=\"11\" fill=\"#555555\">"
       << format_value(g.value(id)) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace reeb
