#include "reeb/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "reeb/value_format.hpp"

namespace reeb {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string field;
  while (is >> field) out.push_back(field);
  return out;
}

bool blank_or_comment(const std::vector<std::string>& fields) {
  return fields.empty() || fields.front().front() == '#';
}

double parse_value(const std::string& token, std::size_t line) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, "bad value '" + token + "'");
  if (!std::isfinite(value))
    throw ParseError(line, "non-finite value '" + token + "'");
  return value;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

} // namespace

ReebGraph parse_graph(const std::string& text, double tol) {
  ReebGraph g;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t line_no = i + 1;
    auto fields = split_fields(lines[i]);
    if (blank_or_comment(fields)) continue;
    if (fields[0] == "v") {
      if (fields.size() != 3) throw ParseError(line_no, "expected `v <id> <value>`");
      if (g.has_vertex(fields[1]))
        throw ParseError(line_no, "duplicate vertex id " + fields[1]);
      g.add_vertex(fields[1], parse_value(fields[2], line_no));
    } else if (fields[0] == "e") {
      if (fields.size() != 3) throw ParseError(line_no, "expected `e <id1> <id2>`");
      g.add_edge(fields[1], fields[2]);
    } else {
      throw ParseError(line_no, "unknown line tag '" + fields[0] + "'");
    }
  }
  // Surface structural problems, attributed to the first edge line that
  // mentions an offending endpoint.
  ValidationReport report = validate(g, tol);
  if (!report.valid()) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      auto fields = split_fields(lines[i]);
      if (blank_or_comment(fields) || fields[0] != "e") continue;
      for (const auto& violation : report.violations)
        if (violation.detail.find(fields[1]) != std::string::npos ||
            violation.detail.find(fields[2]) != std::string::npos)
          throw ParseError(i + 1, violation.detail);
    }
    throw ParseError(1, report.violations.front().detail);
  }
  return g;
}

std::string serialize_graph(const ReebGraph& g) {
  std::ostringstream os;
  std::vector<std::pair<std::pair<double, VertexId>, VertexId>> order;
  for (const auto& [id, val] : g.vertices()) order.push_back({{val, id}, id});
  std::sort(order.begin(), order.end());
  for (const auto& [key, id] : order)
    os << "v " << id << " " << format_value(key.first) << "\n";
  for (const auto& [key, mult] : g.edges())
    for (int c = 0; c < mult; ++c) os << "e " << key.a << " " << key.b << "\n";
  return os.str();
}

ExtendedDiagram parse_diagram(const std::string& text) {
  ExtendedDiagram d;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t line_no = i + 1;
    auto fields = split_fields(lines[i]);
    if (blank_or_comment(fields)) continue;
    auto kind = kind_from_name(fields[0]);
    if (!kind) throw ParseError(line_no, "unknown point kind '" + fields[0] + "'");
    if (fields.size() != 3)
      throw ParseError(line_no, "expected `<kind> <low> <high>`");
    double low = parse_value(fields[1], line_no);
    double high = parse_value(fields[2], line_no);
    if (!(low < high)) throw ParseError(line_no, "requires low < high");
    d.add(*kind, low, high);
  }
  return d;
}

std::string serialize_diagram(const ExtendedDiagram& d) {
  std::ostringstream os;
  for (const auto& p : sorted_points(d))
    os << kind_name(p.kind) << " " << format_value(p.low) << " "
       << format_value(p.high) << "\n";
  return os.str();
}

Vineyard parse_vineyard(const std::string& text) {
  Vineyard v;
  auto lines = split_lines(text);
  std::string block;
  std::size_t block_first_line = 1;
  auto flush = [&]() {
    try {
      v.diagrams.push_back(parse_diagram(block));
    } catch (const ParseError& e) {
      throw ParseError(block_first_line + e.line() - 1, e.message());
    }
    block.clear();
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i] == "---") {
      flush();
      block_first_line = i + 2;
    } else {
      block += lines[i];
      block += "\n";
    }
  }
  flush();
  return v;
}

std::string serialize_vineyard(const Vineyard& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.diagrams.size(); ++i) {
    if (i > 0) os << "---\n";
    os << serialize_diagram(v.diagrams[i]);
  }
  return os.str();
}

} // namespace reeb
