#pragma once

#include <string>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"
#include "reeb/vineyard.hpp"

namespace reeb {

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::string message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line),
        message_(std::move(message)) {}
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

private:
  std::size_t line_;
  std::string message_;
};

// Graph files: `v <id> <value>` and `e <id1> <id2>` lines (an edge line per
// multiplicity copy), `#` comments. Parsing validates the graph; values must
// be finite decimals.
ReebGraph parse_graph(const std::string& text, double tol = kDefaultTolerance);
std::string serialize_graph(const ReebGraph& g);

// Diagram files: `<kind> <low> <high>` with kind in {ext0, ord0, rel1, ext1}
// and low < high per line.
ExtendedDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const ExtendedDiagram& d);

// Vineyard files: diagram blocks separated by lines containing exactly `---`.
Vineyard parse_vineyard(const std::string& text);
std::string serialize_vineyard(const Vineyard& v);

} // namespace reeb
