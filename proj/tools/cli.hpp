#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reeb::cli {

// Runs the command line tool against explicit streams. Exit codes: 0 success,
// 1 domain failure (bad input data, inadmissible vineyard, mismatch), 2 usage
// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace reeb::cli
