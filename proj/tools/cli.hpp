#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conlat::cli {

/// Runs one command line (without the program name) and writes its output.
/// Returns 0 on success, 2 for an undefined join and 1 on any error.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace conlat::cli
