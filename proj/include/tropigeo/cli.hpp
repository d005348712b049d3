#pragma once

#include <string>
#include <vector>

namespace tropigeo {

// Command-line entry point. Exit status: 0 success (and true predicates),
// 1 false predicate, 2 input/parse error, 3 domain error.
int run_cli(const std::vector<std::string>& args);

}  // namespace tropigeo
