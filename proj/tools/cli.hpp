#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liegc::cli {

// exit codes: 0 pass/success, 1 mathematical failure, 2 invalid input,
// 3 inconclusive (theorem hypothesis not satisfied)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liegc::cli
