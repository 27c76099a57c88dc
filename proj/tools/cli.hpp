#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "outerspatial/decider.hpp"

namespace outerspatial::cli {

enum ExitCode : int {
  kOuterspatial = 0,
  kNotOuterspatial = 1,
  kHypothesisViolated = 2,
  kUsage = 3,
  kCapExceeded = 4,
  kInputError = 5,
};

int exit_code(const Verdict& verdict);

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace outerspatial::cli
