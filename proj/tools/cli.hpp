#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rlcm/semigroup.hpp"

namespace rlcm::cli {

/// Runs one command line (argv[0] is the program name). Returns 0, 1 when a
/// check reported FAIL, or 2 on parse errors and unknown selectors/models.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `RESULT <PASS|FAIL|UNDECIDED> <suite> compared=.. skipped=.. failed=..`
/// followed by up to ten witnesses, sorted.
std::string report_line(const CheckReport& r);

}  // namespace rlcm::cli
