#pragma once

#include <ostream>

#include "qpr/cli/job.hpp"
#include "qpr/cli/output.hpp"

namespace qpr::cli {

/// Runs the library operation a config maps to.
Table run_job(const JobConfig& config);

/// Parses argv, runs the job and writes the artifact. Returns 0 on success,
/// 1 for invalid input and 2 when a numerical cap is hit; diagnostics go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpr::cli
