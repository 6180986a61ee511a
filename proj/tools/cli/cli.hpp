#pragma once

#include <iosfwd>

namespace geoformal::cli {

/// Process exit codes. Every command returns exactly one of these.
enum ExitCode : int {
  kOk = 0,
  kFindings = 1,      // parse diagnostics or checker errors
  kUsage = 2,         // I/O failure, bad arguments, malformed JSONL
  kMixedDomains = 3,  // corpus mixes domains and no --domain filter was given
  kBadReference = 4,
  kBadConfig = 5,
};

/// Runs `geoformal <command> ...` against the given streams.
/// `serve` blocks until SIGINT or SIGTERM.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geoformal::cli
