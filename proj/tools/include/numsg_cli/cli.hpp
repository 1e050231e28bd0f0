#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numsg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;  // bad flags, domain errors, failed checks
inline constexpr int kWilfViolation = 2;

// args excludes the program name. All output goes to `out`, diagnostics to
// `err`; nothing touches the process streams, so tests can compare bytes.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace numsg::cli
