#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcgc {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

/// Runs one mcgc command line. Returns 0 on success, 1 on a domain error
/// and 2 on a usage error. Data goes to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace mcgc
