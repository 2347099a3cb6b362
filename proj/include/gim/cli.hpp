#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gim::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;  ///< a certificate or replay check failed
inline constexpr int kInputError = 2;
inline constexpr int kNotFound = 3;
inline constexpr int kBudgetExhausted = 4;
inline constexpr int kInternalError = 5;

/// Runs one command line (without the program name). JSON results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gim::cli
