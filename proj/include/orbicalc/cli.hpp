#pragma once

// The orbicalc command line: one subcommand per process, JSON documents of the form
// {schema, result, manifest} on stdout (or --out), structured error records on stderr.

#include <string>
#include <vector>

namespace orbicalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct Outcome {
  int status = kExitOk;
  std::string out;
  std::string err;
};

/// args excludes the program name.
Outcome run(const std::vector<std::string>& args);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

std::string version();

}  // namespace orbicalc::cli
