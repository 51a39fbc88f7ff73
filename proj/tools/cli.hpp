#pragma once

// Command-line front end. run() is pure apart from the optional output file
// and never calls exit, so it can be tested in-process.

#include <optional>
#include <string>
#include <vector>

#include "rigidity/euclid.hpp"

namespace rigidity::cli {

struct RunConfig {
  std::string command;  ///< rd, table, verify, rigdim, hammock
  std::string delta;    ///< A, D or E
  std::optional<int> rank;
  std::optional<std::string> u;  ///< exact rational, e.g. "17/8"
  std::optional<Int> n;          ///< raw τ-shift instead of u
  int s = 1;
  std::optional<std::string> t;
  Int x = 0;
  std::optional<Int> horizon;
  std::optional<int> rank_max;
  std::optional<Int> n_max;
  std::optional<Int> u_max;
  bool plus = false;  ///< hammock: H^+ instead of H^-
  std::string format = "text";  ///< json, csv, dot, text
  bool dot = false;
  std::optional<std::string> output;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidType = 2;

RunResult run(const RunConfig& config);

/// Parses argv, runs, writes the output. Returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace rigidity::cli
