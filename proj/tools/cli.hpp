// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracspec/rational.hpp"
#include "fracspec/selfsim.hpp"

namespace fracspec::cli {

enum class Command { bounds, inertia, moments, sample, oracle };
enum class OutputFormat { table, json, csv };

struct RunConfig {
  std::string parameter_file;
  Command command = Command::bounds;
  int n_first = 1;
  int n_last = 1;
  Rational width_tol = Rational(BigInt(1), BigInt(100));
  bool relative_tol = false;
  Rational lambda_max = Rational(10000);
  int m_max = 0;
  bool negative = false;
  OutputFormat format = OutputFormat::table;
  std::size_t size_cap = kDefaultSizeCap;
  // oracle
  int mesh_level = 8;
  // sample
  int iterations = 8;
  int grid = 256;
  // inertia
  Rational lambda = Rational(1);
  int level = 1;
  Rational epsilon = Rational(0);
  std::string dump_matrix;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUncertified = 2;

/// Executes one command. Reports go to `out`, diagnostics to `err`.
/// bounds: 0 when every bracket is certified, 2 otherwise; 1 on input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses "A..B" or "A" into an inclusive index range.
std::pair<int, int> parse_index_range(const std::string& text);

/// Full command line (without the program name): parse, then run.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracspec::cli
