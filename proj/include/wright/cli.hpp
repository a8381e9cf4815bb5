#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace wright {

/// Parses "a..b" with a <= b; std::invalid_argument otherwise.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Recomputes every table in the golden directory and compares exactly.
std::vector<CheckResult> run_golden_suite(const std::filesystem::path& dir);

std::filesystem::path default_golden_dir();

/// Exit codes: 0 success, 1 a check failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wright
