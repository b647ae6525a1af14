#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pego/criteria.hpp"

namespace pego::cli {

enum class Command { Verify, Transform, Criteria, Diagnose, Chains, Sweep };

struct RunConfig {
  Command command = Command::Verify;
  std::string family;           // catalog name, or "random"
  std::string dsl_path;         // family/function DSL file; exclusive with family
  std::optional<double> x;      // order override
  double eps = 1e-2;
  double dt = 1e-3;
  double t_max = 40.0;
  std::optional<double> dy;
  std::optional<double> y_max;
  std::vector<double> scales;   // sweep command only
  std::string criterion;        // sweep command only
  int threads = 0;              // 0: PEGO_LAB_THREADS or 1
  std::uint64_t seed = 0;
  int size = 20;
  std::string out;              // empty: stdout
  std::string format = "json";  // json | csv
  bool assert_compact = false;
};

/// Parse argv into a RunConfig; throws Error(Config) on bad flags.
RunConfig parse(int argc, const char* const* argv);

/// Execute: 0 success, 1 configuration/runtime error, 2 assert-compact violated.
int run(const RunConfig& config);

int main_entry(int argc, const char* const* argv);

}  // namespace pego::cli
