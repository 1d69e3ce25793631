#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "geoburn/approx.hpp"
#include "geoburn/bench.hpp"
#include "geoburn/burning.hpp"

// Subcommands of the geoburn tool. Each returns the process exit code and
// writes to the given streams, so tests can drive them without a process.
namespace geoburn::cli {

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kCapExceeded = 2;
inline constexpr int kVerifyFailed = 3;

struct GenOptions {
  GeneratorSpec generator;
  std::optional<std::string> out;  // stdout when empty
};

struct SolveOptions {
  std::string instance;
  Model model = Model::Point;
  std::string method = "exact";
  Subsolver subsolver = Subsolver::Exact;
  /// Defaults to 0 for the exact sub-solver and kHeuristicEpsilon otherwise.
  std::optional<double> epsilon;
  std::optional<int> bmax;
  std::optional<std::string> out;  // schedule file
};

inline constexpr double kHeuristicEpsilon = 0.5;

struct VerifyOptions {
  std::string instance;
  std::string schedule;
  int steps = 0;
  /// Used when the schedule file has no model header.
  Model model = Model::Point;
};

struct BenchOptions {
  std::optional<std::string> spec_path;
  BenchSpec spec;
  int jobs = 1;
  bool timing = true;
  std::optional<std::string> out;      // CSV, stdout when empty
  std::optional<std::string> summary;  // Markdown table
};

struct RenderOptions {
  std::string instance;
  std::string schedule;
  int steps = 0;
  Model model = Model::Point;
  std::string out;
};

struct SummarizeOptions {
  std::string csv;
  std::optional<std::string> out;
};

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err);
int cmd_render(const RenderOptions& o, std::ostream& out, std::ostream& err);
int cmd_summarize(const SummarizeOptions& o, std::ostream& out, std::ostream& err);

}  // namespace geoburn::cli
