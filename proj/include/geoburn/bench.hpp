#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "geoburn/approx.hpp"
#include "geoburn/burning.hpp"
#include "geoburn/geometry.hpp"

namespace geoburn {

enum class Family { Uniform, Clustered, Grid, PathForest };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

/// One family entry of a benchmark. `count` instances are drawn with seeds
/// seed, seed+1, ...; grid and explicit path lists yield a single instance.
struct GeneratorSpec {
  Family family = Family::Uniform;
  int count = 1;
  int n = 8;
  std::uint64_t seed = 1;
  double box = 4.0;
  int clusters = 2;
  double spread = 0.5;
  int rows = 2;
  int cols = 2;
  double pitch = 1.0;
  /// Explicit path forest; when empty, lengths are a seeded random
  /// composition of n.
  std::vector<int> path_lengths;
};

struct NamedInstance {
  std::string id;  // "<family>-..." so the family is recoverable
  PointSet points;
};

/// Expands a generator entry into its instances.
std::vector<NamedInstance> generate(const GeneratorSpec& g);

/// Seeded random composition of n into positive parts.
std::vector<int> random_path_lengths(int n, std::uint64_t seed);

struct BenchSpec {
  std::vector<GeneratorSpec> instances;
  std::vector<Model> models{Model::Point};
  std::vector<std::string> methods{"exact", "approx"};
  ApproxConfig approx;
  /// Exact optima are computed only up to this many points.
  int exact_cap = 10;

  /// Missing keys keep their defaults; "{}" is an empty benchmark.
  static BenchSpec from_json(const std::string& text);
};

struct RunRecord {
  std::string instance;
  Model model = Model::Point;
  std::string method;
  std::string subsolver;  // "-" for exact runs
  int steps = 0;
  std::optional<int> optimum;
  std::optional<double> ratio;
  double millis = 0.0;

  std::string family() const;
};

/// Runs every (instance, model, method). Instances are solved on up to
/// `jobs` threads; rows come back in instance order.
std::vector<RunRecord> run_bench(const BenchSpec& spec, int jobs = 1);

inline constexpr const char* kCsvHeader = "instance,model,method,subsolver,steps,optimum,ratio,millis";

void write_csv(std::ostream& out, const std::vector<RunRecord>& rows, bool with_timing = true);
/// Throws ParseError on malformed rows.
std::vector<RunRecord> read_csv(std::istream& in);

struct SummaryRow {
  std::size_t count = 0;
  std::optional<double> mean_ratio;
  std::optional<double> max_ratio;
  double mean_steps = 0.0;
  std::optional<double> mean_optimum;
};

/// Key: family, model, method, subsolver.
using SummaryKey = std::tuple<std::string, std::string, std::string, std::string>;
using Summary = std::map<SummaryKey, SummaryRow>;

Summary summarize(const std::vector<RunRecord>& records);
void write_markdown(std::ostream& out, const Summary& s);

}  // namespace geoburn
