#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geoburn/geometry.hpp"

namespace geoburn {

/// Seeded source of randomness for all generators: std::mt19937_64 words
/// mapped to doubles with 53-bit resolution, normals by Box-Muller. No
/// library distributions are involved, so output depends only on the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

PointSet gen_uniform(std::size_t n, std::uint64_t seed, double box);
PointSet gen_clustered(std::size_t n, std::size_t clusters, std::uint64_t seed, double box, double spread);
PointSet gen_grid(std::size_t rows, std::size_t cols, double pitch);

/// Paths laid left to right on the x axis with unit spacing, consecutive
/// paths separated by a gap of 2n+1 where n is the total vertex count.
PointSet gen_path_forest(std::span<const int> path_lengths);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadedInstance {
  PointSet points;
  std::size_t duplicates_removed = 0;
};

/// Text format: first non-comment line is n, then n lines "x y".
/// Lines starting with '#' and blank lines are ignored.
LoadedInstance read_instance(std::istream& in);
LoadedInstance load(const std::filesystem::path& path);

/// Writes the text format with 9 significant digits.
void write_instance(std::ostream& out, const PointSet& P);
void save(const PointSet& P, const std::filesystem::path& path);

/// Formats a coordinate the way the instance and schedule files do.
std::string format_coordinate(double v);

}  // namespace geoburn
