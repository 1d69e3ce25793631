#include "geoburn/instances.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace geoburn {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal(double mean, double stddev) {
  // 1 - u keeps the log argument in (0, 1]
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return mean + stddev * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

PointSet gen_uniform(std::size_t n, std::uint64_t seed, double box) {
  if (n < 1) throw std::invalid_argument("gen_uniform: n must be positive");
  if (!(box > 0.0)) throw std::invalid_argument("gen_uniform: box must be positive");
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, box);
    const double y = rng.uniform(0.0, box);
    pts.push_back({x, y});
  }
  return PointSet(std::move(pts));
}

PointSet gen_clustered(std::size_t n, std::size_t clusters, std::uint64_t seed, double box, double spread) {
  if (n < 1 || clusters < 1) throw std::invalid_argument("gen_clustered: n and clusters must be positive");
  if (!(box > 0.0) || !(spread >= 0.0)) throw std::invalid_argument("gen_clustered: bad box or spread");
  Rng rng(seed);
  std::vector<Point> hubs;
  for (std::size_t c = 0; c < clusters; ++c) {
    const double x = rng.uniform(0.0, box);
    const double y = rng.uniform(0.0, box);
    hubs.push_back({x, y});
  }
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& hub = hubs[i % clusters];
    const double x = rng.normal(hub.x, spread);
    const double y = rng.normal(hub.y, spread);
    pts.push_back({x, y});
  }
  return PointSet(std::move(pts));
}

PointSet gen_grid(std::size_t rows, std::size_t cols, double pitch) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("gen_grid: dimensions must be positive");
  if (!(pitch > 0.0)) throw std::invalid_argument("gen_grid: pitch must be positive");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      pts.push_back({static_cast<double>(i) * pitch, static_cast<double>(j) * pitch});
    }
  }
  return PointSet(std::move(pts));
}

PointSet gen_path_forest(std::span<const int> path_lengths) {
  if (path_lengths.empty()) throw std::invalid_argument("gen_path_forest: no paths");
  long long total = 0;
  for (int len : path_lengths) {
    if (len < 1) throw std::invalid_argument("gen_path_forest: path lengths must be positive");
    total += len;
  }
  const long long gap = 2 * total + 1;
  std::vector<Point> pts;
  long long next_x = 0;
  for (int len : path_lengths) {
    for (int i = 0; i < len; ++i) pts.push_back({static_cast<double>(next_x + i), 0.0});
    next_x += (len - 1) + gap;
  }
  return PointSet(std::move(pts));
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

LoadedInstance read_instance(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  long long expected = -1;
  std::vector<Point> pts;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::istringstream fields{std::string(line)};
    std::vector<std::string> toks;
    for (std::string t; fields >> t;) toks.push_back(t);

    if (expected < 0) {
      if (toks.size() != 1 || !parse_number(toks[0], expected) || expected < 1) {
        throw ParseError(lineno, "expected a positive point count, got '" + std::string(line) + "'");
      }
      continue;
    }
    if (static_cast<long long>(pts.size()) == expected) {
      throw ParseError(lineno, "more points than the declared count " + std::to_string(expected));
    }
    Point p;
    if (toks.size() != 2 || !parse_number(toks[0], p.x) || !parse_number(toks[1], p.y)) {
      throw ParseError(lineno, "expected two numbers 'x y', got '" + std::string(line) + "'");
    }
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ParseError(lineno, "non-finite coordinate");
    pts.push_back(p);
  }
  if (expected < 0) throw ParseError(lineno, "missing point count");
  if (static_cast<long long>(pts.size()) != expected) {
    throw ParseError(lineno, "declared " + std::to_string(expected) + " points, found " + std::to_string(pts.size()));
  }
  LoadedInstance res;
  res.points = PointSet(std::move(pts), &res.duplicates_removed);
  return res;
}

LoadedInstance load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_instance(in);
}

std::string format_coordinate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

void write_instance(std::ostream& out, const PointSet& P) {
  out << P.size() << '\n';
  for (const Point& p : P) out << format_coordinate(p.x) << ' ' << format_coordinate(p.y) << '\n';
}

void save(const PointSet& P, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_instance(out, P);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace geoburn
