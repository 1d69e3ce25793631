#include "geoburn/schedule_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "geoburn/instances.hpp"

namespace geoburn {

namespace {

std::string exact_coordinate(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

bool parse_double(std::string_view tok, double& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size() && std::isfinite(out);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Schedule read_schedule(std::istream& in, Model fallback) {
  Schedule s;
  s.model = fallback;
  bool seen_source = false;
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    auto toks = split_ws(raw);
    if (toks.empty() || toks[0].front() == '#') continue;

    if (toks[0] == "model:") {
      if (seen_source || toks.size() != 2) throw ParseError(lineno, "model header must come first and name one model");
      try {
        s.model = parse_model(toks[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }
    if (toks[0] == "step") {
      // "step j: x y"
      if (toks.size() != 4 || toks[1].empty() || toks[1].back() != ':') {
        throw ParseError(lineno, "expected 'step j: x y'");
      }
      int j = 0;
      auto num = toks[1].substr(0, toks[1].size() - 1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), j);
      if (ec != std::errc() || ptr != num.data() + num.size() || j != static_cast<int>(s.sources.size()) + 1) {
        throw ParseError(lineno, "step numbers must run 1, 2, 3, ...");
      }
      toks.erase(toks.begin(), toks.begin() + 2);
    }
    Point p;
    if (toks.size() != 2 || !parse_double(toks[0], p.x) || !parse_double(toks[1], p.y)) {
      throw ParseError(lineno, "expected a source 'x y'");
    }
    s.sources.push_back(p);
    seen_source = true;
  }
  return s;
}

Schedule load_schedule(const std::filesystem::path& path, Model fallback) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_schedule(in, fallback);
}

void write_schedule(std::ostream& out, const Schedule& s, std::optional<int> steps) {
  out << "model: " << to_string(s.model) << '\n';
  if (steps) out << "# steps: " << *steps << '\n';
  for (const Point& p : s.sources) out << exact_coordinate(p.x) << ' ' << exact_coordinate(p.y) << '\n';
}

void save_schedule(const Schedule& s, const std::filesystem::path& path, std::optional<int> steps) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_schedule(out, s, steps);
}

void print_schedule_steps(std::ostream& out, const Schedule& s) {
  for (std::size_t j = 0; j < s.sources.size(); ++j) {
    out << "step " << j + 1 << ": " << exact_coordinate(s.sources[j].x) << ' ' << exact_coordinate(s.sources[j].y)
        << '\n';
  }
}

}  // namespace geoburn
