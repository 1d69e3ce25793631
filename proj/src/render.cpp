#include "geoburn/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace geoburn {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string render_svg(const PointSet& P, const Schedule& s, int b) {
  if (P.empty()) throw std::invalid_argument("render: empty instance");
  if (b < 1) throw std::invalid_argument("render: step count must be positive");
  if (static_cast<long>(s.sources.size()) > b) throw std::invalid_argument("render: schedule has more sources than steps");

  const BurnReport report = simulate(P, s, b);

  double min_x = P[0].x, max_x = P[0].x, min_y = P[0].y, max_y = P[0].y;
  for (const Point& p : P) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  double extent = std::max(max_x - min_x, max_y - min_y);
  if (extent <= 1e-9) extent = 1.0;
  const double margin = 0.1 * extent;
  const double vx = min_x - margin;
  const double vy = -max_y - margin;  // y axis flipped
  const double vw = (max_x - min_x) + 2 * margin;
  const double vh = (max_y - min_y) + 2 * margin;

  const double frame_w = 480.0;
  const double frame_h = frame_w * vh / vw;
  const double label_h = 20.0;
  const double dot = extent * 0.012;
  const double stroke = extent * 0.004;

  std::ostringstream svg;
  svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n';
  svg << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << num(frame_w) << R"(" height=")"
      << num(b * (frame_h + label_h)) << R"(">)" << '\n';
  for (int t = 1; t <= b; ++t) {
    const double top = (t - 1) * (frame_h + label_h);
    svg << R"(  <g class="frame" data-step=")" << t << R"(">)" << '\n';
    svg << R"(    <text x="4" y=")" << num(top + 15) << R"(" font-family="sans-serif" font-size="13">step )" << t
        << "</text>\n";
    svg << R"(    <svg x="0" y=")" << num(top + label_h) << R"(" width=")" << num(frame_w) << R"(" height=")"
        << num(frame_h) << R"(" viewBox=")" << num(vx) << ' ' << num(vy) << ' ' << num(vw) << ' ' << num(vh)
        << R"(" overflow="hidden">)" << '\n';

    const int ignited = std::min<int>(t, static_cast<int>(s.sources.size()));
    for (int j = 1; j <= ignited; ++j) {
      const Point& c = s.sources[static_cast<std::size_t>(j - 1)];
      const int radius = t - j;
      if (radius > 0) {
        svg << R"(      <circle class="fire" cx=")" << num(c.x) << R"(" cy=")" << num(-c.y) << R"(" r=")" << radius
            << R"(" fill="#f97316" fill-opacity="0.15" stroke="#ea580c" stroke-width=")" << num(stroke) << R"("/>)"
            << '\n';
      }
      // ignition marker
      svg << R"(      <path class="source" d="M)" << num(c.x - dot) << ' ' << num(-c.y - dot) << 'L' << num(c.x + dot)
          << ' ' << num(-c.y + dot) << 'M' << num(c.x - dot) << ' ' << num(-c.y + dot) << 'L' << num(c.x + dot) << ' '
          << num(-c.y - dot) << R"(" stroke="#7c2d12" stroke-width=")" << num(stroke * 1.5) << R"(" data-radius=")"
          << radius << R"("/>)" << '\n';
    }
    for (std::size_t q = 0; q < P.size(); ++q) {
      const auto& at = report.burned_at[q];
      const bool burnt = at && *at <= t;
      svg << R"(      <circle class=")" << (burnt ? "burnt" : "unburnt") << R"(" cx=")" << num(P[q].x)
          << R"(" cy=")" << num(-P[q].y) << R"(" r=")" << num(dot) << R"(" fill=")"
          << (burnt ? "#dc2626" : "white") << R"(" stroke="#111827" stroke-width=")" << num(stroke)
          << R"("/>)" << '\n';
    }
    svg << "    </svg>\n  </g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace geoburn
