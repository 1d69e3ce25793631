#include "geoburn/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <istream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "geoburn/exact.hpp"
#include "geoburn/instances.hpp"

namespace geoburn {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Uniform: return "uniform";
    case Family::Clustered: return "clustered";
    case Family::Grid: return "grid";
    case Family::PathForest: return "pathforest";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "uniform") return Family::Uniform;
  if (s == "clustered") return Family::Clustered;
  if (s == "grid") return Family::Grid;
  if (s == "pathforest") return Family::PathForest;
  throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected uniform|clustered|grid|pathforest)");
}

std::vector<int> random_path_lengths(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_path_lengths: n must be positive");
  Rng rng(seed);
  std::vector<int> parts{1};
  for (int i = 1; i < n; ++i) {
    if (rng.uniform() < 0.5) {
      parts.push_back(1);
    } else {
      ++parts.back();
    }
  }
  return parts;
}

namespace {

std::string join_lengths(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "." : "") + std::to_string(v[i]);
  return s;
}

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<NamedInstance> generate(const GeneratorSpec& g) {
  std::vector<NamedInstance> out;
  const auto n = static_cast<std::size_t>(g.n);
  switch (g.family) {
    case Family::Uniform:
      for (int i = 0; i < g.count; ++i) {
        const auto seed = g.seed + static_cast<std::uint64_t>(i);
        out.push_back({"uniform-n" + std::to_string(g.n) + "-s" + std::to_string(seed), gen_uniform(n, seed, g.box)});
      }
      break;
    case Family::Clustered:
      for (int i = 0; i < g.count; ++i) {
        const auto seed = g.seed + static_cast<std::uint64_t>(i);
        out.push_back({"clustered-n" + std::to_string(g.n) + "-c" + std::to_string(g.clusters) + "-s" + std::to_string(seed),
                       gen_clustered(n, static_cast<std::size_t>(g.clusters), seed, g.box, g.spread)});
      }
      break;
    case Family::Grid:
      out.push_back({"grid-" + std::to_string(g.rows) + "x" + std::to_string(g.cols),
                     gen_grid(static_cast<std::size_t>(g.rows), static_cast<std::size_t>(g.cols), g.pitch)});
      break;
    case Family::PathForest:
      if (!g.path_lengths.empty()) {
        out.push_back({"pathforest-" + join_lengths(g.path_lengths), gen_path_forest(g.path_lengths)});
        break;
      }
      for (int i = 0; i < g.count; ++i) {
        const auto seed = g.seed + static_cast<std::uint64_t>(i);
        const auto lengths = random_path_lengths(g.n, seed);
        out.push_back({"pathforest-" + join_lengths(lengths) + "-s" + std::to_string(seed), gen_path_forest(lengths)});
      }
      break;
  }
  return out;
}

BenchSpec BenchSpec::from_json(const std::string& text) {
  using nlohmann::json;
  const json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("bench spec must be a JSON object");

  BenchSpec spec;
  for (const json& item : j.value("instances", json::array())) {
    GeneratorSpec g;
    g.family = parse_family(item.at("family").get<std::string>());
    g.count = item.value("count", g.count);
    g.n = item.value("n", g.n);
    g.seed = item.value("seed", g.seed);
    g.box = item.value("box", g.box);
    g.clusters = item.value("clusters", g.clusters);
    g.spread = item.value("spread", g.spread);
    g.rows = item.value("rows", g.rows);
    g.cols = item.value("cols", g.cols);
    g.pitch = item.value("pitch", g.pitch);
    g.path_lengths = item.value("paths", g.path_lengths);
    spec.instances.push_back(std::move(g));
  }
  if (j.contains("models")) {
    spec.models.clear();
    for (const auto& m : j.at("models")) spec.models.push_back(parse_model(m.get<std::string>()));
  }
  spec.methods = j.value("methods", spec.methods);
  for (const auto& m : spec.methods) {
    if (m != "exact" && m != "approx") throw std::invalid_argument("unknown method '" + m + "' (expected exact|approx)");
  }
  if (j.contains("subsolver")) spec.approx.subsolver = parse_subsolver(j.at("subsolver").get<std::string>());
  spec.approx.epsilon = j.value("epsilon", spec.approx.epsilon);
  spec.approx.swap_size = j.value("swap_size", spec.approx.swap_size);
  spec.exact_cap = j.value("exact_cap", spec.exact_cap);
  return spec;
}

std::string RunRecord::family() const { return instance.substr(0, instance.find('-')); }

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<RunRecord> run_instance(const BenchSpec& spec, const NamedInstance& inst) {
  std::vector<RunRecord> rows;
  const bool exact_ok = static_cast<int>(inst.points.size()) <= spec.exact_cap;
  for (Model model : spec.models) {
    std::optional<int> optimum;
    double exact_ms = 0.0;
    if (exact_ok) {
      const auto t0 = Clock::now();
      const ExactResult r = model == Model::Point ? exact_point_burning(inst.points) : exact_anywhere_burning(inst.points);
      exact_ms = millis_since(t0);
      optimum = r.burning_number;
    }
    for (const std::string& method : spec.methods) {
      RunRecord rec;
      rec.instance = inst.id;
      rec.model = model;
      rec.method = method;
      rec.optimum = optimum;
      if (method == "exact") {
        if (!optimum) continue;
        rec.subsolver = "-";
        rec.steps = *optimum;
        rec.millis = exact_ms;
      } else {
        rec.subsolver = std::string(to_string(spec.approx.subsolver));
        const auto t0 = Clock::now();
        const ApproxResult r = model == Model::Point ? approx_point_burning(inst.points, spec.approx)
                                                     : approx_anywhere_burning(inst.points, spec.approx);
        rec.millis = millis_since(t0);
        rec.steps = r.steps_used;
      }
      if (optimum) rec.ratio = static_cast<double>(rec.steps) / *optimum;
      rows.push_back(std::move(rec));
    }
  }
  return rows;
}

}  // namespace

std::vector<RunRecord> run_bench(const BenchSpec& spec, int jobs) {
  spec.approx.validate();
  std::vector<NamedInstance> instances;
  for (const GeneratorSpec& g : spec.instances) {
    auto batch = generate(g);
    std::move(batch.begin(), batch.end(), std::back_inserter(instances));
  }

  std::vector<std::vector<RunRecord>> per_instance(instances.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < instances.size();) {
      try {
        per_instance[i] = run_instance(spec, instances[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int threads = std::clamp(jobs, 1, std::max(1, static_cast<int>(instances.size())));
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<RunRecord> rows;
  for (auto& batch : per_instance) std::move(batch.begin(), batch.end(), std::back_inserter(rows));
  return rows;
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& rows, bool with_timing) {
  out << kCsvHeader << '\n';
  for (const RunRecord& r : rows) {
    out << r.instance << ',' << to_string(r.model) << ',' << r.method << ',' << r.subsolver << ',' << r.steps << ',';
    if (r.optimum) out << *r.optimum;
    out << ',';
    if (r.ratio) out << format_fixed(*r.ratio, 6);
    out << ',';
    if (with_timing) out << format_fixed(r.millis, 3);
    out << '\n';
  }
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::vector<RunRecord> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != kCsvHeader) throw ParseError(lineno, "unexpected CSV header");
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    if (f.size() != 8) throw ParseError(lineno, "expected 8 fields");
    try {
      RunRecord r;
      r.instance = f[0];
      r.model = parse_model(f[1]);
      r.method = f[2];
      r.subsolver = f[3];
      r.steps = std::stoi(f[4]);
      if (!f[5].empty()) r.optimum = std::stoi(f[5]);
      if (!f[6].empty()) r.ratio = std::stod(f[6]);
      if (!f[7].empty()) r.millis = std::stod(f[7]);
      rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return rows;
}

Summary summarize(const std::vector<RunRecord>& records) {
  struct Acc {
    std::size_t count = 0, with_opt = 0;
    double steps = 0, ratio = 0, opt = 0, max_ratio = 0;
  };
  std::map<SummaryKey, Acc> acc;
  for (const RunRecord& r : records) {
    Acc& a = acc[{r.family(), std::string(to_string(r.model)), r.method, r.subsolver}];
    ++a.count;
    a.steps += r.steps;
    if (r.optimum) {
      const double ratio = static_cast<double>(r.steps) / *r.optimum;
      ++a.with_opt;
      a.opt += *r.optimum;
      a.ratio += ratio;
      a.max_ratio = std::max(a.max_ratio, ratio);
    }
  }
  Summary s;
  for (const auto& [key, a] : acc) {
    SummaryRow row;
    row.count = a.count;
    row.mean_steps = a.steps / static_cast<double>(a.count);
    if (a.with_opt) {
      row.mean_ratio = a.ratio / static_cast<double>(a.with_opt);
      row.max_ratio = a.max_ratio;
      row.mean_optimum = a.opt / static_cast<double>(a.with_opt);
    }
    s.emplace(key, row);
  }
  return s;
}

void write_markdown(std::ostream& out, const Summary& s) {
  auto opt = [](const std::optional<double>& v) { return v ? format_fixed(*v, 3) : std::string("n/a"); };
  out << "| family | model | method | subsolver | count | mean ratio | max ratio | mean steps | mean optimum |\n";
  out << "|---|---|---|---|---:|---:|---:|---:|---:|\n";
  for (const auto& [key, row] : s) {
    const auto& [family, model, method, sub] = key;
    out << "| " << family << " | " << model << " | " << method << " | " << sub << " | " << row.count << " | "
        << opt(row.mean_ratio) << " | " << opt(row.max_ratio) << " | " << format_fixed(row.mean_steps, 3) << " | "
        << opt(row.mean_optimum) << " |\n";
  }
}

}  // namespace geoburn
