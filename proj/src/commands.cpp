#include "geoburn/commands.hpp"

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "geoburn/exact.hpp"
#include "geoburn/instances.hpp"
#include "geoburn/render.hpp"
#include "geoburn/schedule_io.hpp"

namespace geoburn::cli {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

PointSet load_reporting(const std::string& path, std::ostream& err) {
  LoadedInstance inst = load(path);
  if (inst.duplicates_removed > 0) {
    err << "warning: " << inst.duplicates_removed << " duplicate point(s) removed from " << path << '\n';
  }
  return std::move(inst.points);
}

std::string point_text(const Point& p) { return format_coordinate(p.x) + " " + format_coordinate(p.y); }

}  // namespace

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  try {
    GeneratorSpec g = o.generator;
    g.count = 1;
    const NamedInstance inst = generate(g).front();
    auto emit = [&](std::ostream& os) {
      os << "# " << inst.id << '\n';
      write_instance(os, inst.points);
    };
    if (o.out) {
      auto f = open_out(*o.out);
      emit(f);
      out << "wrote " << inst.points.size() << " points to " << *o.out << '\n';
    } else {
      emit(out);
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  PointSet P;
  ApproxConfig cfg;
  try {
    P = load_reporting(o.instance, err);
    if (o.method != "exact" && o.method != "approx") throw std::invalid_argument("unknown method '" + o.method + "'");
    cfg.subsolver = o.subsolver;
    cfg.epsilon = o.epsilon.value_or(o.subsolver == Subsolver::Exact ? 0.0 : kHeuristicEpsilon);
    cfg.validate();
    if (o.bmax && *o.bmax < 1) throw std::invalid_argument("--bmax must be positive");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const int bmax = o.bmax.value_or(static_cast<int>(P.size()));
  Schedule schedule;
  int steps = 0;
  if (o.method == "exact") {
    const auto res = o.model == Model::Point ? exact_point_burning(P, bmax) : exact_anywhere_burning(P, bmax);
    if (!res) {
      out << "burning number exceeds b_max = " << bmax << '\n';
      return kCapExceeded;
    }
    schedule = res->schedule;
    steps = res->burning_number;
    out << "burning number: " << steps << '\n';
    out << "model: " << to_string(o.model) << '\n';
    out << "nodes explored: " << res->nodes_explored << '\n';
  } else {
    const ApproxResult res = o.model == Model::Point ? approx_point_burning(P, cfg) : approx_anywhere_burning(P, cfg);
    schedule = res.schedule;
    steps = res.steps_used;
    out << "steps: " << steps << '\n';
    out << "model: " << to_string(o.model) << '\n';
    out << "accepted delta: " << res.guess_delta << '\n';
    out << "subsolver: " << to_string(cfg.subsolver) << '\n';
    if (res.certified_ratio) {
      std::ostringstream r;
      r << *res.certified_ratio;
      out << "ratio bound: " << r.str() << " (certified)\n";
    } else {
      out << "ratio bound: heuristic\n";
    }
    if (steps > bmax) {
      out << "approximate schedule needs " << steps << " steps, above b_max = " << bmax << '\n';
      return kCapExceeded;
    }
  }
  print_schedule_steps(out, schedule);
  if (o.out) {
    try {
      save_schedule(schedule, *o.out, steps);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  PointSet P;
  Schedule s;
  try {
    P = load_reporting(o.instance, err);
    s = load_schedule(o.schedule, o.model);
    if (o.steps < 1) throw std::invalid_argument("step count must be positive");
    if (!is_model_valid(P, s)) throw InvalidSchedule("point-model schedule uses a source that is not an instance point");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (static_cast<long>(s.sources.size()) > o.steps) {
    out << "not verified: " << s.sources.size() << " sources cannot ignite within " << o.steps << " steps\n";
    return kVerifyFailed;
  }
  if (verify_schedule(P, s, o.steps)) {
    out << "verified: all " << P.size() << " points burn within " << o.steps << " steps\n";
    return kOk;
  }
  const auto q = first_uncovered(P, s.sources, o.steps);
  out << "not verified: point " << *q << " (" << point_text(P[*q]) << ") is unburnt after " << o.steps << " steps\n";
  return kVerifyFailed;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  try {
    BenchSpec spec = o.spec;
    if (o.spec_path) {
      std::ifstream f(*o.spec_path);
      if (!f) throw std::runtime_error("cannot open " + *o.spec_path);
      spec = BenchSpec::from_json(std::string(std::istreambuf_iterator<char>(f), {}));
    }
    const auto rows = run_bench(spec, o.jobs);
    if (o.out) {
      auto f = open_out(*o.out);
      write_csv(f, rows, o.timing);
    } else {
      write_csv(out, rows, o.timing);
    }
    if (o.summary) {
      auto f = open_out(*o.summary);
      write_markdown(f, summarize(rows));
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_render(const RenderOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const PointSet P = load_reporting(o.instance, err);
    const Schedule s = load_schedule(o.schedule, o.model);
    const std::string svg = render_svg(P, s, o.steps);
    auto f = open_out(o.out);
    f << svg;
    out << "wrote " << o.steps << " frame(s) to " << o.out << '\n';
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_summarize(const SummarizeOptions& o, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream f(o.csv);
    if (!f) throw std::runtime_error("cannot open " + o.csv);
    const Summary s = summarize(read_csv(f));
    if (o.out) {
      auto md = open_out(*o.out);
      write_markdown(md, s);
    } else {
      write_markdown(out, s);
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace geoburn::cli
