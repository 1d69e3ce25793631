#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "geoburn/bench.hpp"
#include "geoburn/commands.hpp"
#include "geoburn/instances.hpp"
#include "geoburn/render.hpp"
#include "geoburn/schedule_io.hpp"

using namespace geoburn;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "geoburn_unit";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const char* kLine7 = "7\n0 0\n1 0\n2 0\n3 0\n4 0\n5 0\n6 0\n";

}  // namespace

TEST_CASE("schedule files round-trip exactly") {
  const Schedule s{Model::Anywhere, {{0.1, 1.0 / 3.0}, {-2.5e-7, 12345.678901234567}}};
  std::stringstream io;
  write_schedule(io, s, 4);
  const Schedule back = read_schedule(io);
  CHECK(back.model == Model::Anywhere);
  CHECK(back.sources == s.sources);

  std::istringstream plain("step 1: 2 0\nstep 2: 5 0\n");
  const Schedule p = read_schedule(plain, Model::Point);
  CHECK(p.model == Model::Point);
  CHECK(p.sources == std::vector<Point>{{2, 0}, {5, 0}});

  std::istringstream bad("model: sideways\n");
  CHECK_THROWS_AS(read_schedule(bad), ParseError);
  std::istringstream junk("1 2 3\n");
  CHECK_THROWS_AS(read_schedule(junk), ParseError);
}

TEST_CASE("solve and verify commands") {
  const fs::path inst = scratch("line7.txt");
  write_text(inst, kLine7);
  const fs::path sched = scratch("line7.sched");

  std::ostringstream out, err;
  CHECK(cli::cmd_solve({.instance = inst.string(), .out = sched.string()}, out, err) == cli::kOk);
  CHECK(out.str().find("burning number: 3") != std::string::npos);
  CHECK(out.str().find("step 1: ") != std::string::npos);

  out.str("");
  CHECK(cli::cmd_verify({.instance = inst.string(), .schedule = sched.string(), .steps = 3}, out, err) == cli::kOk);
  CHECK(out.str().rfind("verified", 0) == 0);
  out.str("");
  CHECK(cli::cmd_verify({.instance = inst.string(), .schedule = sched.string(), .steps = 2}, out, err) ==
        cli::kVerifyFailed);
  CHECK(out.str().find("not verified") != std::string::npos);

  out.str("");
  CHECK(cli::cmd_solve({.instance = inst.string(), .bmax = 2}, out, err) == cli::kCapExceeded);

  out.str("");
  CHECK(cli::cmd_solve({.instance = inst.string(), .model = Model::Anywhere, .method = "approx"}, out, err) ==
        cli::kOk);
  CHECK(out.str().find("ratio bound: 2 (certified)") != std::string::npos);
  out.str("");
  CHECK(cli::cmd_solve({.instance = inst.string(), .method = "approx", .subsolver = Subsolver::Greedy}, out, err) ==
        cli::kOk);
  CHECK(out.str().find("ratio bound: heuristic") != std::string::npos);

  CHECK(cli::cmd_solve({.instance = scratch("missing.txt").string()}, out, err) == cli::kInputError);
  CHECK(cli::cmd_solve({.instance = inst.string(), .method = "guess"}, out, err) == cli::kInputError);
  CHECK(cli::cmd_solve({.instance = inst.string(), .method = "approx", .subsolver = Subsolver::Greedy, .epsilon = 0.0},
                       out, err) == cli::kInputError);

  // a point-model source off the instance is an input error, not a failed check
  const fs::path off = scratch("off.sched");
  write_text(off, "model: point\n3.5 0\n");
  CHECK(cli::cmd_verify({.instance = inst.string(), .schedule = off.string(), .steps = 5}, out, err) ==
        cli::kInputError);
}

TEST_CASE("render produces one frame per step") {
  const PointSet line({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}});
  const std::string svg = render_svg(line, {Model::Point, {{2, 0}, {5, 0}}}, 3);
  CHECK(svg.rfind("<?xml", 0) == 0);
  std::size_t frames = 0;
  for (auto pos = svg.find("class=\"frame\""); pos != std::string::npos; pos = svg.find("class=\"frame\"", pos + 1)) {
    ++frames;
  }
  CHECK(frames == 3);
  CHECK(svg.find("class=\"unburnt\"") != std::string::npos);
  CHECK_THROWS_AS(render_svg(line, {Model::Point, {{2, 0}, {5, 0}}}, 1), std::invalid_argument);
}

TEST_CASE("bench output is deterministic and summarizes") {
  BenchSpec spec = BenchSpec::from_json(R"({
    "instances": [
      {"family": "uniform", "count": 3, "n": 6, "seed": 11},
      {"family": "clustered", "count": 2, "n": 7, "seed": 3, "clusters": 2},
      {"family": "grid", "rows": 2, "cols": 3},
      {"family": "pathforest", "paths": [3, 2]}
    ],
    "models": ["point", "anywhere"]
  })");
  CHECK(spec.instances.size() == 4);
  const auto a = run_bench(spec, 1);
  const auto b = run_bench(spec, 3);
  std::ostringstream ca, cb;
  write_csv(ca, a, false);
  write_csv(cb, b, false);
  CHECK(ca.str() == cb.str());
  // 7 instances x 2 models x 2 methods
  CHECK(a.size() == 28);
  CHECK(ca.str().rfind(std::string(kCsvHeader) + "\n", 0) == 0);

  for (const auto& r : a) {
    if (r.method == "approx") {
      REQUIRE(r.ratio);
      CHECK(*r.ratio <= 2.0 - 1.0 / *r.optimum + 1e-9);
    }
  }

  std::istringstream in(ca.str());
  const auto back = read_csv(in);
  CHECK(back.size() == a.size());
  const Summary s = summarize(back);
  CHECK(s.count({"pathforest", "point", "exact", "-"}) == 1);
  std::ostringstream md;
  write_markdown(md, s);
  CHECK(md.str().find("| family") != std::string::npos);

  std::ostringstream empty;
  write_csv(empty, run_bench(BenchSpec::from_json("{}")), true);
  CHECK(empty.str() == std::string(kCsvHeader) + "\n");

  CHECK_THROWS(BenchSpec::from_json(R"({"instances": [{"family": "spiral"}]})"));
}

TEST_CASE("bench command writes csv and summary files") {
  const fs::path csv = scratch("bench.csv");
  const fs::path md = scratch("bench.md");
  cli::BenchOptions o;
  o.spec = BenchSpec::from_json(R"({"instances": [{"family": "uniform", "count": 2, "n": 5}]})");
  o.timing = false;
  o.out = csv.string();
  o.summary = md.string();
  std::ostringstream out, err;
  CHECK(cli::cmd_bench(o, out, err) == cli::kOk);
  CHECK(fs::file_size(md) > 0);

  std::ostringstream sum;
  CHECK(cli::cmd_summarize({.csv = csv.string()}, sum, err) == cli::kOk);
  CHECK(sum.str().find("uniform") != std::string::npos);
}

TEST_CASE("solve command examples") {
  const fs::path one = scratch("one.txt");
  write_text(one, "1\n0 0\n");
  std::ostringstream out, err;
  CHECK(cli::cmd_solve({.instance = one.string()}, out, err) == cli::kOk);
  CHECK(out.str().find("burning number: 1\n") != std::string::npos);

  const fs::path inst = scratch("line7b.txt");
  write_text(inst, kLine7);
  const fs::path sched = scratch("line7b.sched");
  out.str("");
  CHECK(cli::cmd_solve({.instance = inst.string(), .out = sched.string()}, out, err) == cli::kOk);
  CHECK(load_schedule(sched).sources.size() == 2);

  const fs::path approx = scratch("line7b-approx.sched");
  out.str("");
  CHECK(cli::cmd_solve({.instance = inst.string(), .model = Model::Anywhere, .method = "approx", .out = approx.string()},
                       out, err) == cli::kOk);
  const auto pos = out.str().find("steps: ");
  REQUIRE(pos != std::string::npos);
  const int steps = std::stoi(out.str().substr(pos + 7));
  CHECK(steps >= 3);
  CHECK(steps <= 6);
  CHECK(cli::cmd_verify({.instance = inst.string(), .schedule = approx.string(), .steps = steps}, out, err) ==
        cli::kOk);
}

TEST_CASE("render command examples") {
  const fs::path one = scratch("render-one.txt");
  write_text(one, "1\n0 0\n");
  const fs::path s1 = scratch("render-one.sched");
  write_text(s1, "0 0\n");
  const fs::path svg_path = scratch("one.svg");
  std::ostringstream out, err;
  CHECK(cli::cmd_render({.instance = one.string(), .schedule = s1.string(), .steps = 1, .out = svg_path.string()}, out,
                        err) == cli::kOk);
  std::ifstream f(svg_path);
  const std::string svg((std::istreambuf_iterator<char>(f)), {});
  auto count = [&](const std::string& s, const std::string& what) {
    std::size_t c = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
    return c;
  };
  CHECK(count(svg, "class=\"frame\"") == 1);
  CHECK(count(svg, "class=\"burnt\"") == 1);
  CHECK(count(svg, "class=\"source\"") == 1);
  CHECK(count(svg, "data-radius=\"0\"") == 1);

  const PointSet line({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}});
  const std::string full = render_svg(line, {Model::Point, {{2, 0}, {5, 0}}}, 3);
  const std::string frame3 = full.substr(full.find("data-step=\"3\""));
  CHECK(frame3.find("class=\"fire\" cx=\"2\" cy=\"0\" r=\"2\"") != std::string::npos);
  CHECK(frame3.find("class=\"fire\" cx=\"5\" cy=\"0\" r=\"1\"") != std::string::npos);
  CHECK(count(frame3, "class=\"burnt\"") == 7);

  const fs::path longer = scratch("render-long.sched");
  write_text(longer, "0 0\n0 0\n");
  const fs::path never = scratch("never.svg");
  fs::remove(never);
  CHECK(cli::cmd_render({.instance = one.string(), .schedule = longer.string(), .steps = 1, .out = never.string()}, out,
                        err) == cli::kInputError);
  CHECK_FALSE(fs::exists(never));
}

TEST_CASE("bench of 20 uniform instances stays within ratio 2") {
  const BenchSpec spec =
      BenchSpec::from_json(R"({"instances": [{"family": "uniform", "count": 20, "n": 8, "seed": 1}]})");
  const auto rows = run_bench(spec, 1);
  CHECK(rows.size() == 40);
  for (const auto& r : rows) {
    REQUIRE(r.ratio);
    CHECK(*r.ratio <= 2.0);
  }
  const Summary s = summarize(rows);
  REQUIRE(s.count({"uniform", "point", "approx", "exact"}) == 1);
  CHECK(*s.at({"uniform", "point", "approx", "exact"}).max_ratio <= 2.0);
}

TEST_CASE("summarize arithmetic") {
  CHECK(summarize({}).empty());
  RunRecord r;
  r.instance = "uniform-n3-s1";
  r.method = "approx";
  r.subsolver = "exact";
  r.steps = 4;
  r.optimum = 3;
  const Summary s = summarize({r});
  REQUIRE(s.size() == 1);
  CHECK(*s.begin()->second.mean_ratio == doctest::Approx(4.0 / 3.0));

  r.optimum.reset();
  CHECK_FALSE(summarize({r}).begin()->second.mean_ratio);
}
