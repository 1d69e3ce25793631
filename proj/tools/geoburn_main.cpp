#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "geoburn/commands.hpp"

namespace {

using namespace geoburn;

void add_generator_flags(CLI::App* cmd, GeneratorSpec& g, std::string& family) {
  cmd->add_option("--family", family, "uniform|clustered|grid|pathforest")->capture_default_str();
  cmd->add_option("--n", g.n, "Number of points (path forests: total vertices)")->capture_default_str();
  cmd->add_option("--seed", g.seed, "Random seed")->capture_default_str();
  cmd->add_option("--box", g.box, "Side of the sampling square")->capture_default_str();
  cmd->add_option("--clusters", g.clusters, "Cluster count (clustered)")->capture_default_str();
  cmd->add_option("--spread", g.spread, "Cluster standard deviation (clustered)")->capture_default_str();
  cmd->add_option("--rows", g.rows, "Grid rows")->capture_default_str();
  cmd->add_option("--cols", g.cols, "Grid columns")->capture_default_str();
  cmd->add_option("--pitch", g.pitch, "Grid pitch")->capture_default_str();
  cmd->add_option("--paths", g.path_lengths, "Explicit path lengths, e.g. 3,2")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geoburn: burning number of planar point sets"};
  app.require_subcommand(1);

  std::string model = "point";
  std::string subsolver = "exact";
  std::optional<double> epsilon;

  // gen
  cli::GenOptions gen;
  std::string gen_family = "uniform";
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  add_generator_flags(gen_cmd, gen.generator, gen_family);
  gen_cmd->add_option("--out", gen.out, "Output path (default: stdout)");

  // solve
  cli::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute or approximate the burning number");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--model", model, "point|anywhere")->capture_default_str();
  solve_cmd->add_option("--method", solve.method, "exact|approx")->capture_default_str();
  solve_cmd->add_option("--subsolver", subsolver, "exact|greedy|localsearch (approx only)")->capture_default_str();
  solve_cmd->add_option("--epsilon", epsilon, "Sub-solver slack (default 0 for exact, 0.5 otherwise)");
  solve_cmd->add_option("--bmax", solve.bmax, "Give up above this many steps (default n)");
  solve_cmd->add_option("--out", solve.out, "Write the schedule to this file");

  // verify
  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule against an instance");
  verify_cmd->add_option("instance", verify.instance, "Instance file")->required();
  verify_cmd->add_option("schedule", verify.schedule, "Schedule file")->required();
  verify_cmd->add_option("-b,--steps", verify.steps, "Step budget")->required();
  verify_cmd->add_option("--model", model, "Model when the schedule has no header")->capture_default_str();

  // bench
  cli::BenchOptions bench;
  std::string bench_family;
  std::string bench_models = "point";
  std::vector<std::string> bench_methods{"exact", "approx"};
  GeneratorSpec bench_gen;
  bench_gen.count = 20;
  bool no_timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark and print CSV");
  bench_cmd->add_option("--spec", bench.spec_path, "JSON benchmark spec (overrides generator flags)");
  add_generator_flags(bench_cmd, bench_gen, bench_family);
  bench_cmd->add_option("--count", bench_gen.count, "Instances per family")->capture_default_str();
  bench_cmd->add_option("--model", bench_models, "point|anywhere|both")->capture_default_str();
  bench_cmd->add_option("--methods", bench_methods, "exact,approx")->delimiter(',');
  bench_cmd->add_option("--subsolver", subsolver, "exact|greedy|localsearch")->capture_default_str();
  bench_cmd->add_option("--epsilon", epsilon, "Sub-solver slack");
  bench_cmd->add_option("--exact-cap", bench.spec.exact_cap, "Largest n solved exactly")->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")->capture_default_str();
  bench_cmd->add_flag("--no-timing", no_timing, "Leave the millis column empty");
  bench_cmd->add_option("--out", bench.out, "CSV path (default: stdout)");
  bench_cmd->add_option("--summary", bench.summary, "Also write a Markdown summary here");

  // render
  cli::RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "Draw a schedule step by step as SVG");
  render_cmd->add_option("instance", render.instance, "Instance file")->required();
  render_cmd->add_option("schedule", render.schedule, "Schedule file")->required();
  render_cmd->add_option("-b,--steps", render.steps, "Number of frames")->required();
  render_cmd->add_option("--model", model, "Model when the schedule has no header")->capture_default_str();
  render_cmd->add_option("--out", render.out, "SVG path")->required();

  // summarize
  cli::SummarizeOptions summarize;
  auto* sum_cmd = app.add_subcommand("summarize", "Aggregate a bench CSV into a Markdown table");
  sum_cmd->add_option("csv", summarize.csv, "CSV from bench")->required();
  sum_cmd->add_option("--out", summarize.out, "Markdown path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  try {
    if (*gen_cmd) {
      gen.generator.family = parse_family(gen_family);
      return cli::cmd_gen(gen, std::cout, std::cerr);
    }
    if (*solve_cmd) {
      solve.model = parse_model(model);
      solve.subsolver = parse_subsolver(subsolver);
      solve.epsilon = epsilon;
      return cli::cmd_solve(solve, std::cout, std::cerr);
    }
    if (*verify_cmd) {
      verify.model = parse_model(model);
      return cli::cmd_verify(verify, std::cout, std::cerr);
    }
    if (*bench_cmd) {
      bench.timing = !no_timing;
      if (!bench_family.empty()) {
        bench_gen.family = parse_family(bench_family);
        bench.spec.instances.push_back(bench_gen);
      }
      bench.spec.models.clear();
      if (bench_models == "both") {
        bench.spec.models = {Model::Point, Model::Anywhere};
      } else {
        bench.spec.models = {parse_model(bench_models)};
      }
      bench.spec.methods = bench_methods;
      for (const auto& m : bench_methods) {
        if (m != "exact" && m != "approx") throw std::invalid_argument("unknown method '" + m + "'");
      }
      bench.spec.approx.subsolver = parse_subsolver(subsolver);
      bench.spec.approx.epsilon =
          epsilon.value_or(bench.spec.approx.subsolver == Subsolver::Exact ? 0.0 : cli::kHeuristicEpsilon);
      return cli::cmd_bench(bench, std::cout, std::cerr);
    }
    if (*render_cmd) {
      render.model = parse_model(model);
      return cli::cmd_render(render, std::cout, std::cerr);
    }
    if (*sum_cmd) return cli::cmd_summarize(summarize, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  }
  return cli::kInputError;
}
