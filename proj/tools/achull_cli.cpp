// Copyright 2026 The achull Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// achull: approximate convex hulls from random direction sketches.
//
// Exit codes: 0 success, 1 invalid input or arguments, 2 numerical failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "achull/commands.hpp"
#include "achull/csv_io.hpp"
#include "achull/errors.hpp"

namespace {

using namespace achull;

struct InputFlags {
  std::string in;
  std::string shape;
  std::size_t dims = 3;
  std::size_t points = 1000;
  std::uint64_t gen_seed = 0;
  bool transformed = false;

  void add(CLI::App* app) {
    app->add_option("--in", in, "points CSV file");
    app->add_option("--shape", shape, "generate instead of reading: simplex|cube|ball|sphere|cone-cap");
    app->add_option("--dims", dims, "dimension of generated points")->check(CLI::PositiveNumber);
    app->add_option("--points", points, "number of generated points")->check(CLI::PositiveNumber);
    app->add_option("--gen-seed", gen_seed, "generator seed");
    app->add_flag("--transformed", transformed, "apply the fixed benchmark affine map");
  }

  InputSpec spec() const {
    if (!in.empty() && !shape.empty()) throw ValidationError("give either --in or --shape, not both");
    InputSpec s;
    s.path = in;
    if (!shape.empty()) s.generator = shape_spec(shape, dims, points, gen_seed, transformed);
    return s;
  }

  static ShapeSpec shape_spec(const std::string& shape, std::size_t dims, std::size_t points,
                              std::uint64_t seed, bool transformed) {
    ShapeSpec g;
    g.kind = parse_shape(shape);
    g.dim = dims;
    g.count = points;
    g.seed = seed;
    if (transformed) g.transform = benchmark_transform(dims);
    return g;
  }
};

const std::map<std::string, FilterMode> kModes{{"hard", FilterMode::Hard},
                                               {"proportional", FilterMode::Proportional}};

struct SketchFlags {
  InputFlags input;
  std::size_t dirs = 1000;
  double alpha = 0.0;
  FilterMode mode = FilterMode::Hard;
  std::uint64_t seed = 0;
  std::string out;

  void add(CLI::App* app) {
    input.add(app);
    app->add_option("--dirs", dirs, "number of random directions")->check(CLI::PositiveNumber);
    app->add_option("--alpha", alpha, "curvature threshold in [0, 1]");
    app->add_option("--mode", mode, "threshold mode: hard|proportional")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
    app->add_option("--seed", seed, "seed for directions and filtering");
    app->add_option("--out", out, "output directory");
  }

  SketchConfig config() const {
    SketchConfig c;
    c.input = input.spec();
    c.n_dirs = dirs;
    c.alpha = alpha;
    c.mode = mode;
    c.seed = seed;
    c.out_dir = out;
    return c;
  }
};

std::vector<std::size_t> parse_schedule(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string field = text.substr(start, comma - start);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (field.empty() || used != field.size()) {
      throw ValidationError("bad schedule entry '" + field + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Approximate convex hulls from random direction sketches"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic point cloud");
  std::string gen_shape = "cube";
  std::size_t gen_dims = 3;
  std::size_t gen_points = 1000;
  std::uint64_t gen_seed = 0;
  bool gen_transformed = false;
  std::string gen_out;
  gen->add_option("--shape", gen_shape, "simplex|cube|ball|sphere|cone-cap");
  gen->add_option("--dims", gen_dims, "dimension")->check(CLI::PositiveNumber);
  gen->add_option("--points", gen_points, "number of points")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_flag("--transformed", gen_transformed, "apply the fixed benchmark affine map");
  gen->add_option("--out", gen_out, "output CSV (default stdout)");

  // sketch
  auto* sketch = app.add_subcommand("sketch", "sketch, filter and bound a point cloud");
  SketchFlags sketch_flags;
  sketch_flags.add(sketch);

  // compress
  auto* compress = app.add_subcommand("compress", "sketch followed by vertex/hyperplane compression");
  SketchFlags comp_flags;
  comp_flags.add(compress);
  double beta = 0.0;
  std::string order = "decreasing";
  bool hyperplanes = false;
  HyperplaneOptions hopts;
  std::string variant = "recursive";
  std::optional<double> gamma;
  std::optional<std::size_t> true_vertices;
  std::optional<std::size_t> true_planes;
  compress->add_option("--beta", beta, "vertex clustering radius");
  compress->add_option("--order", order, "cluster order by curvature: decreasing|increasing")
      ->check(CLI::IsMember({"decreasing", "increasing"}));
  compress->add_flag("--hyperplanes", hyperplanes, "also compress the outer hull");
  compress->add_option("--merge-angle", hopts.merge_angle, "direction merge angle (radians)");
  compress->add_option("--inner-alpha", hopts.inner_alpha, "per-cluster threshold");
  compress->add_option("--inner-beta", hopts.inner_beta, "per-cluster clustering radius");
  compress->add_option("--sub-dirs", hopts.sub_directions, "per-cluster sketch size");
  compress->add_option("--variant", variant, "recursive|gamma")
      ->check(CLI::IsMember({"recursive", "gamma"}));
  compress->add_option("--gamma", gamma, "window for the gamma variant");
  compress->add_option("--true-vertices", true_vertices, "known vertex count");
  compress->add_option("--true-planes", true_planes, "known facet count");

  // error
  auto* error = app.add_subcommand("error", "inner and outer error of a sketch run (JSON)");
  SketchFlags err_flags;
  err_flags.add(error);
  std::size_t err_probes = 2000;
  error->add_option("--probes", err_probes, "probe directions for the outer error")
      ->check(CLI::PositiveNumber);

  // bounds
  auto* bnd = app.add_subcommand("bounds", "evaluate the probabilistic bounds (JSON or CSV)");
  BoundsConfig bcfg;
  std::string sweep;
  bnd->add_option("--dims", bcfg.query.n, "dimension");
  bnd->add_option("--radius", bcfg.query.r, "radius of a ball containing the data");
  bnd->add_option("--omega", bcfg.query.omega, "relative curvature");
  bnd->add_option("--p", bcfg.query.p, "failure probability");
  bnd->add_option("--eps", bcfg.query.eps, "error target");
  bnd->add_option("--x-count", bcfg.query.x_count, "number of true extreme points");
  bnd->add_option("--curvature", bcfg.curvature, "K for the Chebyshev bound");
  bnd->add_option("--dirs", bcfg.n_dirs, "|D| for the Chebyshev bound");
  bnd->add_option("--theta", bcfg.theta, "cap angle (radians)");
  bnd->add_option("--sweep", sweep, "CSV curve: aleksandrov|directions")
      ->check(CLI::IsMember({"aleksandrov", "directions"}));

  // bench
  auto* bench = app.add_subcommand("bench", "error curves over a nested direction schedule (CSV)");
  InputFlags bench_input;
  bench_input.add(bench);
  std::string schedule = "50,100,200,500,1000";
  BenchConfig bcfg_run;
  std::string bench_out;
  bench->add_option("--schedule", schedule, "comma-separated increasing direction counts");
  bench->add_option("--alpha", bcfg_run.alpha, "curvature threshold in [0, 1]");
  bench->add_option("--mode", bcfg_run.mode, "hard|proportional")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  bench->add_option("--seed", bcfg_run.seed, "seed for directions and probes");
  bench->add_option("--probes", bcfg_run.n_probes, "probe directions for the outer error");
  bench->add_option("--out", bench_out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (gen->parsed()) {
    const auto cloud =
        generate(InputFlags::shape_spec(gen_shape, gen_dims, gen_points, gen_seed, gen_transformed));
    if (gen_out.empty()) {
      write_points(std::cout, cloud);
    } else {
      const std::filesystem::path path(gen_out);
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      write_points(path, cloud);
    }
  } else if (sketch->parsed()) {
    const auto r = cmd_sketch(sketch_flags.config());
    std::cout << r.summary.dump(2) << '\n';
  } else if (compress->parsed()) {
    CompressConfig c;
    c.sketch = comp_flags.config();
    c.beta = beta;
    c.order = order == "increasing" ? CurvatureOrder::Increasing : CurvatureOrder::Decreasing;
    c.hyperplanes = hyperplanes;
    hopts.variant = variant == "gamma" ? HyperplaneVariant::GammaThreshold
                                       : HyperplaneVariant::Recursive;
    hopts.gamma = gamma;
    c.hyperplane = hopts;
    c.true_vertices = true_vertices;
    c.true_planes = true_planes;
    const auto r = cmd_compress(c);
    std::cout << r.summary.dump(2) << '\n';
  } else if (error->parsed()) {
    ErrorConfig c;
    c.sketch = err_flags.config();
    c.n_probes = err_probes;
    std::cout << to_json(cmd_error(c)).dump(2) << '\n';
  } else if (bnd->parsed()) {
    if (sweep.empty()) {
      std::cout << cmd_bounds(bcfg).dump(2) << '\n';
    } else {
      cmd_bounds_sweep(std::cout,
                       sweep == "aleksandrov" ? BoundSweep::Aleksandrov : BoundSweep::DirectionCount,
                       bcfg.query);
    }
  } else if (bench->parsed()) {
    bcfg_run.input = bench_input.spec();
    bcfg_run.schedule = parse_schedule(schedule);
    bcfg_run.out = bench_out;
    const auto rows = cmd_bench(bcfg_run);
    if (bench_out.empty()) write_bench_csv(std::cout, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const achull::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const achull::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
