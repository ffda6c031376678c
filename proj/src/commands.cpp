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

#include "achull/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>

#include "achull/csv_io.hpp"
#include "achull/errors.hpp"
#include "achull/geometry.hpp"
#include "achull/rng.hpp"

namespace achull {
namespace {

// Stream ids for derive_seed; fixed so every command agrees on them.
constexpr std::uint64_t kFilterStream = 2;
constexpr std::uint64_t kHyperplaneStream = 3;
constexpr std::uint64_t kProbeStream = 7;
constexpr std::uint64_t kReferenceStream = 11;

constexpr double kInf = std::numeric_limits<double>::infinity();

const char* to_string(FilterMode mode) {
  return mode == FilterMode::Hard ? "hard" : "proportional";
}

nlohmann::json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
  return out;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

void prepare_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create '" + dir.string() + "': " + ec.message());
}

void write_kept(const std::filesystem::path& path, const PointCloud& cloud, const InnerHull& hull) {
  auto out = open_out(path);
  out << "# point[0.." << cloud.dim() << "),K_D\n";
  for (std::size_t k = 0; k < hull.kept.size(); ++k) {
    for (double v : cloud[hull.kept[k]]) out << format_double(v) << ',';
    out << format_double(hull.curvatures[k]) << '\n';
  }
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in [0, 1]");
}

void check_input(const InputSpec& input) {
  if (input.generator) return;
  if (input.path.empty()) throw ValidationError("no input: give a points file or a generator");
  if (!std::filesystem::is_regular_file(input.path)) {
    throw ValidationError("input '" + input.path.string() + "' is not a readable file");
  }
}

PointCloud load_for_sketch(const InputSpec& input) {
  PointCloud cloud = input.load();
  if (cloud.dim() < 2) throw ValidationError("points must have dimension at least 2");
  return cloud;
}

struct Truth {
  std::vector<std::size_t> indices;
  std::string source;  // "exact" or "reference"
};

// Exact extreme points at oracle scale; above it, the points found by a
// sketch with reference_dirs directions (a subset of the true vertices).
Truth reference_extremes(const PointCloud& cloud, std::size_t oracle_limit,
                         std::size_t reference_dirs, std::uint64_t seed, double tol) {
  if (cloud.size() <= oracle_limit) return {exact_extreme_points(cloud, tol), "exact"};
  const auto dirs = sample_uniform(reference_dirs, cloud.dim(),
                                   derive_seed(seed, kReferenceStream));
  return {build_sketch(cloud, dirs).found(), "reference"};
}

struct Evaluation {
  double inner = 0.0;
  double outer = 0.0;
  OuterErrorMethod method = OuterErrorMethod::Exact2d;
  std::size_t n_probes = 0;
};

Evaluation evaluate(const PointCloud& cloud, const InnerHull& inner, const OuterHull& outer,
                    const std::vector<std::size_t>& truth, const DirectionSet& probes,
                    double tol, std::vector<std::string>& warnings) {
  Evaluation e;
  if (inner.kept.empty()) {
    e.inner = kInf;
    warnings.emplace_back("inner hull is empty; inner error reported as inf");
  } else {
    e.inner = inner_error(cloud, truth, inner.kept, tol);
  }
  const auto true_hull = VertexPolytope::from_indices(cloud, truth);
  e.method = cloud.dim() == 2 ? OuterErrorMethod::Exact2d : OuterErrorMethod::SupportGapEstimate;
  try {
    const auto r = outer_error(outer, true_hull, probes, tol);
    e.outer = r.value;
    e.method = r.method;
    e.n_probes = r.n_probes;
  } catch (const UnboundedError&) {
    e.outer = kInf;
    e.n_probes = e.method == OuterErrorMethod::Exact2d ? 0 : probes.size();
    warnings.emplace_back("outer hull is unbounded; outer error reported as inf");
  }
  return e;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::string version() { return ACHULL_VERSION; }

PointCloud InputSpec::load() const {
  if (generator) return generate(*generator);
  return read_points(path);
}

nlohmann::json InputSpec::describe() const {
  if (!generator) return {{"path", path.string()}};
  return {{"shape", to_string(generator->kind)},
          {"dim", generator->dim},
          {"points", generator->count},
          {"seed", generator->seed},
          {"transformed", generator->transform.has_value()}};
}

void SketchConfig::validate() const {
  check_input(input);
  if (n_dirs < 1) throw ValidationError("need at least one direction");
  check_alpha(alpha);
}

SketchRun cmd_sketch(const SketchConfig& config) {
  config.validate();
  PointCloud cloud = load_for_sketch(config.input);

  const auto start = std::chrono::steady_clock::now();
  DirectionSet dirs = sample_uniform(config.n_dirs, cloud.dim(), config.seed);
  CurvatureSketch sketch = build_sketch(cloud, dirs);
  InnerHull inner = threshold_filter(sketch, config.alpha, config.mode,
                                     derive_seed(config.seed, kFilterStream));
  OuterHull outer = outer_hull(sketch, cloud, dirs);
  const double runtime = elapsed_ms(start);

  std::vector<std::string> warnings;
  const std::size_t n_found = sketch.found().size();
  if (inner.kept.empty()) {
    warnings.emplace_back("no points kept: every K_D is at most alpha");
  }

  nlohmann::json summary = {
      {"n_found", n_found},
      {"n_kept", inner.kept.size()},
      {"runtime_ms", runtime},
      {"seed", config.seed},
      {"version", version()},
      {"parameters",
       {{"input", config.input.describe()},
        {"dim", cloud.dim()},
        {"n_points", cloud.size()},
        {"n_dirs", config.n_dirs},
        {"alpha", config.alpha},
        {"mode", to_string(config.mode)}}},
      {"warnings", warnings},
  };

  if (!config.out_dir.empty()) {
    prepare_dir(config.out_dir);
    write_kept(config.out_dir / "inner.csv", cloud, inner);
    write_halfspaces(config.out_dir / "halfspaces.csv", outer);
    write_json(config.out_dir / "sketch.json", {{"dim", sketch.dim},
                                                {"n_points", sketch.n_points},
                                                {"n_dirs", sketch.n_dirs},
                                                {"counts", sketch.counts},
                                                {"assignment", sketch.assignment}});
    write_json(config.out_dir / "summary.json", summary);
  }

  return SketchRun{std::move(cloud), std::move(dirs),     std::move(sketch),
                   std::move(inner), std::move(outer),    runtime,
                   std::move(warnings), std::move(summary)};
}

void CompressConfig::validate() const {
  sketch.validate();
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ValidationError("beta must be finite and >= 0");
  if (hyperplanes) {
    const auto& h = hyperplane;
    if (!(h.merge_angle > 0.0 && h.merge_angle < std::numbers::pi)) {
      throw ValidationError("merge angle must lie in (0, pi)");
    }
    check_alpha(h.inner_alpha);
    if (!(h.inner_beta >= 0.0) || !std::isfinite(h.inner_beta)) {
      throw ValidationError("inner beta must be finite and >= 0");
    }
    if (h.sub_directions < 1) throw ValidationError("need at least one sub-direction");
    if (h.variant == HyperplaneVariant::GammaThreshold && !(h.gamma && *h.gamma > 0.0)) {
      throw ValidationError("the gamma variant needs gamma > 0");
    }
  }
  if (true_vertices && *true_vertices == 0) throw ValidationError("true vertex count must be >= 1");
  if (true_planes && *true_planes == 0) throw ValidationError("true plane count must be >= 1");
}

CompressRun cmd_compress(const CompressConfig& config) {
  config.validate();
  SketchRun base = cmd_sketch(config.sketch);
  const auto& cloud = base.cloud;

  VertexCompression vc = vertex_compress(base.inner, cloud, base.sketch, config.beta, config.order);

  std::optional<HyperplaneCompression> planes;
  if (config.hyperplanes) {
    HyperplaneOptions opts = config.hyperplane;
    opts.seed = derive_seed(config.sketch.seed, kHyperplaneStream);
    const auto bundle = direction_bundle(vc.clusters, base.sketch);
    planes = hyperplane_compress(cloud, base.sketch, base.dirs, vc.clusters, bundle, opts);
    if (!planes->bounded) {
      base.warnings.emplace_back("compressed outer hull is unbounded");
    }
  }

  std::optional<std::size_t> true_vertices = config.true_vertices;
  if (!true_vertices && cloud.size() <= config.oracle_limit) {
    true_vertices = exact_extreme_points(cloud).size();
  }
  std::optional<std::size_t> true_planes = config.true_planes;
  if (!true_planes && cloud.dim() == 2) true_planes = true_vertices;

  std::optional<CompressionRatios> ratios;
  nlohmann::json ratios_json = {{"found_vertices", vc.hull.kept.size()},
                                {"sketch_found", base.sketch.found().size()}};
  if (true_vertices) {
    std::optional<std::size_t> found_planes;
    if (planes && true_planes) found_planes = planes->hull.halfspaces.size();
    ratios = compression_ratios(vc.hull.kept.size(), *true_vertices, found_planes,
                                found_planes ? true_planes : std::nullopt);
    ratios_json["true_vertices"] = *true_vertices;
    ratios_json["vertex"] = ratios->vertex;
    if (ratios->hyperplane) {
      ratios_json["found_planes"] = *found_planes;
      ratios_json["true_planes"] = *true_planes;
      ratios_json["hyperplane"] = *ratios->hyperplane;
    }
  } else {
    base.warnings.emplace_back("true vertex count unknown; ratios omitted");
  }

  nlohmann::json summary = base.summary;
  summary["n_compressed"] = vc.hull.kept.size();
  summary["parameters"]["beta"] = config.beta;
  summary["parameters"]["order"] =
      config.order == CurvatureOrder::Decreasing ? "decreasing" : "increasing";
  if (planes) {
    summary["n_halfspaces"] = planes->hull.halfspaces.size();
    summary["n_candidate_halfspaces"] = planes->candidates;
    summary["bounded"] = planes->bounded;
    summary["parameters"]["merge_angle"] = config.hyperplane.merge_angle;
    summary["parameters"]["inner_alpha"] = config.hyperplane.inner_alpha;
    summary["parameters"]["inner_beta"] = config.hyperplane.inner_beta;
    summary["parameters"]["sub_directions"] = config.hyperplane.sub_directions;
    summary["parameters"]["variant"] =
        config.hyperplane.variant == HyperplaneVariant::Recursive ? "recursive" : "gamma";
    if (config.hyperplane.gamma) summary["parameters"]["gamma"] = *config.hyperplane.gamma;
  }
  summary["warnings"] = base.warnings;

  if (!config.sketch.out_dir.empty()) {
    const auto& dir = config.sketch.out_dir;
    write_kept(dir / "vertices.csv", cloud, vc.hull);
    nlohmann::json clusters = nlohmann::json::array();
    for (std::size_t c = 0; c < vc.clusters.representatives.size(); ++c) {
      clusters.push_back({{"representative", vc.clusters.representatives[c]},
                          {"members", vc.clusters.members[c]}});
    }
    write_json(dir / "clusters.json", {{"clusters", clusters}});
    write_json(dir / "ratios.json", ratios_json);
    if (planes) write_halfspaces(dir / "compressed_halfspaces.csv", planes->hull);
    write_json(dir / "summary.json", summary);
  }

  return CompressRun{std::move(base), std::move(vc), std::move(planes), ratios,
                     std::move(summary)};
}

void ErrorConfig::validate() const {
  sketch.validate();
  if (n_probes < 1) throw ValidationError("need at least one probe direction");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
}

nlohmann::json to_json(const ErrorReport& r) {
  return {{"inner_error", finite_or_string(r.inner_error)},
          {"outer_error", finite_or_string(r.outer_error)},
          {"outer_method", to_string(r.outer_method)},
          {"n_probes", r.n_probes},
          {"n_dirs_used", r.n_dirs_used},
          {"n_found", r.n_found},
          {"n_kept", r.n_kept},
          {"warnings", r.warnings}};
}

ErrorReport cmd_error(const ErrorConfig& config) {
  config.validate();
  SketchConfig sc = config.sketch;
  sc.out_dir.clear();
  SketchRun run = cmd_sketch(sc);

  ErrorReport report;
  report.warnings = run.warnings;
  const auto truth = reference_extremes(run.cloud, config.oracle_limit, 10 * sc.n_dirs, sc.seed,
                                        config.tol);
  if (truth.source != "exact") {
    report.warnings.emplace_back("errors measured against a reference sketch, not exact extremes");
  }
  const auto probes =
      sample_uniform(config.n_probes, run.cloud.dim(), derive_seed(sc.seed, kProbeStream));
  const auto e = evaluate(run.cloud, run.inner, run.outer, truth.indices, probes, config.tol,
                          report.warnings);
  report.inner_error = e.inner;
  report.outer_error = e.outer;
  report.outer_method = e.method;
  report.n_probes = e.n_probes;
  report.n_dirs_used = run.dirs.size();
  report.n_found = run.sketch.found().size();
  report.n_kept = run.inner.kept.size();

  if (!config.sketch.out_dir.empty()) {
    prepare_dir(config.sketch.out_dir);
    auto j = to_json(report);
    j["seed"] = sc.seed;
    j["version"] = version();
    j["truth"] = truth.source;
    write_json(config.sketch.out_dir / "errors.json", j);
  }
  return report;
}

void BenchConfig::validate() const {
  check_input(input);
  if (schedule.empty()) throw ValidationError("direction schedule is empty");
  if (schedule.front() < 1) throw ValidationError("schedule entries must be >= 1");
  for (std::size_t k = 1; k < schedule.size(); ++k) {
    if (schedule[k] <= schedule[k - 1]) {
      throw ValidationError("direction schedule must be strictly increasing");
    }
  }
  check_alpha(alpha);
  if (n_probes < 1) throw ValidationError("need at least one probe direction");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  if (reference_factor < 1) throw ValidationError("reference factor must be >= 1");
}

std::vector<BenchRow> cmd_bench(const BenchConfig& config) {
  config.validate();
  const PointCloud cloud = load_for_sketch(config.input);
  const std::size_t n = cloud.dim();
  const DirectionSet dirs = sample_uniform(config.schedule.back(), n, config.seed);
  const auto truth = reference_extremes(cloud, config.oracle_limit,
                                        config.reference_factor * config.schedule.back(),
                                        config.seed, config.tol);
  const auto probes = sample_uniform(config.n_probes, n, derive_seed(config.seed, kProbeStream));

  std::vector<BenchRow> rows;
  std::optional<CurvatureSketch> sketch;
  std::size_t done = 0;
  for (std::size_t m : config.schedule) {
    const auto extra = dirs.slice(done, m);
    sketch = sketch ? extend_sketch(*sketch, cloud, extra) : build_sketch(cloud, extra);
    done = m;

    const auto inner = threshold_filter(*sketch, config.alpha, config.mode,
                                        derive_seed(config.seed, kFilterStream));
    const auto outer = outer_hull(*sketch, cloud, dirs.prefix(m));
    std::vector<std::string> warnings;
    const auto e = evaluate(cloud, inner, outer, truth.indices, probes, config.tol, warnings);
    rows.push_back({m, sketch->found().size(), inner.kept.size(), e.inner, e.outer, e.method});
  }

  if (!config.out.empty()) {
    if (config.out.has_parent_path()) prepare_dir(config.out.parent_path());
    auto out = open_out(config.out);
    write_bench_csv(out, rows);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n_dirs,n_found,n_kept,inner_error,outer_error,method\n";
  for (const auto& r : rows) {
    out << r.n_dirs << ',' << r.n_found << ',' << r.n_kept << ',' << format_double(r.inner_error)
        << ',' << format_double(r.outer_error) << ',' << to_string(r.method) << '\n';
  }
}

nlohmann::json cmd_bounds(const BoundsConfig& config) {
  const auto& q = config.query;
  q.validate();
  using namespace bounds;
  return {
      {"query",
       {{"n", q.n}, {"r", q.r}, {"omega", q.omega}, {"p", q.p}, {"eps", q.eps},
        {"x_count", q.x_count}}},
      {"sphere_area", sphere_area(q.n)},
      {"chebyshev",
       {{"curvature", config.curvature},
        {"n_dirs", config.n_dirs},
        {"bound", chebyshev_bound(config.curvature, config.n_dirs, q.eps)}}},
      {"direction_count", direction_count_bound(q.omega, q.p)},
      {"direction_count_raw", direction_count_raw(q.omega, q.p)},
      {"cap_lower_bound", {{"theta", config.theta}, {"bound", cap_lower_bound(config.theta, q.n)}}},
      {"aleksandrov", aleksandrov_bound(q.r, q.n, q.omega)},
      {"inner_error_directions",
       {{"worst_case", directions_for_inner_error(q, InnerErrorVariant::WorstCase)},
        {"worst_case_raw",
         finite_or_string(directions_for_inner_error_raw(q, InnerErrorVariant::WorstCase))},
        {"single_point", directions_for_inner_error(q, InnerErrorVariant::SinglePoint)},
        {"single_point_raw",
         finite_or_string(directions_for_inner_error_raw(q, InnerErrorVariant::SinglePoint))}}},
  };
}

void cmd_bounds_sweep(std::ostream& out, BoundSweep sweep, const bounds::BoundQuery& query) {
  query.validate();
  constexpr int kSteps = 60;
  constexpr double kLo = 1e-5;
  constexpr double kHi = 0.5;
  if (sweep == BoundSweep::Aleksandrov) {
    out << "omega,n2,n3,n4,n5\n";
  } else {
    out << "omega,directions\n";
  }
  for (int s = 0; s <= kSteps; ++s) {
    const double omega = kLo * std::pow(kHi / kLo, static_cast<double>(s) / kSteps);
    out << format_double(omega);
    if (sweep == BoundSweep::Aleksandrov) {
      for (std::size_t n = 2; n <= 5; ++n) {
        out << ',' << format_double(bounds::aleksandrov_bound(query.r, n, omega));
      }
    } else {
      out << ',' << bounds::direction_count_bound(omega, query.p);
    }
    out << '\n';
  }
}

}  // namespace achull
