#include "kdecoreset/bench.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <variant>

#include <json.hpp>

#include "kdecoreset/baselines.hpp"
#include "kdecoreset/discrepancy.hpp"
#include "kdecoreset/herding.hpp"
#include "kdecoreset/io.hpp"
#include "kdecoreset/rng.hpp"
#include "kdecoreset/synthetic.hpp"

namespace kdecoreset {

namespace {

using ordered_json = nlohmann::ordered_json;

double param_double(const MethodSpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw std::invalid_argument(spec.name + " requires parameter " + key);
  return std::stod(it->second);
}

std::optional<double> param_double_opt(const MethodSpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) return std::nullopt;
  return std::stod(it->second);
}

std::optional<std::size_t> param_size_opt(const MethodSpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) return std::nullopt;
  return static_cast<std::size_t>(std::stoull(it->second));
}

// What a method constructs: either a subset coreset or a weighted set.
struct Built {
  std::variant<Coreset, SnappedSet> payload;
  std::size_t size = 0;
  std::optional<double> certified_bound;
};

Built build_method(const PointSet& points, const Kernel& kernel, const MethodSpec& spec,
                   std::uint64_t derived_seed) {
  const std::uint64_t seed = param_size_opt(spec, "seed").value_or(derived_seed);
  if (spec.name == "herd") {
    HerdingStop stop;
    if (auto steps = param_size_opt(spec, "steps"))
      stop = HerdingStop::by_steps(*steps);
    else
      stop = HerdingStop::by_epsilon(param_double(spec, "epsilon"));
    HerdingResult result = herd(points, kernel, stop);
    const double t = static_cast<double>(result.steps);
    Built built{std::move(result.coreset), 0, std::sqrt(2.0 / t)};
    built.size = result.distinct_size;
    return built;
  }
  if (spec.name == "halve") {
    HalvingOptions opts;
    opts.strategy = spec.params.count("strategy") && spec.params.at("strategy") == "heuristic"
                        ? ColoringStrategy::heuristic
                        : ColoringStrategy::alt1d;
    if (auto restarts = param_size_opt(spec, "restarts")) opts.restarts = *restarts;
    opts.seed = seed;
    auto [coreset, report] = halving_coreset(points, kernel, param_double(spec, "epsilon"), opts);
    Built built{std::move(coreset), 0, report.total_bound};
    built.size = std::get<Coreset>(built.payload).size();
    return built;
  }
  if (spec.name == "sample") {
    std::size_t m;
    if (auto m_param = param_size_opt(spec, "m")) {
      m = *m_param;
    } else {
      const double epsilon = param_double(spec, "epsilon");
      const double delta = param_double_opt(spec, "delta").value_or(0.1);
      m = joshi_sample_size(epsilon, delta, points.dim());
    }
    Built built{random_sample(points, m, seed), 0, std::nullopt};
    built.size = std::get<Coreset>(built.payload).size();
    return built;
  }
  if (spec.name == "sorted1d") {
    const auto m = param_size_opt(spec, "m");
    if (!m) throw std::invalid_argument("sorted1d requires parameter m");
    Built built{sorted_1d(points, *m), 0, std::nullopt};
    built.size = std::get<Coreset>(built.payload).size();
    return built;
  }
  if (spec.name == "gridsnap") {
    const double epsilon = param_double(spec, "epsilon");
    Built built{grid_snap(points, kernel, epsilon), 0, epsilon};
    built.size = std::get<SnappedSet>(built.payload).points.size();
    return built;
  }
  throw std::invalid_argument("unknown method: " + spec.name);
}

}  // namespace

PointSet load_bench_points(const BenchConfig& config) {
  if (!config.input_path.empty()) return read_points(config.input_path);
  if (!config.synthetic) throw std::invalid_argument("config needs an input file or a synthetic spec");
  const SyntheticSpec& s = *config.synthetic;
  if (s.kind == "uniform") return uniform_box(s.n, s.d, config.seed, s.scale);
  if (s.kind == "mixture") return gaussian_mixture(s.n, s.d, config.seed, s.components, s.scale);
  throw std::invalid_argument("unknown synthetic kind: " + s.kind);
}

BenchReport run_benchmark(const BenchConfig& config) {
  const PointSet points = load_bench_points(config);
  const Kernel kernel(parse_kernel_family(config.kernel_family), config.bandwidth);
  const PointSet candidates = points.dim() <= 6
                                  ? sup_error_candidates(points, kernel, config.grid_resolution)
                                  : point_only_candidates(points);

  BenchReport report;
  report.config = config;
  for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
    const MethodSpec& spec = config.methods[mi];
    BenchRow row;
    row.method = spec.name;
    row.params = spec.params;
    const std::uint64_t derived_seed = splitmix64(config.seed ^ (mi + 1));
    try {
      const auto start = std::chrono::steady_clock::now();
      Built built = build_method(points, kernel, spec, derived_seed);
      const auto stop = std::chrono::steady_clock::now();
      row.build_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      row.size = built.size;
      row.certified_bound = built.certified_bound;

      ErrorReport err;
      if (std::holds_alternative<Coreset>(built.payload)) {
        err = evaluate_error(points, std::get<Coreset>(built.payload), kernel, candidates);
      } else {
        const SnappedSet& snapped = std::get<SnappedSet>(built.payload);
        err = evaluate_error(points, WeightedRef(snapped.points, snapped.weights), kernel,
                             candidates);
      }
      row.sup_error_estimate = err.sup_error_estimate;
      row.rkhs_gap = err.rkhs_gap;
    } catch (const std::invalid_argument& e) {
      row.skipped_reason = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string bench_report_to_json(const BenchReport& report) {
  ordered_json j;
  ordered_json echo;
  if (!report.config.input_path.empty()) {
    echo["input"] = report.config.input_path;
  } else if (report.config.synthetic) {
    const auto& s = *report.config.synthetic;
    ordered_json syn;
    syn["kind"] = s.kind;
    syn["n"] = s.n;
    syn["d"] = s.d;
    syn["components"] = s.components;
    syn["scale"] = s.scale;
    echo["synthetic"] = std::move(syn);
  }
  echo["kernel"] = report.config.kernel_family;
  echo["bandwidth"] = report.config.bandwidth;
  echo["grid_resolution"] = report.config.grid_resolution;
  echo["seed"] = report.config.seed;
  j["config_echo"] = std::move(echo);

  j["rows"] = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["method"] = row.method;
    r["params"] = row.params;
    if (row.skipped_reason) {
      r["skipped_reason"] = *row.skipped_reason;
    } else {
      r["size"] = row.size;
      r["build_ms"] = row.build_ms;
      r["sup_error_estimate"] = row.sup_error_estimate;
      r["rkhs_gap"] = row.rkhs_gap;
      if (row.certified_bound) r["certified_bound"] = *row.certified_bound;
    }
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2);
}

}  // namespace kdecoreset
