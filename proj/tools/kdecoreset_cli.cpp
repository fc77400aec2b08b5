// Command line front end: coreset construction (herd, halve, sample,
// sorted1d, gridsnap), lower-bound certificates, error evaluation and the
// benchmark harness.  Exit codes: 0 success, 2 configuration error, 1
// internal failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kdecoreset/baselines.hpp"
#include "kdecoreset/bench.hpp"
#include "kdecoreset/discrepancy.hpp"
#include "kdecoreset/herding.hpp"
#include "kdecoreset/io.hpp"
#include "kdecoreset/kde.hpp"
#include "kdecoreset/lower_bound.hpp"
#include "kdecoreset/parallel.hpp"
#include "kdecoreset/synthetic.hpp"

namespace {

using namespace kdecoreset;

struct CommonOpts {
  std::string input;
  std::string synthetic;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t components = 3;
  double scale = 1.0;
  std::string kernel = "gaussian";
  double bandwidth = 1.0;
  std::uint64_t seed = 0;
  std::string output;
  int threads = 1;
};

void add_data_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--input", o->input, "CSV/TSV point file, one point per row");
  cmd->add_option("--synthetic", o->synthetic, "synthetic generator: uniform | mixture");
  cmd->add_option("--n", o->n, "synthetic point count");
  cmd->add_option("--d", o->d, "synthetic dimension");
  cmd->add_option("--components", o->components, "mixture component count");
  cmd->add_option("--scale", o->scale, "synthetic coordinate scale");
  cmd->add_option("--seed", o->seed, "seed for data and stochastic methods");
}

void add_kernel_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--kernel", o->kernel,
                  "kernel family: gaussian | laplace | triangle | ball | epanechnikov");
  cmd->add_option("--bandwidth", o->bandwidth, "kernel bandwidth sigma");
}

void add_output_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--output", o->output, "output path (stdout when omitted)");
  cmd->add_option("--threads", o->threads, "worker threads for data-parallel scans");
}

PointSet load_points(const CommonOpts& o) {
  if (!o.input.empty()) return read_points(o.input);
  if (o.synthetic.empty())
    throw std::invalid_argument("provide --input or --synthetic with --n and --d");
  if (o.n == 0 || o.d == 0)
    throw std::invalid_argument("synthetic data needs --n and --d");
  if (o.synthetic == "uniform") return uniform_box(o.n, o.d, o.seed, o.scale);
  if (o.synthetic == "mixture") return gaussian_mixture(o.n, o.d, o.seed, o.components, o.scale);
  throw std::invalid_argument("unknown synthetic kind: " + o.synthetic);
}

Kernel make_kernel(const CommonOpts& o) {
  return Kernel(parse_kernel_family(o.kernel), o.bandwidth);
}

void emit(const CommonOpts& o, const std::string& content) {
  if (o.output.empty())
    std::cout << content << std::endl;
  else
    write_text_file(o.output, content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coresets for kernel density estimates"};
  app.require_subcommand(1);

  CommonOpts opts;

  // herd
  auto* herd_cmd = app.add_subcommand("herd", "greedy mean-approximation coreset");
  std::size_t herd_steps = 0;
  double herd_epsilon = 0.0;
  std::string trace_path;
  bool start_zero = false;
  add_data_flags(herd_cmd, &opts);
  add_kernel_flags(herd_cmd, &opts);
  add_output_flags(herd_cmd, &opts);
  herd_cmd->add_option("--steps", herd_steps, "iteration count T");
  herd_cmd->add_option("--epsilon", herd_epsilon, "target RKHS gap; runs ceil(2/eps^2) steps");
  herd_cmd->add_option("--trace", trace_path, "write per-iteration trace CSV here");
  herd_cmd->add_flag("--start-at-zero", start_zero, "select index 0 first instead of the densest point");

  // halve
  auto* halve_cmd = app.add_subcommand("halve", "discrepancy-halving coreset (Gaussian)");
  double halve_epsilon = 0.1;
  std::string strategy = "alt1d";
  std::size_t restarts = 64;
  std::string report_path;
  int halve_grid = 5;
  add_data_flags(halve_cmd, &opts);
  add_kernel_flags(halve_cmd, &opts);
  add_output_flags(halve_cmd, &opts);
  halve_cmd->add_option("--epsilon", halve_epsilon, "certified error budget");
  halve_cmd->add_option("--strategy", strategy, "coloring strategy: alt1d | heuristic");
  halve_cmd->add_option("--restarts", restarts, "heuristic coloring restarts");
  halve_cmd->add_option("--report", report_path, "write halving report JSON here");
  halve_cmd->add_option("--grid-resolution", halve_grid, "accounting candidate grid resolution");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "uniform random sample baseline");
  std::size_t sample_m = 0;
  double sample_epsilon = 0.0, sample_delta = 0.1;
  add_data_flags(sample_cmd, &opts);
  add_output_flags(sample_cmd, &opts);
  sample_cmd->add_option("--size", sample_m, "sample size m");
  sample_cmd->add_option("--epsilon", sample_epsilon, "target error (sizes m by the sampling bound)");
  sample_cmd->add_option("--delta", sample_delta, "failure probability for the sampling bound");

  // sorted1d
  auto* sorted_cmd = app.add_subcommand("sorted1d", "evenly spaced sorted selection (d = 1)");
  std::size_t sorted_m = 1;
  add_data_flags(sorted_cmd, &opts);
  add_output_flags(sorted_cmd, &opts);
  sorted_cmd->add_option("--size", sorted_m, "coreset size m");

  // gridsnap
  auto* snap_cmd = app.add_subcommand("gridsnap", "lattice discretization baseline");
  double snap_epsilon = 0.1;
  add_data_flags(snap_cmd, &opts);
  add_kernel_flags(snap_cmd, &opts);
  add_output_flags(snap_cmd, &opts);
  snap_cmd->add_option("--epsilon", snap_epsilon, "KDE error budget");

  // lowerbound
  auto* lb_cmd = app.add_subcommand("lowerbound", "hard-instance certificates");
  std::size_t lb_n = 4096;
  double lb_zf = 0.0, lb_rf = 0.0, lb_eps = 0.0;
  std::size_t lb_k = 0;
  bool lb_sweep = false;
  add_kernel_flags(lb_cmd, &opts);
  add_output_flags(lb_cmd, &opts);
  lb_cmd->add_option("--n", lb_n, "construction size");
  lb_cmd->add_option("--zf", lb_zf, "steep window center (default per kernel)");
  lb_cmd->add_option("--rf", lb_rf, "steep window radius (default zf/2)");
  lb_cmd->add_option("--k", lb_k, "single subset size to certify");
  lb_cmd->add_flag("--sweep", lb_sweep, "certify every admissible k");
  lb_cmd->add_option("--epsilon", lb_eps, "also report the minimal k at this error level");

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "error report for a stored coreset");
  std::string coreset_path;
  int eval_grid = 5;
  add_data_flags(eval_cmd, &opts);
  add_kernel_flags(eval_cmd, &opts);
  add_output_flags(eval_cmd, &opts);
  eval_cmd->add_option("--coreset", coreset_path, "coreset JSON produced by a build command")
      ->required();
  eval_cmd->add_option("--grid-resolution", eval_grid, "candidate grid resolution");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run several methods on one instance");
  std::vector<std::string> method_specs;
  int bench_grid = 5;
  add_data_flags(bench_cmd, &opts);
  add_kernel_flags(bench_cmd, &opts);
  add_output_flags(bench_cmd, &opts);
  bench_cmd->add_option("--method", method_specs,
                        "method spec, e.g. herd:epsilon=0.1 or sample:m=200 (repeatable)");
  bench_cmd->add_option("--grid-resolution", bench_grid, "shared candidate grid resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    set_worker_threads(opts.threads);

    if (*herd_cmd) {
      const PointSet points = load_points(opts);
      const Kernel kernel = make_kernel(opts);
      HerdingStop stop;
      if (herd_steps > 0)
        stop = HerdingStop::by_steps(herd_steps);
      else if (herd_epsilon > 0.0)
        stop = HerdingStop::by_epsilon(herd_epsilon);
      else
        throw std::invalid_argument("herd needs --steps or --epsilon");
      HerdingOptions hopts;
      hopts.start_at_index_zero = start_zero;
      const HerdingResult result = herd(points, kernel, stop, hopts);
      if (!trace_path.empty()) write_text_file(trace_path, trace_to_csv(result.trace));
      emit(opts, coreset_to_json(result.coreset));
      return 0;
    }

    if (*halve_cmd) {
      const PointSet points = load_points(opts);
      const Kernel kernel = make_kernel(opts);
      HalvingOptions hopts;
      if (strategy == "alt1d")
        hopts.strategy = ColoringStrategy::alt1d;
      else if (strategy == "heuristic")
        hopts.strategy = ColoringStrategy::heuristic;
      else
        throw std::invalid_argument("unknown strategy: " + strategy);
      hopts.restarts = restarts;
      hopts.seed = opts.seed;
      hopts.grid_resolution = halve_grid;
      const auto [coreset, report] = halving_coreset(points, kernel, halve_epsilon, hopts);
      if (!report_path.empty()) write_text_file(report_path, halving_report_to_json(report));
      emit(opts, coreset_to_json(coreset));
      return 0;
    }

    if (*sample_cmd) {
      const PointSet points = load_points(opts);
      std::size_t m = sample_m;
      if (m == 0) {
        if (!(sample_epsilon > 0.0))
          throw std::invalid_argument("sample needs --size or --epsilon");
        m = joshi_sample_size(sample_epsilon, sample_delta, points.dim());
      }
      emit(opts, coreset_to_json(random_sample(points, m, opts.seed)));
      return 0;
    }

    if (*sorted_cmd) {
      const PointSet points = load_points(opts);
      emit(opts, coreset_to_json(sorted_1d(points, sorted_m)));
      return 0;
    }

    if (*snap_cmd) {
      const PointSet points = load_points(opts);
      emit(opts, snapped_to_json(grid_snap(points, make_kernel(opts), snap_epsilon)));
      return 0;
    }

    if (*lb_cmd) {
      const Kernel kernel = make_kernel(opts);
      const LBWindow defaults = lb_default_window(kernel);
      const double z_f = lb_zf > 0.0 ? lb_zf : defaults.z_f;
      const double r_f = lb_rf > 0.0 ? lb_rf : 0.5 * z_f;
      const bool drop = kernel.family == KernelFamily::ball;

      LowerBoundReport report;
      report.kernel = kernel_family_name(kernel.family);
      report.n = lb_n;
      report.z_f = z_f;
      report.r_f = r_f;
      report.c_f = drop ? drop_constant(Kernel(KernelFamily::ball, z_f), z_f, r_f).c_f
                        : steepness_constant(kernel, z_f, r_f).c_f;
      const KRange range = admissible_k_range(lb_n, z_f, r_f);
      report.range_empty = range.empty;
      report.k_min = range.k_min;
      report.k_max = range.k_max;

      auto certify = [&](std::size_t k) {
        const BoundCertificate cert = drop ? drop_bound_certificate(lb_n, k, z_f, r_f)
                                           : steep_bound_certificate(lb_n, k, z_f, r_f, kernel);
        const L1L2 l = l1_l2(lb_n, k, z_f);
        report.rows.push_back({k, l.l1, l.l2, cert.lhs, cert.rhs, cert.holds});
      };

      if (lb_sweep) {
        if (!range.empty) {
          const std::size_t hi = drop ? range.k_max : std::min(range.k_max, lb_n / 2);
          for (std::size_t k = range.k_min; k <= hi; ++k) certify(k);
        }
      } else if (lb_k > 0) {
        certify(lb_k);
      } else {
        throw std::invalid_argument("lowerbound needs --k or --sweep");
      }
      std::string json = lower_bound_report_to_json(report);
      if (lb_eps > 0.0 && !drop) {
        // splice the minimal-k report into the JSON tail
        const std::size_t min_k = min_k_for_epsilon(kernel, z_f, r_f, lb_eps);
        json.pop_back();  // drop trailing '}'
        json += ",\"epsilon\":" + std::to_string(lb_eps) +
                ",\"min_k\":" + std::to_string(min_k) + "}";
      }
      emit(opts, json);
      return 0;
    }

    if (*eval_cmd) {
      const PointSet points = load_points(opts);
      const Kernel kernel = make_kernel(opts);
      const Coreset coreset = coreset_from_json(points, read_text_file(coreset_path));
      PointSet candidates = points.dim() <= 6 ? sup_error_candidates(points, kernel, eval_grid)
                                              : point_only_candidates(points);
      if (points.dim() > 6)
        std::cerr << "note: d > 6, evaluating on data points only\n";
      emit(opts, error_report_to_json(evaluate_error(points, coreset, kernel, candidates)));
      return 0;
    }

    if (*bench_cmd) {
      BenchConfig config;
      config.input_path = opts.input;
      if (opts.input.empty()) {
        if (opts.synthetic.empty())
          throw std::invalid_argument("bench needs --input or --synthetic");
        SyntheticSpec syn;
        syn.kind = opts.synthetic;
        syn.n = opts.n;
        syn.d = opts.d;
        syn.components = opts.components;
        syn.scale = opts.scale;
        config.synthetic = syn;
      }
      config.kernel_family = opts.kernel;
      config.bandwidth = opts.bandwidth;
      config.grid_resolution = bench_grid;
      config.seed = opts.seed;
      for (const std::string& text : method_specs) {
        MethodSpec spec;
        const auto colon = text.find(':');
        spec.name = text.substr(0, colon);
        if (colon != std::string::npos) {
          std::string rest = text.substr(colon + 1);
          std::size_t pos = 0;
          while (pos < rest.size()) {
            std::size_t next = rest.find(',', pos);
            if (next == std::string::npos) next = rest.size();
            const std::string pair = rest.substr(pos, next - pos);
            const auto eq = pair.find('=');
            if (eq == std::string::npos)
              throw std::invalid_argument("method parameter must look like key=value: " + pair);
            spec.params[pair.substr(0, eq)] = pair.substr(eq + 1);
            pos = next + 1;
          }
        }
        config.methods.push_back(std::move(spec));
      }
      emit(opts, bench_report_to_json(run_benchmark(config)));
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
