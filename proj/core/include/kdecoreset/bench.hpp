#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kdecoreset/kernel.hpp"
#include "kdecoreset/point_set.hpp"

namespace kdecoreset {

// One coreset method plus its parameters, e.g. {"herd", {{"epsilon","0.1"}}}.
// Recognized methods: herd, halve, sample, sorted1d, gridsnap.
struct MethodSpec {
  std::string name;
  std::map<std::string, std::string> params;
};

struct SyntheticSpec {
  std::string kind;  // "uniform" | "mixture"
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t components = 3;
  double scale = 1.0;
};

// The seed fully determines synthetic data and every stochastic method;
// per-method seeds are derived from it unless a method carries its own.
struct BenchConfig {
  std::string input_path;  // empty when synthetic
  std::optional<SyntheticSpec> synthetic;
  std::string kernel_family = "gaussian";
  double bandwidth = 1.0;
  int grid_resolution = 5;
  std::uint64_t seed = 0;
  std::vector<MethodSpec> methods;
};

struct BenchRow {
  std::string method;
  std::map<std::string, std::string> params;
  std::size_t size = 0;
  double build_ms = 0.0;
  double sup_error_estimate = 0.0;
  double rkhs_gap = 0.0;
  std::optional<double> certified_bound;
  std::optional<std::string> skipped_reason;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchRow> rows;
};

// Runs every method sequentially on the shared instance, evaluates each
// produced coreset against a shared candidate set, and never aborts on a
// method whose preconditions fail; such rows carry skipped_reason instead.
BenchReport run_benchmark(const BenchConfig& config);

// Deterministic JSON: {config_echo: {...}, rows: [...]}; row keys are
// method, params, size, build_ms, sup_error_estimate, rkhs_gap,
// certified_bound?, skipped_reason?.
std::string bench_report_to_json(const BenchReport& report);

// Materializes the configured instance (reads the file or generates the
// synthetic set).
PointSet load_bench_points(const BenchConfig& config);

}  // namespace kdecoreset
