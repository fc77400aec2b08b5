#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "kdecoreset/bench.hpp"
#include "kdecoreset/io.hpp"
#include "kdecoreset/parallel.hpp"
#include "kdecoreset/synthetic.hpp"

using namespace kdecoreset;

TEST_CASE("point parsing: delimiters, headers, errors") {
  {
    std::istringstream in("x,y\n1.0,2.0\n3.0,4.0\n");
    const PointSet p = parse_points(in);
    CHECK(p.size() == 2);
    CHECK(p.dim() == 2);
    CHECK(p.point(1)[1] == 4.0);
  }
  {
    std::istringstream in("1.0\t2.0\t3.0\n4.0\t5.0\t6.0\n");
    const PointSet p = parse_points(in);
    CHECK(p.size() == 2);
    CHECK(p.dim() == 3);
  }
  {
    std::istringstream in("0.5 1.5\r\n2.5 3.5\r\n");
    const PointSet p = parse_points(in);
    CHECK(p.size() == 2);
    CHECK(p.point(0)[1] == 1.5);
  }
  {
    std::istringstream in("1.0,2.0\n3.0\n");
    CHECK_THROWS_AS(parse_points(in), std::invalid_argument);
  }
  {
    std::istringstream in("1.0,2.0\n3.0,oops\n");
    CHECK_THROWS_AS(parse_points(in), std::invalid_argument);
  }
  {
    std::istringstream in("\n\n");
    CHECK_THROWS_AS(parse_points(in), std::invalid_argument);
  }
}

TEST_CASE("coreset JSON round trip") {
  const PointSet p = uniform_box(8, 2, 2);
  const Coreset plain(p, {1, 3, 5});
  const Coreset back = coreset_from_json(p, coreset_to_json(plain));
  CHECK(std::vector<std::size_t>(back.indices().begin(), back.indices().end()) ==
        std::vector<std::size_t>{1, 3, 5});
  CHECK_FALSE(back.weighted());

  const Coreset weighted(p, {0, 2}, std::vector<double>{0.25, 0.75});
  const Coreset wback = coreset_from_json(p, coreset_to_json(weighted));
  CHECK(wback.weight(0) == 0.25);

  const PointSet other = uniform_box(5, 2, 3);
  CHECK_THROWS_AS(coreset_from_json(other, coreset_to_json(plain)), std::invalid_argument);
}

TEST_CASE("error report JSON carries the documented keys") {
  ErrorReport r;
  r.sup_error_estimate = 0.125;
  r.witness_point = {1.0, -2.0};
  r.rkhs_gap = 0.25;
  r.candidate_count = 42;
  const auto j = nlohmann::json::parse(error_report_to_json(r));
  CHECK(j["sup_error_estimate"] == 0.125);
  CHECK(j["witness_point"][1] == -2.0);
  CHECK(j["rkhs_gap"] == 0.25);
  CHECK(j["candidate_count"] == 42);
}

TEST_CASE("benchmark: herding row certifies its epsilon") {
  BenchConfig config;
  config.synthetic = SyntheticSpec{"mixture", 300, 2, 3, 1.0};
  config.seed = 12;
  config.methods.push_back({"herd", {{"epsilon", "0.1"}}});
  config.methods.push_back({"sample", {{"m", "200"}}});
  const BenchReport report = run_benchmark(config);
  REQUIRE(report.rows.size() == 2);
  CHECK_FALSE(report.rows[0].skipped_reason.has_value());
  CHECK(report.rows[0].rkhs_gap <= 0.1 + 1e-9);
  REQUIRE(report.rows[0].certified_bound.has_value());
  CHECK(*report.rows[0].certified_bound <= 0.1 + 1e-12);
  CHECK(report.rows[1].size == 200);
  for (const auto& row : report.rows)
    if (!row.skipped_reason) CHECK(row.sup_error_estimate <= row.rkhs_gap + 1e-9);
}

TEST_CASE("benchmark: empty method list yields a valid empty report") {
  BenchConfig config;
  config.synthetic = SyntheticSpec{"uniform", 20, 1, 3, 1.0};
  const BenchReport report = run_benchmark(config);
  CHECK(report.rows.empty());
  const auto j = nlohmann::json::parse(bench_report_to_json(report));
  CHECK(j["rows"].is_array());
  CHECK(j["rows"].empty());
}

TEST_CASE("benchmark: incompatible methods are skipped, never fatal") {
  BenchConfig config;
  config.synthetic = SyntheticSpec{"uniform", 30, 2, 3, 1.0};
  config.kernel_family = "ball";
  config.methods.push_back({"sorted1d", {{"m", "5"}}});   // d != 1
  config.methods.push_back({"gridsnap", {{"epsilon", "0.1"}}});  // ball has no Lipschitz
  config.methods.push_back({"sample", {{"m", "10"}}});
  const BenchReport report = run_benchmark(config);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].skipped_reason.has_value());
  CHECK(report.rows[1].skipped_reason.has_value());
  CHECK_FALSE(report.rows[2].skipped_reason.has_value());
}

namespace {
std::string scrub_timing(const std::string& json_text) {
  auto j = nlohmann::ordered_json::parse(json_text);
  for (auto& row : j["rows"]) row.erase("build_ms");
  return j.dump();
}
}  // namespace

TEST_CASE("benchmark reports are reproducible and thread-count independent") {
  BenchConfig config;
  config.synthetic = SyntheticSpec{"mixture", 150, 2, 3, 1.0};
  config.seed = 77;
  config.methods.push_back({"herd", {{"epsilon", "0.25"}}});
  config.methods.push_back({"sample", {{"m", "40"}}});
  config.methods.push_back({"gridsnap", {{"epsilon", "0.3"}}});

  set_worker_threads(1);
  const std::string run1 = bench_report_to_json(run_benchmark(config));
  const std::string run2 = bench_report_to_json(run_benchmark(config));
  set_worker_threads(8);
  const std::string run8 = bench_report_to_json(run_benchmark(config));
  set_worker_threads(1);

  CHECK(scrub_timing(run1) == scrub_timing(run2));
  CHECK(scrub_timing(run1) == scrub_timing(run8));
}

TEST_CASE("herding rows track the certified envelope across step counts") {
  BenchConfig config;
  config.synthetic = SyntheticSpec{"mixture", 250, 2, 3, 1.0};
  config.seed = 41;
  for (const char* steps : {"16", "64", "256"})
    config.methods.push_back({"herd", {{"steps", steps}}});
  const BenchReport report = run_benchmark(config);
  REQUIRE(report.rows.size() == 3);
  double prev_envelope = 1e9;
  for (const auto& row : report.rows) {
    REQUIRE(row.certified_bound.has_value());
    CHECK(row.rkhs_gap <= *row.certified_bound + 1e-12);  // gap(T) <= sqrt(2/T)
    CHECK(*row.certified_bound < prev_envelope);
    prev_envelope = *row.certified_bound;
  }
}

TEST_CASE("sample sizes from the (epsilon, delta) guarantee") {
  BenchConfig config;
  config.synthetic = SyntheticSpec{"mixture", 400, 2, 3, 1.0};
  config.seed = 5;
  config.methods.push_back({"sample", {{"epsilon", "0.2"}, {"delta", "0.1"}}});
  const BenchReport report = run_benchmark(config);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].size == 108);
}
