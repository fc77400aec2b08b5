#include <doctest.h>

#include <cmath>

#include "kdecoreset/herding.hpp"
#include "kdecoreset/parallel.hpp"
#include "kdecoreset/synthetic.hpp"
#include "oracles.hpp"

using namespace kdecoreset;

namespace {

const Kernel kGauss(KernelFamily::gaussian, 1.0);

// O(n^2) reference for <x_t - mu, phi_i - mu> from the current selection.
struct InnerOracle {
  std::vector<std::vector<double>> rows;
  Kernel kernel;
  std::vector<double> m;
  double kappa_pp = 0.0;

  InnerOracle(const PointSet& p, const Kernel& k) : rows(oracles::rows_of(p)), kernel(k) {
    m.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      m[i] = oracles::brute_kde(rows, {}, kernel, rows[i]);
    for (double mi : m) kappa_pp += mi;
    kappa_pp /= static_cast<double>(rows.size());
  }

  double inner(const std::vector<std::size_t>& selected, std::size_t i) const {
    const double t = static_cast<double>(selected.size());
    double x_phi = 0.0, x_mu = 0.0;
    for (std::size_t j : selected) {
      x_phi += kdecoreset::profile(kernel, oracles::distance(rows[j], rows[i]));
      x_mu += m[j];
    }
    return x_phi / t - m[i] - x_mu / t + kappa_pp;
  }

  std::size_t argmin(const std::vector<std::size_t>& selected) const {
    std::size_t best = 0;
    double best_v = inner(selected, 0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double v = inner(selected, i);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    return best;
  }
};

}  // namespace

TEST_CASE("single point: index 0 forever, zero gap") {
  const PointSet p({1.5, -2.0}, 2);
  const HerdingResult r = herd(p, kGauss, HerdingStop::by_steps(5));
  for (const auto& e : r.trace.entries) {
    CHECK(e.chosen_index == 0);
    CHECK(e.gap_sq == 0.0);
  }
  CHECK(r.distinct_size == 1);
  CHECK_FALSE(r.coreset.weighted());
}

TEST_CASE("a symmetric far pair alternates") {
  const PointSet p({-10.0, 10.0}, 1);
  const HerdingResult r = herd(p, kGauss, HerdingStop::by_steps(2));
  CHECK(r.trace.entries[0].chosen_index == 0);  // tie broken to the lowest index
  CHECK(r.trace.entries[1].chosen_index == 1);
  CHECK(r.distinct_size == 2);
  // Both points once each = the full set, so the mean is met exactly.
  CHECK(r.trace.entries[1].gap_sq == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("every step matches the O(n^2) inner-product oracle") {
  const PointSet p = gaussian_mixture(50, 2, 1234);
  const InnerOracle oracle(p, kGauss);

  HerdingState state(p, kGauss);
  state.select_first();
  for (int step = 0; step < 60; ++step) {
    const std::vector<std::size_t> before = state.selected();
    const std::size_t expected = oracle.argmin(before);
    const std::size_t got = state.step();
    CHECK(got == expected);
    // Optimal selection is never worse than the mean, which is 0.
    CHECK(oracle.inner(before, got) <= 1e-12);
  }
}

TEST_CASE("gap matches the kernel-distance oracle") {
  const PointSet p = gaussian_mixture(40, 2, 99);
  HerdingState state(p, kGauss);
  state.select_first();
  for (int step = 0; step < 25; ++step) state.step();

  // Materialize the multiset as a weighted coreset and compare.
  std::vector<std::size_t> counts(p.size(), 0);
  for (std::size_t i : state.selected()) ++counts[i];
  std::vector<std::size_t> distinct;
  std::vector<double> weights;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i]) {
      distinct.push_back(i);
      weights.push_back(static_cast<double>(counts[i]) / 26.0);
    }
  const Coreset q(p, distinct, weights);
  const double dk = kernel_distance(p, q, kGauss);
  CHECK(state.gap_squared() == doctest::Approx(dk * dk).epsilon(1e-10));

  // t = 1 closed form: 1 - 2 m_j + kappa(P,P).
  HerdingState fresh(p, kGauss);
  const std::size_t j = fresh.select_first();
  CHECK(fresh.gap_squared() ==
        doctest::Approx(1.0 - 2.0 * fresh.mean_similarity(j) + fresh.self_similarity())
            .epsilon(1e-12));
  const Coreset single(p, {j});
  CHECK(fresh.gap_squared() ==
        doctest::Approx(std::pow(kernel_distance(p, single, kGauss), 2)).epsilon(1e-10));
}

TEST_CASE("200 points in R^5: the T=128 envelope holds") {
  const PointSet p = uniform_box(200, 5, 88);
  const HerdingResult r = herd(p, kGauss, HerdingStop::by_steps(128));
  CHECK(r.trace.entries.back().gap_sq <= 2.0 / 128.0);
}

TEST_CASE("certified decay: gap_sq(t) <= 2/t and the step recursion") {
  const PointSet p = gaussian_mixture(200, 3, 7);
  const HerdingResult r = herd(p, kGauss, HerdingStop::by_steps(256));
  double prev = 0.0;
  for (const auto& e : r.trace.entries) {
    const double t = static_cast<double>(e.t);
    CHECK(e.gap_sq <= 2.0 / t + 1e-9);
    if (e.t >= 2) CHECK(t * t * e.gap_sq <= (t - 1.0) * (t - 1.0) * prev + 2.0 + 1e-9);
    prev = e.gap_sq;
  }
}

TEST_CASE("epsilon stop rule sizes T and meets the gap") {
  const PointSet p = gaussian_mixture(150, 2, 31);
  const double eps = 0.2;
  const HerdingResult r = herd(p, kGauss, HerdingStop::by_epsilon(eps));
  CHECK(r.steps == 50);  // ceil(2 / 0.04)
  CHECK(std::sqrt(r.trace.entries.back().gap_sq) <= eps);

  const PointSet candidates = sup_error_candidates(p, kGauss, 5);
  const ErrorReport err = evaluate_error(p, r.coreset, kGauss, candidates);
  CHECK(err.rkhs_gap <= eps + 1e-9);
  CHECK(err.rkhs_gap == doctest::Approx(std::sqrt(r.trace.entries.back().gap_sq)).epsilon(1e-8));

  CHECK_THROWS_AS(HerdingStop::by_epsilon(0.0), std::invalid_argument);
  CHECK_THROWS_AS(HerdingStop::by_epsilon(1.5), std::invalid_argument);
}

TEST_CASE("first point is the densest") {
  // 90/10 cluster split: the first selection lands in the heavy cluster.
  std::vector<double> coords;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 90; ++i) coords.push_back(0.1 * next_unit(rng));
  for (int i = 0; i < 10; ++i) coords.push_back(5.0 + 0.1 * next_unit(rng));
  const PointSet p(std::move(coords), 1);
  const std::size_t first = first_point(p, kGauss);
  CHECK(first < 90);
  CHECK(p.point(first)[0] < 1.0);

  // All duplicates tie; lowest index wins.
  const PointSet dup({2.0, 2.0, 2.0}, 1);
  CHECK(first_point(dup, kGauss) == 0);

  HerdingOptions zero;
  zero.start_at_index_zero = true;
  CHECK(first_point(p, kGauss, zero) == 0);
}

TEST_CASE("weights encode selection multiplicity") {
  const PointSet p = uniform_box(10, 1, 77, 0.2);  // tight cluster forces repeats
  const HerdingResult r = herd(p, kGauss, HerdingStop::by_steps(23));
  double total = 0.0;
  for (std::size_t j = 0; j < r.coreset.size(); ++j) total += r.coreset.weight(j);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  // kde under those weights reproduces the final mean estimate.
  const double dk = kernel_distance(p, r.coreset, kGauss);
  CHECK(dk * dk == doctest::Approx(r.trace.entries.back().gap_sq).epsilon(1e-9));
}

TEST_CASE("runs are identical at any thread count") {
  const PointSet p = gaussian_mixture(120, 2, 55);
  set_worker_threads(1);
  const HerdingResult a = herd(p, kGauss, HerdingStop::by_steps(64));
  set_worker_threads(8);
  const HerdingResult b = herd(p, kGauss, HerdingStop::by_steps(64));
  set_worker_threads(1);
  REQUIRE(a.trace.entries.size() == b.trace.entries.size());
  for (std::size_t i = 0; i < a.trace.entries.size(); ++i) {
    CHECK(a.trace.entries[i].chosen_index == b.trace.entries[i].chosen_index);
    CHECK(a.trace.entries[i].gap_sq == b.trace.entries[i].gap_sq);
  }
}

TEST_CASE("subsampled means still run but void the certificate") {
  HerdingOptions opts;
  opts.exact_mean_threshold = 50;
  opts.mean_sample_size = 32;
  const PointSet p = gaussian_mixture(80, 2, 61);
  HerdingState state(p, kGauss, opts);
  CHECK_FALSE(state.certified());
  state.select_first();
  for (int i = 0; i < 10; ++i) state.step();
  CHECK(state.iterations() == 11);
}
