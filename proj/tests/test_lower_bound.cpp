#include <doctest.h>

#include <cmath>

#include "kdecoreset/kde.hpp"
#include "kdecoreset/lower_bound.hpp"
#include "oracles.hpp"

using namespace kdecoreset;

namespace {
const Kernel kGauss(KernelFamily::gaussian, 1.0);
const Kernel kLaplace(KernelFamily::laplace, 1.0);
}

TEST_CASE("closed forms at n=4, k=2, z_f=2") {
  const L1L2 l = l1_l2(4, 2, 2.0);
  CHECK(l.l1 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(l.l2 == doctest::Approx(3.0).epsilon(1e-15));

  const auto [points, witness] = materialize({4, 2, 2.0, 1.0, kGauss});
  for (std::size_t i = 0; i < 4; ++i) {
    const double dist = euclidean_distance(witness, points.point(i));
    CHECK(dist == doctest::Approx(i < 2 ? l.l1 : l.l2).epsilon(1e-12));
  }

  CHECK_THROWS_AS(l1_l2(4, 0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(l1_l2(4, 4, 2.0), std::invalid_argument);
}

TEST_CASE("the 1/(n-k) term vanishes at k = n-1") {
  const std::size_t n = 10, k = 9;
  const double z = 1.3;
  const L1L2 l = l1_l2(n, k, z);
  const double root = 1.0 + std::sqrt(1.0 / k - 0.1) + std::sqrt(1.0 - 0.1);
  CHECK(l.l2 * l.l2 == doctest::Approx(0.5 * z * z * root * root).epsilon(1e-14));
}

TEST_CASE("closed forms match explicit geometry across n and k") {
  for (std::size_t n : {2ul, 3ul, 8ul, 16ul, 33ul, 64ul}) {
    for (double z_f : {0.7, 1.0, 2.0}) {
      for (std::size_t k = 1; k < n; ++k) {
        const auto [points, witness] = materialize({n, k, z_f, 0.25 * z_f, kGauss});
        const L1L2 l = l1_l2(n, k, z_f);
        for (std::size_t i = 0; i < n; ++i) {
          const double dist = euclidean_distance(witness, points.point(i));
          CHECK(std::abs(dist - (i < k ? l.l1 : l.l2)) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("perpendicularity of the construction") {
  const std::size_t n = 12, k = 5;
  const double z_f = 2.0, scale = z_f / std::sqrt(2.0);
  const auto [points, witness] = materialize({n, k, z_f, 1.0, kGauss});

  std::vector<double> mean_all(n, scale / n), mean_k(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) mean_k[i] = scale / k;
  for (std::size_t i = 0; i < k; ++i) {
    double dot = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      dot += (mean_all[j] - mean_k[j]) * (mean_k[j] - points.point(i)[j]);
    CHECK(std::abs(dot) <= 1e-12);
  }
  CHECK_THROWS_AS(materialize({5000, 2, 1.0, 0.5, kGauss}), std::invalid_argument);
}

TEST_CASE("witness gap equals the explicit kde difference") {
  for (const Kernel& kernel : {kGauss, kLaplace}) {
    for (std::size_t k : {1ul, 2ul, 3ul}) {
      const auto [points, witness] = materialize({4, k, 2.0, 1.0, kernel});
      std::vector<std::size_t> q_idx(k);
      for (std::size_t i = 0; i < k; ++i) q_idx[i] = i;
      const Coreset q(points, q_idx);
      const double explicit_gap =
          kde(q, kernel, witness) - kde(points, kernel, witness);
      CHECK(witness_gap(4, k, 2.0, kernel) == doctest::Approx(explicit_gap).epsilon(1e-12));
    }
  }
  CHECK(witness_gap(4, 4, 2.0, kGauss) == 0.0);  // Q = P
}

TEST_CASE("admissible range and the footnote constants") {
  const IntervalTerms terms = lb_interval_terms(2.0, 1.0);
  CHECK(terms.corner_lower == (4.0 / 1.25) * (4.0 / 1.25));  // 10.24, exactly
  CHECK(terms.steep_lower == 2.0 / 3.0);

  const KRange r100 = admissible_k_range(100, 2.0, 1.0);
  REQUIRE_FALSE(r100.empty);
  CHECK(r100.k_min == 11);
  CHECK(r100.k_max == 89);

  const KRange r12 = admissible_k_range(12, 2.0, 1.0);
  CHECK(r12.empty);

  CHECK_THROWS_AS(admissible_k_range(100, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("interval lemma placement for every admissible k") {
  const std::size_t n = 100;
  const KRange range = admissible_k_range(n, 2.0, 1.0);
  REQUIRE_FALSE(range.empty);
  for (std::size_t k = range.k_min; k <= range.k_max; ++k) {
    const L1L2 l = l1_l2(n, k, 2.0);
    CHECK(l.l1 > 1.0 + 1e-12);   // z_f - r_f
    CHECK(l.l1 < 2.0 - 1e-12);   // z_f
    CHECK(l.l2 > 2.0 + 1e-12);
    CHECK(l.l2 < 3.0 - 1e-12);   // z_f + r_f
  }
}

TEST_CASE("steep certificate holds on the admissible range") {
  const BoundCertificate one = steep_bound_certificate(4096, 64, 1.0, 0.5, kGauss);
  CHECK(one.holds);
  CHECK(one.lhs > one.rhs);

  const KRange range = admissible_k_range(512, 1.0, 0.5);
  REQUIRE_FALSE(range.empty);
  for (std::size_t k = range.k_min; k <= std::min(range.k_max, std::size_t{256}); ++k) {
    CHECK(steep_bound_certificate(512, k, 1.0, 0.5, kGauss).holds);
    CHECK(steep_bound_certificate(512, k, 1.0, 0.5, kLaplace).holds);
  }

  CHECK_THROWS_WITH_AS(steep_bound_certificate(512, 300, 1.0, 0.5, kGauss),
                       doctest::Contains("k <= n/2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(steep_bound_certificate(512, 5, 1.0, 0.5, kGauss),
                       doctest::Contains("admissible"), std::invalid_argument);
}

TEST_CASE("drop certificate for the ball kernel") {
  // k = n-1 sits outside the sufficient k-interval but the l1/l2 placement
  // holds directly, and the bound meets with equality.
  const std::size_t n = 64;
  const BoundCertificate edge = drop_bound_certificate(n, n - 1, 1.0, 0.5);
  CHECK(edge.holds);
  CHECK(edge.rhs == doctest::Approx(1.0 / n).epsilon(1e-15));
  CHECK(edge.lhs == doctest::Approx(edge.rhs).epsilon(1e-12));

  const KRange range = admissible_k_range(1024, 2.0, 1.0);
  REQUIRE_FALSE(range.empty);
  for (std::size_t k = range.k_min; k <= range.k_max; k += 7) {
    const BoundCertificate cert = drop_bound_certificate(1024, k, 2.0, 1.0);
    CHECK(cert.holds);
    // Ball profile is an indicator, so the gap is exactly (1 - k/n).
    CHECK(cert.lhs == doctest::Approx(1.0 - k / 1024.0).epsilon(1e-14));
  }

  // Windows that miss the jump are rejected by the failing side's name.
  CHECK_THROWS_WITH_AS(drop_bound_certificate(64, 1, 2.0, 0.1), doctest::Contains("l1"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(drop_bound_certificate(64, 6, 2.0, 0.1), doctest::Contains("l2"),
                       std::invalid_argument);
}

TEST_CASE("certificate right side decreases in k and pins the minimal size") {
  const SteepnessWindow w = steepness_constant(kGauss, 1.0, 0.5);
  double prev = 1e9;
  for (std::size_t k = 11; k <= 2048; k *= 2) {
    const BoundCertificate cert = steep_bound_certificate(4096, k, 1.0, 0.5, kGauss);
    CHECK(cert.rhs < prev);
    prev = cert.rhs;
  }
  const double eps = 0.05;
  const double real = min_k_for_epsilon_real(w.c_f, 1.0, eps);
  CHECK(real == doctest::Approx(0.5 * std::pow(w.c_f * 1.0 / (3.0 * eps), 2)).epsilon(1e-15));
  const std::size_t reported = min_k_for_epsilon(kGauss, 1.0, 0.5, eps);
  CHECK(reported == static_cast<std::size_t>(std::ceil(real)));
  CHECK(static_cast<double>(reported) >= real);
}

TEST_CASE("default windows stay inside each family's steep region") {
  for (KernelFamily f : {KernelFamily::gaussian, KernelFamily::laplace, KernelFamily::triangle,
                         KernelFamily::epanechnikov}) {
    const Kernel k(f, 1.7);
    const LBWindow w = lb_default_window(k);
    CHECK(w.r_f == 0.5 * w.z_f);
    CHECK(steepness_constant(k, w.z_f, w.r_f).c_f > 0.0);
  }
  const Kernel ball(KernelFamily::ball, 2.5);
  const LBWindow bw = lb_default_window(ball);
  CHECK(bw.z_f == 2.5);
  CHECK(drop_constant(ball, bw.z_f, bw.r_f).c_f == 1.0);
}
