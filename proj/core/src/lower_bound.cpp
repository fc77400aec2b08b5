#include "kdecoreset/lower_bound.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kdecoreset {

namespace {

void check_nk(std::size_t n, std::size_t k) {
  if (n < 2) throw std::invalid_argument("construction needs n >= 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("k must lie in [1, n-1]");
}

void check_window(double z_f, double r_f) {
  if (!(z_f > 0.0) || !(r_f > 0.0) || !(r_f < z_f))
    throw std::invalid_argument("window requires 0 < r_f < z_f");
}

}  // namespace

L1L2 l1_l2(std::size_t n, std::size_t k, double z_f) {
  check_nk(n, k);
  if (!(z_f > 0.0)) throw std::invalid_argument("z_f must be positive");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double z_sq = z_f * z_f;

  const double l1_sq = z_sq - z_sq / (2.0 * kd);
  const double root = 1.0 + std::sqrt(1.0 / kd - 1.0 / nd) + std::sqrt(1.0 / (nd - kd) - 1.0 / nd);
  const double l2_sq = 0.5 * z_sq * root * root + 0.5 * z_sq * (1.0 - 1.0 / (nd - kd));
  return L1L2{std::sqrt(l1_sq), std::sqrt(l2_sq)};
}

double witness_gap(std::size_t n, std::size_t k, double z_f, const Kernel& kernel) {
  if (k == n) return 0.0;  // Q = P, the (1 - k/n) factor kills the gap
  const L1L2 l = l1_l2(n, k, z_f);
  const double frac = 1.0 - static_cast<double>(k) / static_cast<double>(n);
  return frac * (profile(kernel, l.l1) - profile(kernel, l.l2));
}

IntervalTerms lb_interval_terms(double z_f, double r_f) {
  check_window(z_f, r_f);
  const double z_sq = z_f * z_f;
  const double corner = 4.0 * z_sq / (2.0 * z_f * r_f + r_f * r_f);
  return IntervalTerms{z_sq / (2.0 * (2.0 * z_f * r_f - r_f * r_f)), corner * corner};
}

KRange admissible_k_range(std::size_t n, double z_f, double r_f) {
  if (n < 2) throw std::invalid_argument("construction needs n >= 2");
  const IntervalTerms terms = lb_interval_terms(z_f, r_f);

  const double lo = std::max({terms.steep_lower, terms.corner_lower, 1.0});
  const double hi =
      std::min(static_cast<double>(n) - 1.0, static_cast<double>(n) - terms.corner_lower);

  KRange range;
  if (hi < lo) return range;
  range.k_min = static_cast<std::size_t>(std::ceil(lo));
  range.k_max = static_cast<std::size_t>(std::floor(hi));
  range.empty = range.k_min > range.k_max;
  return range;
}

BoundCertificate steep_bound_certificate(std::size_t n, std::size_t k, double z_f, double r_f,
                                         const Kernel& kernel) {
  check_nk(n, k);
  const KRange range = admissible_k_range(n, z_f, r_f);
  if (range.empty || k < range.k_min || k > range.k_max)
    throw std::invalid_argument("interval hypothesis fails: k outside the admissible range [" +
                                std::to_string(range.k_min) + ", " + std::to_string(range.k_max) +
                                "]");
  if (2 * k > n)
    throw std::invalid_argument("steep hypothesis fails: requires k <= n/2");
  const SteepnessWindow w = steepness_constant(kernel, z_f, r_f);

  BoundCertificate cert;
  cert.lhs = witness_gap(n, k, z_f, kernel);
  cert.rhs = (w.c_f * z_f / 3.0) * std::sqrt(1.0 / (2.0 * static_cast<double>(k)));
  cert.holds = cert.lhs >= cert.rhs - 1e-12;
  return cert;
}

BoundCertificate drop_bound_certificate(std::size_t n, std::size_t k, double z_f, double r_f) {
  check_nk(n, k);
  check_window(z_f, r_f);
  const Kernel ball(KernelFamily::ball, z_f);
  const SteepnessWindow w = drop_constant(ball, z_f, r_f);
  const L1L2 l = l1_l2(n, k, z_f);
  if (!(l.l1 > z_f - r_f && l.l1 < z_f))
    throw std::invalid_argument("drop hypothesis fails: l1 outside (z_f - r_f, z_f)");
  if (!(l.l2 > z_f && l.l2 < z_f + r_f))
    throw std::invalid_argument("drop hypothesis fails: l2 outside (z_f, z_f + r_f)");

  BoundCertificate cert;
  cert.lhs = witness_gap(n, k, z_f, ball);
  cert.rhs = (1.0 - static_cast<double>(k) / static_cast<double>(n)) * w.c_f;
  cert.holds = cert.lhs >= cert.rhs - 1e-12;
  return cert;
}

std::pair<PointSet, std::vector<double>> materialize(const LBConstruction& c) {
  check_nk(c.n, c.k);
  if (!(c.z_f > 0.0)) throw std::invalid_argument("z_f must be positive");
  if (c.n > 4096) throw std::invalid_argument("materialization is guarded to n <= 4096");

  const std::size_t n = c.n;
  const double scale = c.z_f / std::sqrt(2.0);

  std::vector<double> coords(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) coords[i * n + i] = scale;
  PointSet points(std::move(coords), n);

  // Means of P and of the first k points, and the witness beyond the
  // subset mean.
  std::vector<double> mean_all(n, scale / static_cast<double>(n));
  std::vector<double> mean_k(n, 0.0);
  for (std::size_t i = 0; i < c.k; ++i) mean_k[i] = scale / static_cast<double>(c.k);

  std::vector<double> dir(n);
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dir[i] = mean_k[i] - mean_all[i];
    norm_sq += dir[i] * dir[i];
  }
  const double norm = std::sqrt(norm_sq);
  std::vector<double> witness(n);
  for (std::size_t i = 0; i < n; ++i) witness[i] = mean_k[i] + scale * dir[i] / norm;

  const L1L2 l = l1_l2(c.n, c.k, c.z_f);
  for (std::size_t i = 0; i < n; ++i) {
    const double dist = euclidean_distance(witness, points.point(i));
    const double expected = i < c.k ? l.l1 : l.l2;
    if (std::abs(dist - expected) > 1e-10)
      throw std::runtime_error("materialized geometry disagrees with closed-form distances");
  }
  return {std::move(points), std::move(witness)};
}

double min_k_for_epsilon_real(double c_f, double z_f, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double ratio = c_f * z_f / (3.0 * epsilon);
  return 0.5 * ratio * ratio;
}

std::size_t min_k_for_epsilon(const Kernel& kernel, double z_f, double r_f, double epsilon) {
  const SteepnessWindow w = steepness_constant(kernel, z_f, r_f);
  return static_cast<std::size_t>(std::ceil(min_k_for_epsilon_real(w.c_f, z_f, epsilon)));
}

LBWindow lb_default_window(const Kernel& kernel) {
  double z_f = kernel.bandwidth;
  switch (kernel.family) {
    case KernelFamily::gaussian:
    case KernelFamily::laplace:
    case KernelFamily::ball:
      z_f = kernel.bandwidth;
      break;
    case KernelFamily::triangle:
    case KernelFamily::epanechnikov:
      z_f = 0.5 * kernel.bandwidth;
      break;
  }
  return LBWindow{z_f, 0.5 * z_f};
}

}  // namespace kdecoreset
