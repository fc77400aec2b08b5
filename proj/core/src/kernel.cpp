#include "kdecoreset/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace kdecoreset {

Kernel::Kernel(KernelFamily f, double sigma) : family(f), bandwidth(sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("kernel bandwidth must be positive and finite");
}

double profile(const Kernel& k, double z) {
  if (z < 0.0 || !std::isfinite(z)) throw std::invalid_argument("profile argument must be >= 0");
  const double u = z / k.bandwidth;
  switch (k.family) {
    case KernelFamily::gaussian:
      return std::exp(-u * u);
    case KernelFamily::laplace:
      return std::exp(-u);
    case KernelFamily::triangle:
      return u < 1.0 ? 1.0 - u : 0.0;
    case KernelFamily::ball:
      return u <= 1.0 ? 1.0 : 0.0;
    case KernelFamily::epanechnikov:
      return u < 1.0 ? 1.0 - u * u : 0.0;
  }
  throw std::logic_error("unknown kernel family");
}

double euclidean_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty())
    throw std::invalid_argument("points must share a dimension d >= 1");
  double sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double diff = x[i] - y[i];
    sq += diff * diff;
  }
  return std::sqrt(sq);
}

double eval(const Kernel& k, std::span<const double> x, std::span<const double> y) {
  return profile(k, euclidean_distance(x, y));
}

bool is_characteristic(KernelFamily f) {
  return f == KernelFamily::gaussian || f == KernelFamily::laplace;
}

namespace {

// -f'(z) where defined.  Piecewise families return 0 beyond their support.
double neg_profile_derivative(const Kernel& k, double z) {
  const double s = k.bandwidth;
  const double u = z / s;
  switch (k.family) {
    case KernelFamily::gaussian:
      return (2.0 * z / (s * s)) * std::exp(-u * u);
    case KernelFamily::laplace:
      return std::exp(-u) / s;
    case KernelFamily::triangle:
      return u < 1.0 ? 1.0 / s : 0.0;
    case KernelFamily::epanechnikov:
      return u < 1.0 ? 2.0 * z / (s * s) : 0.0;
    case KernelFamily::ball:
      throw std::invalid_argument("ball kernel has no derivative at its jump");
  }
  throw std::logic_error("unknown kernel family");
}

void check_window(double z_f, double r_f) {
  if (!(z_f > 0.0) || !(r_f > 0.0) || !(r_f < z_f) || !std::isfinite(z_f) || !std::isfinite(r_f))
    throw std::invalid_argument("steepness window requires 0 < r_f < z_f");
}

}  // namespace

SteepnessWindow steepness_constant(const Kernel& k, double z_f, double r_f) {
  check_window(z_f, r_f);
  if (k.family == KernelFamily::ball)
    throw std::invalid_argument("ball kernel is a drop kernel; use drop_constant");

  const double lo = z_f - r_f;
  const double hi = z_f + r_f;
  double c_f = 0.0;
  switch (k.family) {
    case KernelFamily::gaussian:
      // -f' is unimodal with peak at sigma/sqrt(2); the infimum over a
      // closed interval sits at an endpoint.
      c_f = std::min(neg_profile_derivative(k, lo), neg_profile_derivative(k, hi));
      break;
    case KernelFamily::laplace:
      c_f = neg_profile_derivative(k, hi);  // monotone decreasing
      break;
    case KernelFamily::triangle:
      c_f = hi <= k.bandwidth ? 1.0 / k.bandwidth : 0.0;
      break;
    case KernelFamily::epanechnikov:
      c_f = hi <= k.bandwidth ? 2.0 * lo / (k.bandwidth * k.bandwidth) : 0.0;
      break;
    case KernelFamily::ball:
      break;  // unreachable
  }
  if (!(c_f > 0.0))
    throw std::invalid_argument("profile is not steep on the requested window");
  return SteepnessWindow{z_f, r_f, c_f};
}

SteepnessWindow drop_constant(const Kernel& k, double z_f, double r_f) {
  check_window(z_f, r_f);
  if (k.family != KernelFamily::ball)
    throw std::invalid_argument("drop_constant applies to the ball kernel only");
  if (z_f != k.bandwidth)
    throw std::invalid_argument("drop window must straddle the jump: z_f must equal the bandwidth");
  return SteepnessWindow{z_f, r_f, 1.0};
}

double lipschitz_constant(const Kernel& k) {
  const double s = k.bandwidth;
  switch (k.family) {
    case KernelFamily::gaussian:
      // sup of (2z/s^2) exp(-z^2/s^2), attained at z = s/sqrt(2).
      return std::sqrt(2.0) * std::exp(-0.5) / s;
    case KernelFamily::laplace:
      return 1.0 / s;
    case KernelFamily::triangle:
      return 1.0 / s;
    case KernelFamily::epanechnikov:
      return 2.0 / s;
    case KernelFamily::ball:
      throw std::invalid_argument("ball kernel has no bounded Lipschitz factor");
  }
  throw std::logic_error("unknown kernel family");
}

KernelFamily parse_kernel_family(const std::string& name) {
  if (name == "gaussian") return KernelFamily::gaussian;
  if (name == "laplace") return KernelFamily::laplace;
  if (name == "triangle") return KernelFamily::triangle;
  if (name == "ball") return KernelFamily::ball;
  if (name == "epanechnikov") return KernelFamily::epanechnikov;
  throw std::invalid_argument("unknown kernel family: " + name);
}

std::string kernel_family_name(KernelFamily f) {
  switch (f) {
    case KernelFamily::gaussian: return "gaussian";
    case KernelFamily::laplace: return "laplace";
    case KernelFamily::triangle: return "triangle";
    case KernelFamily::ball: return "ball";
    case KernelFamily::epanechnikov: return "epanechnikov";
  }
  throw std::logic_error("unknown kernel family");
}

}  // namespace kdecoreset
