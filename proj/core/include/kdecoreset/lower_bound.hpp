#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kdecoreset/kernel.hpp"
#include "kdecoreset/point_set.hpp"

namespace kdecoreset {

// Hard-instance construction: P = { (z_f/sqrt(2)) e_i : i = 1..n } in R^n,
// the subset Q = {p_1..p_k} (by symmetry), and the witness point p on the
// ray from the full mean through the subset mean.  All distances from p
// collapse to two values, l1 (to Q) and l2 (to the rest).
struct LBConstruction {
  std::size_t n = 2;
  std::size_t k = 1;
  double z_f = 1.0;
  double r_f = 0.5;
  Kernel kernel{KernelFamily::gaussian, 1.0};
};

struct L1L2 {
  double l1 = 0.0;
  double l2 = 0.0;
};

// Closed forms:
//   l1^2 = z_f^2 - z_f^2 / (2k)
//   l2^2 = (z_f^2/2) (1 + sqrt(1/k - 1/n) + sqrt(1/(n-k) - 1/n))^2
//        + (z_f^2/2) (1 - 1/(n-k))
// Requires 1 <= k <= n-1.
L1L2 l1_l2(std::size_t n, std::size_t k, double z_f);

// (1 - k/n) (f(l1) - f(l2)), the exact value of (kde_Q - kde_P) at the
// witness point.
double witness_gap(std::size_t n, std::size_t k, double z_f, const Kernel& kernel);

// k-interval on which l1 lands in (z_f - r_f, z_f) and l2 in
// (z_f, z_f + r_f):
//   max{ z_f^2 / (2(2 z_f r_f - r_f^2)), (4 z_f^2 / (2 z_f r_f + r_f^2))^2, 1 }
//     <= k <=
//   min{ n-1, n - (4 z_f^2 / (2 z_f r_f + r_f^2))^2 }.
// An empty range is a valid result, not an error.
struct KRange {
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  bool empty = true;
};
KRange admissible_k_range(std::size_t n, double z_f, double r_f);

// The two window-dependent expressions behind the interval:
//   steep_lower  = z_f^2 / (2 (2 z_f r_f - r_f^2))
//   corner_lower = (4 z_f^2 / (2 z_f r_f + r_f^2))^2
// At z_f = 2 r_f these are 2/3 and (4/1.25)^2 = 10.24.
struct IntervalTerms {
  double steep_lower = 0.0;
  double corner_lower = 0.0;
};
IntervalTerms lb_interval_terms(double z_f, double r_f);

struct BoundCertificate {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// Steep kernels: checks witness_gap >= (c_f z_f / 3) sqrt(1/(2k)) with c_f
// from steepness_constant.  Requires k in the admissible range and
// 2k <= n; errors name the violated hypothesis.  Holding for every
// admissible k is the numeric content of the 1/eps^2 lower bound.
BoundCertificate steep_bound_certificate(std::size_t n, std::size_t k, double z_f, double r_f,
                                         const Kernel& kernel);

// Ball kernel: checks witness_gap >= (1 - k/n) c_f with c_f = 1 from
// drop_constant.  Requires l1 < z_f < l2 placement (checked directly, which
// also admits k up to n-1).
BoundCertificate drop_bound_certificate(std::size_t n, std::size_t k, double z_f, double r_f);

// Explicit geometry: the n scaled basis points and the witness point p.
// Self-validates that distances from p match l1/l2 to 1e-10.  Guarded to
// n <= 4096.
std::pair<PointSet, std::vector<double>> materialize(const LBConstruction& c);

// Smallest k compatible with sup error <= epsilon under the steep
// certificate: (c_f z_f / (3 epsilon))^2 / 2, reported as its ceiling.
double min_k_for_epsilon_real(double c_f, double z_f, double epsilon);
std::size_t min_k_for_epsilon(const Kernel& kernel, double z_f, double r_f, double epsilon);

// Footnote-guided defaults: the steep window (z_f, z_f/2) per family,
// scaled by the bandwidth.
struct LBWindow {
  double z_f = 0.0;
  double r_f = 0.0;
};
LBWindow lb_default_window(const Kernel& kernel);

}  // namespace kdecoreset
