#pragma once

#include <span>
#include <string>

namespace kdecoreset {

enum class KernelFamily { gaussian, laplace, triangle, ball, epanechnikov };

// Shift-invariant kernel K(x,y) = f(||x-y||), normalized so f(0) = 1.
// Profiles, with u = z / sigma:
//   gaussian      exp(-u^2)
//   laplace       exp(-u)
//   triangle      max(0, 1 - u)
//   ball          1 if u <= 1 else 0
//   epanechnikov  max(0, 1 - u^2)
struct Kernel {
  KernelFamily family;
  double bandwidth;  // sigma > 0, same length units as point coordinates

  Kernel(KernelFamily f, double sigma);
};

// Univariate profile f(z) for z >= 0; non-increasing, values in [0, 1].
double profile(const Kernel& k, double z);

// K(x, y) = profile(||x - y||).  Throws std::invalid_argument on dimension
// mismatch or empty points.
double eval(const Kernel& k, std::span<const double> x, std::span<const double> y);

// Euclidean distance; shared by the whole library.
double euclidean_distance(std::span<const double> x, std::span<const double> y);

// Gaussian and Laplace kernels are characteristic: the kernel distance is a
// metric and the RKHS gap upper-bounds the sup KDE error.
bool is_characteristic(KernelFamily f);

// A window (z_f - r_f, z_f + r_f) on which the profile drops at least
// linearly with rate c_f (steep kernels) or by a jump of height c_f (drop
// kernels).
struct SteepnessWindow {
  double z_f;
  double r_f;
  double c_f;
};

// c_f = inf of -f'(z) over [z_f - r_f, z_f + r_f], from the analytic
// derivative.  Requires 0 < r_f < z_f and a continuous family; the ball
// kernel is rejected (use drop_constant) and windows where the profile goes
// flat are rejected as not steep.
SteepnessWindow steepness_constant(const Kernel& k, double z_f, double r_f);

// Drop height across the ball kernel's discontinuity.  Requires the ball
// family and z_f equal to the bandwidth, so the window straddles the jump;
// the normalized drop height is always 1.
SteepnessWindow drop_constant(const Kernel& k, double z_f, double r_f);

// C = sup_z |f'(z)|, in units of 1/length.  Rejects the ball family, whose
// Lipschitz factor is unbounded.
double lipschitz_constant(const Kernel& k);

// Parsing / formatting for CLI flags and report echoes.
KernelFamily parse_kernel_family(const std::string& name);
std::string kernel_family_name(KernelFamily f);

}  // namespace kdecoreset
