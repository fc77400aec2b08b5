#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kdecoreset/coreset.hpp"
#include "kdecoreset/kde.hpp"

namespace kdecoreset {

// +1/-1 label per point of a parent set.
struct Coloring {
  std::vector<int> signs;
};

// Axis-aligned rectangle [lo_j, hi_j] per coordinate.
struct Rectangle {
  std::vector<double> lo;
  std::vector<double> hi;
};

struct DiscrepancyMode {
  bool exact = true;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;

  static DiscrepancyMode exact_mode() { return {}; }
  static DiscrepancyMode sampled(std::size_t count, std::uint64_t seed) {
    return {false, count, seed};
  }
};

struct RectDiscrepancyResult {
  double value = 0.0;
  Rectangle witness;
  bool exact = false;
};

// Exact mode gates on the canonical candidate family size n^(2d) <= 1e8 and
// enumerates rectangles with faces at point coordinates, which suffices for
// the max over all axis-aligned rectangles.  Sampled mode draws rectangles
// with corners at point coordinates and is a certified lower bound.
bool rectangle_exact_within_budget(std::size_t n, std::size_t d);
RectDiscrepancyResult rectangle_discrepancy(const PointSet& p, const Coloring& chi,
                                            const DiscrepancyMode& mode);

struct KernelDiscrepancyResult {
  double value = 0.0;
  std::vector<double> witness_center;
};

// max over centers of |sum_p chi(p) K(x,p)|; a certified lower bound on the
// sup over all of R^d.
KernelDiscrepancyResult kernel_discrepancy(const PointSet& p, const Coloring& chi,
                                           const Kernel& k, const PointSet& centers);
// Default centers: the points of P plus a 3-sigma expanded grid.
KernelDiscrepancyResult kernel_discrepancy(const PointSet& p, const Coloring& chi,
                                           const Kernel& k, int grid_resolution = 5);

// Validates the interval representation of the unit Gaussian,
//   int_0^inf 2r exp(-r^2) 1[-r,r](x) dr = exp(-x^2),
// composed per axis.  Returns |midpoint quadrature - K(c,x)| where the
// quadrature uses `quadrature_nodes` nodes per axis on [0, 6].  d <= 3.
double gaussian_separability_check(std::span<const double> c, std::span<const double> x,
                                   int quadrature_nodes);

// Alternating +1/-1 in sorted order (d = 1 only, coordinate ties broken by
// index).  Interval discrepancy of the result is exactly 1.
Coloring color_1d(const PointSet& p);

// Best of `restarts` balanced random colorings, scored by rectangle
// discrepancy (exact when within budget, otherwise sampled with 4n^2
// rectangles shared across candidates).  For d = 1 the alternating coloring
// joins the candidate pool.  Deterministic given the seed.
Coloring color_heuristic(const PointSet& p, std::size_t restarts, std::uint64_t seed);

enum class ColoringStrategy { alt1d, heuristic };

struct HalvingOptions {
  ColoringStrategy strategy = ColoringStrategy::alt1d;
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
  int grid_resolution = 5;  // candidate grid for discrepancy accounting
};

struct HalvingLevel {
  std::size_t input_size = 0;
  double discrepancy = 0.0;  // certified kernel-discrepancy bound used in accounting
  std::size_t retained_size = 0;
  int retained_sign = +1;
};

struct HalvingReport {
  std::vector<HalvingLevel> levels;
  double total_bound = 0.0;
};

// One halving step: colors P, keeps the larger color class (ties keep +1)
// and accounts the KDE error added by dropping the other class, which is at
// most (D + |class imbalance|) / n.  For the alternating 1-d coloring under
// a Gaussian kernel D = 1 by the kernel-to-rectangle transference; otherwise
// D is the measured kernel discrepancy over the default centers.
std::pair<PointSet, HalvingLevel> halve(const PointSet& p, const Kernel& k,
                                        const HalvingOptions& opts);

// Greedy repeated halving while the accumulated certified bound stays within
// epsilon.  Gaussian kernels only; coordinates are pre-scaled by 1/sigma so
// the unit-bandwidth transference applies.  When no halving is admissible
// the full set is returned with zero levels.
std::pair<Coreset, HalvingReport> halving_coreset(const PointSet& p, const Kernel& k,
                                                  double epsilon, const HalvingOptions& opts);

}  // namespace kdecoreset
