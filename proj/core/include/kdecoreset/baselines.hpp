#pragma once

#include <cstdint>

#include "kdecoreset/coreset.hpp"
#include "kdecoreset/kernel.hpp"
#include "kdecoreset/point_set.hpp"

namespace kdecoreset {

// m indices sampled uniformly without replacement (selection sampling, so
// the index list comes out sorted).  Unweighted.
Coreset random_sample(const PointSet& p, std::size_t m, std::uint64_t seed);

// Sample size ceil((1/eps^2)(d + ln(1/delta))) behind the random-sampling
// guarantee.
std::size_t joshi_sample_size(double epsilon, double delta, std::size_t d);

// d = 1 only: partitions the sorted order into m near-equal blocks and keeps
// each block's lower median.  Unweighted.
Coreset sorted_1d(const PointSet& p, std::size_t m);

// Result of snapping points to a lattice: distinct lattice points in
// lexicographic order with multiplicity weights summing to 1.
struct SnappedSet {
  PointSet points;
  std::vector<double> weights;
  double cell_width = 0.0;
};

// Snaps each point to the nearest lattice point of an infinite grid with
// cell width epsilon / (C sqrt(d)), C the kernel's Lipschitz constant.  Each
// point moves at most epsilon/(2C), so the KDE changes by at most epsilon/2.
// Rejects the ball kernel (no Lipschitz constant).
SnappedSet grid_snap(const PointSet& p, const Kernel& k, double epsilon);

}  // namespace kdecoreset
