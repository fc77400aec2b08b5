#pragma once

#include <atomic>
#include <cstddef>
#include <span>
#include <vector>

#include "kdecoreset/kernel.hpp"

namespace kdecoreset {

// Immutable collection of n points in R^d, stored row-major.  Index order is
// stable and is the identity used by Coreset and Coloring.
class PointSet {
 public:
  // coords has n*d entries, point i at [i*d, (i+1)*d).  n >= 1, d >= 1.
  PointSet(std::vector<double> coords, std::size_t dim);

  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return d_; }
  std::span<const double> point(std::size_t i) const { return {coords_.data() + i * d_, d_}; }
  std::span<const double> coords() const { return coords_; }

  const std::vector<double>& box_min() const { return box_min_; }
  const std::vector<double>& box_max() const { return box_max_; }

  // Max pairwise Euclidean distance, O(n^2) on first call, then cached.
  double diameter() const;
  double diameter_over_sigma(const Kernel& k) const { return diameter() / k.bandwidth; }

  PointSet(const PointSet& o);
  PointSet& operator=(const PointSet& o);
  PointSet(PointSet&& o) noexcept;
  PointSet& operator=(PointSet&& o) noexcept;

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<double> coords_;
  std::vector<double> box_min_, box_max_;
  mutable std::atomic<double> diameter_cache_{-1.0};
};

}  // namespace kdecoreset
