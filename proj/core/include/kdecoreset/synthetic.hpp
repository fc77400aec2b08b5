#pragma once

#include <cstdint>

#include "kdecoreset/point_set.hpp"

namespace kdecoreset {

// Seeded generators used by the benchmark harness; the seed fully determines
// the output on every platform.

// n points uniform in [0, scale]^d.
PointSet uniform_box(std::size_t n, std::size_t d, std::uint64_t seed, double scale = 1.0);

// Gaussian mixture: component means uniform in [0, scale]^d, isotropic
// standard deviation 0.15 * scale, components picked uniformly per point.
PointSet gaussian_mixture(std::size_t n, std::size_t d, std::uint64_t seed,
                          std::size_t components = 3, double scale = 1.0);

}  // namespace kdecoreset
