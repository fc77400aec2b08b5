#include "kdecoreset/synthetic.hpp"

#include <stdexcept>

#include "kdecoreset/rng.hpp"

namespace kdecoreset {

PointSet uniform_box(std::size_t n, std::size_t d, std::uint64_t seed, double scale) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> coords(n * d);
  for (double& v : coords) v = scale * next_unit(rng);
  return PointSet(std::move(coords), d);
}

PointSet gaussian_mixture(std::size_t n, std::size_t d, std::uint64_t seed,
                          std::size_t components, double scale) {
  if (n < 1 || d < 1 || components < 1)
    throw std::invalid_argument("need n >= 1, d >= 1 and at least one component");
  std::mt19937_64 rng(seed);
  std::vector<double> means(components * d);
  for (double& v : means) v = scale * next_unit(rng);
  const double stddev = 0.15 * scale;

  std::vector<double> coords(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = static_cast<std::size_t>(next_below(rng, components));
    for (std::size_t j = 0; j < d; ++j)
      coords[i * d + j] = means[c * d + j] + stddev * next_gaussian(rng);
  }
  return PointSet(std::move(coords), d);
}

}  // namespace kdecoreset
