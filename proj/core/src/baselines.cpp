#include "kdecoreset/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "kdecoreset/rng.hpp"

namespace kdecoreset {

Coreset random_sample(const PointSet& p, std::size_t m, std::uint64_t seed) {
  const std::size_t n = p.size();
  if (m < 1 || m > n) throw std::invalid_argument("sample size must lie in [1, n]");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> picked;
  picked.reserve(m);
  std::size_t needed = m;
  for (std::size_t i = 0; i < n && needed > 0; ++i) {
    // Include i with probability needed / (n - i).
    if (next_below(rng, n - i) < needed) {
      picked.push_back(i);
      --needed;
    }
  }
  return Coreset(p, std::move(picked));
}

std::size_t joshi_sample_size(double epsilon, double delta, std::size_t d) {
  if (!(epsilon > 0.0) || !(delta > 0.0) || delta >= 1.0)
    throw std::invalid_argument("need epsilon > 0 and delta in (0, 1)");
  const double m =
      std::ceil((static_cast<double>(d) + std::log(1.0 / delta)) / (epsilon * epsilon));
  return static_cast<std::size_t>(m);
}

Coreset sorted_1d(const PointSet& p, std::size_t m) {
  if (p.dim() != 1) throw std::invalid_argument("sorted selection requires d = 1");
  const std::size_t n = p.size();
  if (m < 1 || m > n) throw std::invalid_argument("coreset size must lie in [1, n]");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double va = p.point(a)[0], vb = p.point(b)[0];
    return va < vb || (va == vb && a < b);
  });

  std::vector<std::size_t> picked;
  picked.reserve(m);
  for (std::size_t b = 0; b < m; ++b) {
    const std::size_t lo = b * n / m;
    const std::size_t hi = (b + 1) * n / m;  // exclusive; block is non-empty since m <= n
    const std::size_t median = lo + (hi - lo - 1) / 2;
    picked.push_back(order[median]);
  }
  std::sort(picked.begin(), picked.end());
  return Coreset(p, std::move(picked));
}

SnappedSet grid_snap(const PointSet& p, const Kernel& k, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double lipschitz = lipschitz_constant(k);  // rejects the ball kernel
  const std::size_t d = p.dim();
  const double width = epsilon / (lipschitz * std::sqrt(static_cast<double>(d)));

  std::map<std::vector<long long>, std::size_t> cells;
  std::vector<long long> key(d);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto pt = p.point(i);
    for (std::size_t j = 0; j < d; ++j) {
      const double cell = pt[j] / width;
      if (std::abs(cell) >= 9e18)
        throw std::invalid_argument("coordinates too large for this lattice cell width");
      key[j] = std::llround(cell);
    }
    ++cells[key];
  }

  std::vector<double> coords;
  std::vector<double> weights;
  coords.reserve(cells.size() * d);
  weights.reserve(cells.size());
  const double inv_n = 1.0 / static_cast<double>(p.size());
  for (const auto& [cell, count] : cells) {
    for (long long c : cell) coords.push_back(static_cast<double>(c) * width);
    weights.push_back(static_cast<double>(count) * inv_n);
  }
  return SnappedSet{PointSet(std::move(coords), d), std::move(weights), width};
}

}  // namespace kdecoreset
