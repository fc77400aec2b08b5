#include "kdecoreset/kde.hpp"

#include <cmath>
#include <stdexcept>

#include "kdecoreset/accumulate.hpp"
#include "kdecoreset/parallel.hpp"

namespace kdecoreset {

namespace {

void check_dims(const WeightedRef& p, const WeightedRef& q) {
  if (p.points->dim() != q.points->dim())
    throw std::invalid_argument("point sets must share a dimension");
}

// True iff a < b coordinate-wise lexicographically.
bool lex_less(std::span<const double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace

double kde(const WeightedRef& s, const Kernel& k, std::span<const double> x) {
  if (x.size() != s.points->dim())
    throw std::invalid_argument("evaluation point dimension mismatch");
  KahanSum sum;
  const std::size_t m = s.size();
  for (std::size_t j = 0; j < m; ++j) sum.add(s.weight(j) * eval(k, x, s.point(j)));
  return sum.value();
}

double kde(const PointSet& p, const Kernel& k, std::span<const double> x) {
  return kde(WeightedRef(p), k, x);
}

double kde(const Coreset& q, const Kernel& k, std::span<const double> x) {
  return kde(WeightedRef(q), k, x);
}

double similarity(const WeightedRef& p, const WeightedRef& q, const Kernel& k) {
  check_dims(p, q);
  const std::size_t np = p.size();
  const std::size_t nq = q.size();
  // One chunked pass over rows; each chunk keeps its own compensation.
  auto row_chunk = [&](std::size_t b, std::size_t e) {
    KahanSum local;
    for (std::size_t i = b; i < e; ++i) {
      const auto pi = p.point(i);
      const double wi = p.weight(i);
      for (std::size_t j = 0; j < nq; ++j)
        local.add(wi * q.weight(j) * eval(k, pi, q.point(j)));
    }
    return local.value();
  };
  const double kappa = chunked_reduce<double>(
      np, 0.0, row_chunk, [](double a, double b) { return a + b; },
      std::max<std::size_t>(1, kDefaultChunk / std::max<std::size_t>(1, nq)));
  return kappa;
}

double kernel_distance(const WeightedRef& p, const WeightedRef& q, const Kernel& k) {
  check_dims(p, q);
  const double radicand =
      similarity(p, p, k) + similarity(q, q, k) - 2.0 * similarity(p, q, k);
  if (radicand < 0.0) {
    if (is_characteristic(k.family) && radicand < -1e-9)
      throw std::runtime_error("kernel distance radicand below -1e-9: internal inconsistency");
    return 0.0;
  }
  return std::sqrt(radicand);
}

PointSet point_only_candidates(const PointSet& p) { return p; }

PointSet sup_error_candidates(const PointSet& p, const Kernel& k, int grid_resolution) {
  if (grid_resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  const std::size_t d = p.dim();
  if (d > 6)
    throw std::invalid_argument(
        "candidate grid is infeasible above d = 6; use point_only_candidates");

  const double margin = 3.0 * k.bandwidth;
  std::vector<std::vector<double>> axes(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double lo = p.box_min()[j] - margin;
    const double hi = p.box_max()[j] + margin;
    auto& axis = axes[j];
    if (grid_resolution == 1) {
      axis.push_back(0.5 * (lo + hi));
    } else {
      const double step = (hi - lo) / static_cast<double>(grid_resolution - 1);
      for (int g = 0; g < grid_resolution; ++g) axis.push_back(lo + step * g);
    }
  }

  std::vector<double> flat(p.coords().begin(), p.coords().end());
  std::vector<std::size_t> idx(d, 0);
  bool done = false;
  while (!done) {
    for (std::size_t j = 0; j < d; ++j) flat.push_back(axes[j][idx[j]]);
    std::size_t j = d;
    for (;;) {
      if (j == 0) {
        done = true;
        break;
      }
      --j;
      if (++idx[j] < axes[j].size()) break;
      idx[j] = 0;
    }
  }
  return PointSet(std::move(flat), d);
}

ErrorReport evaluate_error(const WeightedRef& p, const WeightedRef& q, const Kernel& k,
                           const PointSet& candidates) {
  check_dims(p, q);
  if (candidates.dim() != p.points->dim())
    throw std::invalid_argument("candidate dimension mismatch");

  struct Best {
    double value = -1.0;
    std::size_t index = 0;
  };
  auto scan = [&](std::size_t b, std::size_t e) {
    Best best;
    for (std::size_t i = b; i < e; ++i) {
      const auto x = candidates.point(i);
      const double diff = std::abs(kde(p, k, x) - kde(q, k, x));
      if (diff > best.value ||
          (diff == best.value && best.value >= 0.0 &&
           lex_less(x, candidates.point(best.index)))) {
        best = Best{diff, i};
      }
    }
    return best;
  };
  auto pick = [&](Best a, Best b) {
    if (b.value > a.value) return b;
    if (b.value == a.value && a.value >= 0.0 &&
        lex_less(candidates.point(b.index), candidates.point(a.index)))
      return b;
    return a;
  };
  const Best best = chunked_reduce<Best>(candidates.size(), Best{}, scan, pick, 512);

  ErrorReport report;
  report.sup_error_estimate = best.value;
  const auto w = candidates.point(best.index);
  report.witness_point.assign(w.begin(), w.end());
  report.rkhs_gap = kernel_distance(p, q, k);
  report.candidate_count = candidates.size();
  if (is_characteristic(k.family) &&
      report.sup_error_estimate > report.rkhs_gap + 1e-9)
    throw std::runtime_error("sup error estimate exceeded RKHS gap: internal inconsistency");
  return report;
}

}  // namespace kdecoreset
