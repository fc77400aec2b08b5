#include "kdecoreset/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kdecoreset/accumulate.hpp"
#include "kdecoreset/parallel.hpp"
#include "kdecoreset/rng.hpp"

namespace kdecoreset {

namespace {

void validate_coloring(const PointSet& p, const Coloring& chi) {
  if (chi.signs.size() != p.size())
    throw std::invalid_argument("coloring length must match the point set");
  for (int s : chi.signs)
    if (s != 1 && s != -1) throw std::invalid_argument("coloring entries must be +1 or -1");
}

bool lex_less(std::span<const double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Exact rectangle discrepancy.
//
// Every subset of P cut out by an axis-aligned rectangle is cut out by its
// minimal enclosing rectangle, whose faces sit at coordinates of points
// inside.  Enumerating bound pairs per dimension over the distinct
// coordinates of the surviving subset is therefore exhaustive.  The last
// dimension collapses to a maximum |subarray sum| over coordinate atoms.

struct ExactScan {
  const PointSet* p;
  const Coloring* chi;
  std::size_t d;
  double best = 0.0;
  Rectangle witness;
  std::vector<double> cur_lo, cur_hi;

  // (coordinate, summed sign) atoms of `subset` along `dim`, sorted.
  std::vector<std::pair<double, double>> atoms(const std::vector<std::size_t>& subset,
                                               std::size_t dim) const {
    std::vector<std::pair<double, double>> out;
    out.reserve(subset.size());
    for (std::size_t i : subset) out.emplace_back(p->point(i)[dim], chi->signs[i]);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < out.size(); ++r) {
      if (w > 0 && out[w - 1].first == out[r].first) {
        out[w - 1].second += out[r].second;
      } else {
        out[w++] = out[r];
      }
    }
    out.resize(w);
    return out;
  }

  void consider(double value, std::size_t lo_atom, std::size_t hi_atom,
                const std::vector<std::pair<double, double>>& a) {
    if (value > best) {
      best = value;
      witness.lo.assign(cur_lo.begin(), cur_lo.end());
      witness.hi.assign(cur_hi.begin(), cur_hi.end());
      witness.lo.back() = a[lo_atom].first;
      witness.hi.back() = a[hi_atom].first;
    }
  }

  void base(const std::vector<std::size_t>& subset) {
    const auto a = atoms(subset, d - 1);
    // Max-sum and min-sum nonempty runs in one pass each.
    for (int dir = 0; dir < 2; ++dir) {
      double run = 0.0, peak = -1.0;
      std::size_t start = 0, peak_lo = 0, peak_hi = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        run += dir == 0 ? a[i].second : -a[i].second;
        if (run > peak) {
          peak = run;
          peak_lo = start;
          peak_hi = i;
        }
        if (run < 0.0) {
          run = 0.0;
          start = i + 1;
        }
      }
      if (peak >= 0.0) consider(peak, peak_lo, peak_hi, a);
    }
  }

  void recurse(const std::vector<std::size_t>& subset, std::size_t dim) {
    if (subset.empty()) return;
    if (dim + 1 == d) {
      base(subset);
      return;
    }
    // Group subset indices by distinct coordinate along `dim`.
    std::vector<std::size_t> order(subset);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return p->point(i)[dim] < p->point(j)[dim];
    });
    std::vector<std::vector<std::size_t>> groups;
    std::vector<double> values;
    for (std::size_t i : order) {
      const double v = p->point(i)[dim];
      if (values.empty() || values.back() != v) {
        values.push_back(v);
        groups.emplace_back();
      }
      groups.back().push_back(i);
    }
    for (std::size_t lo = 0; lo < groups.size(); ++lo) {
      std::vector<std::size_t> slab;
      for (std::size_t hi = lo; hi < groups.size(); ++hi) {
        slab.insert(slab.end(), groups[hi].begin(), groups[hi].end());
        cur_lo[dim] = values[lo];
        cur_hi[dim] = values[hi];
        recurse(slab, dim + 1);
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Rank space + cumulative sign table for sampled rectangles.

struct RankSpace {
  std::vector<std::vector<double>> distinct;      // per dim, sorted
  std::vector<std::vector<std::size_t>> ranks;    // per dim, per point

  explicit RankSpace(const PointSet& p) {
    const std::size_t d = p.dim();
    const std::size_t n = p.size();
    distinct.resize(d);
    ranks.assign(d, std::vector<std::size_t>(n));
    for (std::size_t j = 0; j < d; ++j) {
      auto& vals = distinct[j];
      vals.reserve(n);
      for (std::size_t i = 0; i < n; ++i) vals.push_back(p.point(i)[j]);
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (std::size_t i = 0; i < n; ++i)
        ranks[j][i] = static_cast<std::size_t>(
            std::lower_bound(vals.begin(), vals.end(), p.point(i)[j]) - vals.begin());
    }
  }

  std::size_t cells() const {
    std::size_t c = 1;
    for (const auto& v : distinct) {
      if (c > (std::size_t{1} << 48) / std::max<std::size_t>(1, v.size())) return ~std::size_t{0};
      c *= v.size();
    }
    return c;
  }
};

// d-dimensional inclusive prefix sums of signs over the rank grid.
class SignTable {
 public:
  SignTable(const PointSet& p, const Coloring& chi, const RankSpace& rs) {
    d_ = p.dim();
    dims_.resize(d_);
    for (std::size_t j = 0; j < d_; ++j) dims_[j] = rs.distinct[j].size();
    stride_.assign(d_, 1);
    for (std::size_t j = d_; j-- > 1;) stride_[j - 1] = stride_[j] * dims_[j];
    table_.assign(stride_[0] * dims_[0], 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < d_; ++j) idx += rs.ranks[j][i] * stride_[j];
      table_[idx] += chi.signs[i];
    }
    // Prefix along each axis.
    for (std::size_t j = 0; j < d_; ++j) {
      const std::size_t len = dims_[j], stride = stride_[j];
      const std::size_t total = table_.size();
      for (std::size_t base = 0; base < total; ++base) {
        const std::size_t pos = (base / stride) % len;
        if (pos > 0) continue;
        for (std::size_t r = 1; r < len; ++r)
          table_[base + r * stride] += table_[base + (r - 1) * stride];
      }
    }
  }

  // Signed count inside the inclusive rank box; bounds interleaved as
  // lo0, hi0, lo1, hi1, ...
  long long query(const std::uint32_t* bounds) const {
    long long total = 0;
    const std::size_t corners = std::size_t{1} << d_;
    for (std::size_t mask = 0; mask < corners; ++mask) {
      std::size_t idx = 0;
      int sign = 1;
      bool valid = true;
      for (std::size_t j = 0; j < d_; ++j) {
        if (mask & (std::size_t{1} << j)) {
          const std::uint32_t lo = bounds[2 * j];
          if (lo == 0) {
            valid = false;
            break;
          }
          idx += (lo - 1) * stride_[j];
          sign = -sign;
        } else {
          idx += bounds[2 * j + 1] * stride_[j];
        }
      }
      if (valid) total += sign * table_[idx];
    }
    return total;
  }

 private:
  std::size_t d_ = 0;
  std::vector<std::size_t> dims_, stride_;
  std::vector<long long> table_;
};

constexpr std::size_t kSignTableCellLimit = 10'000'000;  // 80 MB of prefix sums

// Sampled rank rectangles packed flat: 2d entries per rectangle,
// lo0, hi0, lo1, hi1, ...
struct RankRects {
  std::size_t d = 0;
  std::vector<std::uint32_t> bounds;
  std::size_t count() const { return d == 0 ? 0 : bounds.size() / (2 * d); }
  const std::uint32_t* rect(std::size_t s) const { return bounds.data() + s * 2 * d; }
};

RankRects sample_rank_rects(const RankSpace& rs, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RankRects out;
  out.d = rs.distinct.size();
  out.bounds.resize(count * 2 * out.d);
  std::size_t w = 0;
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t j = 0; j < out.d; ++j) {
      const std::size_t m = rs.distinct[j].size();
      auto a = static_cast<std::uint32_t>(next_below(rng, m));
      auto b = static_cast<std::uint32_t>(next_below(rng, m));
      if (a > b) std::swap(a, b);
      out.bounds[w++] = a;
      out.bounds[w++] = b;
    }
  }
  return out;
}

double scan_rect_direct(const PointSet& p, const Coloring& chi, const RankSpace& rs,
                        const std::uint32_t* r) {
  long long sum = 0;
  const std::size_t d = p.dim();
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool in = true;
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t rank = rs.ranks[j][i];
      if (rank < r[2 * j] || rank > r[2 * j + 1]) {
        in = false;
        break;
      }
    }
    if (in) sum += chi.signs[i];
  }
  return static_cast<double>(std::llabs(sum));
}

Rectangle rank_rect_to_rectangle(const RankSpace& rs, const std::uint32_t* r) {
  Rectangle rect;
  const std::size_t d = rs.distinct.size();
  rect.lo.resize(d);
  rect.hi.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    rect.lo[j] = rs.distinct[j][r[2 * j]];
    rect.hi[j] = rs.distinct[j][r[2 * j + 1]];
  }
  return rect;
}

double sampled_discrepancy(const PointSet& p, const Coloring& chi, const RankSpace& rs,
                           const RankRects& rects, Rectangle* witness) {
  const bool use_table = rs.cells() <= kSignTableCellLimit;
  double best = 0.0;
  std::size_t best_rect = 0;
  const std::size_t count = rects.count();
  if (use_table) {
    const SignTable table(p, chi, rs);
    for (std::size_t s = 0; s < count; ++s) {
      const double v = static_cast<double>(std::llabs(table.query(rects.rect(s))));
      if (v > best) {
        best = v;
        best_rect = s;
      }
    }
  } else {
    for (std::size_t s = 0; s < count; ++s) {
      const double v = scan_rect_direct(p, chi, rs, rects.rect(s));
      if (v > best) {
        best = v;
        best_rect = s;
      }
    }
  }
  if (witness && count > 0) *witness = rank_rect_to_rectangle(rs, rects.rect(best_rect));
  return best;
}

}  // namespace

bool rectangle_exact_within_budget(std::size_t n, std::size_t d) {
  return std::pow(static_cast<double>(n), 2.0 * static_cast<double>(d)) <= 1e8;
}

RectDiscrepancyResult rectangle_discrepancy(const PointSet& p, const Coloring& chi,
                                            const DiscrepancyMode& mode) {
  validate_coloring(p, chi);
  RectDiscrepancyResult result;
  if (mode.exact) {
    if (!rectangle_exact_within_budget(p.size(), p.dim()))
      throw std::invalid_argument(
          "exact rectangle discrepancy over the n^(2d) <= 1e8 budget; use sampled mode");
    ExactScan scan{&p, &chi, p.dim(), 0.0, {}, {}, {}};
    scan.cur_lo.assign(p.dim(), 0.0);
    scan.cur_hi.assign(p.dim(), 0.0);
    std::vector<std::size_t> all(p.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    scan.recurse(all, 0);
    result.value = scan.best;
    result.witness = std::move(scan.witness);
    result.exact = true;
    return result;
  }
  if (mode.sample_count == 0)
    throw std::invalid_argument("sampled mode needs a positive rectangle count");
  const RankSpace rs(p);
  const auto rects = sample_rank_rects(rs, mode.sample_count, mode.seed);
  result.value = sampled_discrepancy(p, chi, rs, rects, &result.witness);
  result.exact = false;
  return result;
}

KernelDiscrepancyResult kernel_discrepancy(const PointSet& p, const Coloring& chi,
                                           const Kernel& k, const PointSet& centers) {
  validate_coloring(p, chi);
  if (centers.dim() != p.dim()) throw std::invalid_argument("center dimension mismatch");
  if (centers.size() == 0) throw std::invalid_argument("center set must be non-empty");

  struct Best {
    double value = -1.0;
    std::size_t index = 0;
  };
  auto scan = [&](std::size_t b, std::size_t e) {
    Best best;
    for (std::size_t c = b; c < e; ++c) {
      const auto x = centers.point(c);
      KahanSum sum;
      for (std::size_t i = 0; i < p.size(); ++i)
        sum.add(chi.signs[i] * eval(k, x, p.point(i)));
      const double v = std::abs(sum.value());
      if (v > best.value || (v == best.value && best.value >= 0.0 &&
                             lex_less(x, centers.point(best.index))))
        best = Best{v, c};
    }
    return best;
  };
  auto pick = [&](Best a, Best b) {
    if (b.value > a.value) return b;
    if (b.value == a.value && a.value >= 0.0 &&
        lex_less(centers.point(b.index), centers.point(a.index)))
      return b;
    return a;
  };
  const Best best = chunked_reduce<Best>(centers.size(), Best{}, scan, pick, 256);

  KernelDiscrepancyResult out;
  out.value = best.value;
  const auto w = centers.point(best.index);
  out.witness_center.assign(w.begin(), w.end());
  return out;
}

KernelDiscrepancyResult kernel_discrepancy(const PointSet& p, const Coloring& chi,
                                           const Kernel& k, int grid_resolution) {
  const PointSet centers = p.dim() <= 6 ? sup_error_candidates(p, k, grid_resolution)
                                        : point_only_candidates(p);
  return kernel_discrepancy(p, chi, k, centers);
}

double gaussian_separability_check(std::span<const double> c, std::span<const double> x,
                                   int quadrature_nodes) {
  if (c.size() != x.size() || c.empty())
    throw std::invalid_argument("center and point must share a dimension d >= 1");
  if (c.size() > 3)
    throw std::invalid_argument("tensor quadrature is limited to d <= 3");
  if (quadrature_nodes < 1) throw std::invalid_argument("need at least one quadrature node");

  constexpr double kRMax = 6.0;  // exp(-36) is below double noise
  const double h = kRMax / quadrature_nodes;
  double quad_product = 1.0;
  double dist_sq = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double delta = std::abs(x[j] - c[j]);
    dist_sq += delta * delta;
    KahanSum axis;
    for (int node = 0; node < quadrature_nodes; ++node) {
      const double r = (node + 0.5) * h;
      if (r >= delta) axis.add(h * 2.0 * r * std::exp(-r * r));
    }
    quad_product *= axis.value();
  }
  return std::abs(quad_product - std::exp(-dist_sq));
}

Coloring color_1d(const PointSet& p) {
  if (p.dim() != 1) throw std::invalid_argument("alternating coloring requires d = 1");
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double va = p.point(a)[0], vb = p.point(b)[0];
    return va < vb || (va == vb && a < b);
  });
  Coloring chi;
  chi.signs.assign(p.size(), 1);
  for (std::size_t r = 0; r < order.size(); ++r) chi.signs[order[r]] = (r % 2 == 0) ? 1 : -1;
  return chi;
}

Coloring color_heuristic(const PointSet& p, std::size_t restarts, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("need at least one restart");
  const std::size_t n = p.size();
  const std::size_t d = p.dim();

  const bool exact = rectangle_exact_within_budget(n, d);
  RankSpace rs(p);
  RankRects rects;
  if (!exact)
    rects = sample_rank_rects(rs, 4 * n * n, splitmix64(seed ^ 0x5eedbeefULL));

  auto score = [&](const Coloring& chi) {
    if (exact) return rectangle_discrepancy(p, chi, DiscrepancyMode::exact_mode()).value;
    return sampled_discrepancy(p, chi, rs, rects, nullptr);
  };

  Coloring best;
  double best_score = 0.0;
  bool have_best = false;
  auto offer = [&](Coloring chi) {
    const double s = score(chi);
    if (!have_best || s < best_score) {
      best = std::move(chi);
      best_score = s;
      have_best = true;
    }
  };

  if (d == 1) offer(color_1d(p));

  std::mt19937_64 rng(seed);
  std::vector<int> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = i < (n + 1) / 2 ? 1 : -1;
  for (std::size_t r = 0; r < restarts; ++r) {
    Coloring chi;
    chi.signs = base;
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = next_below(rng, i);
      std::swap(chi.signs[i - 1], chi.signs[j]);
    }
    offer(std::move(chi));
  }
  return best;
}

namespace {

PointSet default_centers(const PointSet& p, const Kernel& k, int grid_resolution) {
  return p.dim() <= 6 ? sup_error_candidates(p, k, grid_resolution) : point_only_candidates(p);
}

struct LevelOutcome {
  Coloring chi;
  HalvingLevel level;
};

LevelOutcome run_level(const PointSet& pts, const Kernel& k, const HalvingOptions& opts,
                       const PointSet& centers, std::uint64_t level_seed) {
  LevelOutcome out;
  if (opts.strategy == ColoringStrategy::alt1d) {
    out.chi = color_1d(pts);
    // Kernel-to-rectangle transference: for a Gaussian kernel the kernel
    // discrepancy is at most the interval discrepancy of the alternating
    // coloring, which is exactly 1.
    out.level.discrepancy = k.family == KernelFamily::gaussian
                                ? 1.0
                                : kernel_discrepancy(pts, out.chi, k, centers).value;
  } else {
    out.chi = color_heuristic(pts, opts.restarts, level_seed);
    out.level.discrepancy = kernel_discrepancy(pts, out.chi, k, centers).value;
  }
  const std::size_t n = pts.size();
  std::size_t plus = 0;
  for (int s : out.chi.signs) plus += s > 0;
  out.level.input_size = n;
  out.level.retained_sign = 2 * plus >= n ? +1 : -1;
  out.level.retained_size = out.level.retained_sign > 0 ? plus : n - plus;
  return out;
}

double level_bound(const HalvingLevel& level) {
  const double imbalance =
      static_cast<double>(2 * level.retained_size) - static_cast<double>(level.input_size);
  return (level.discrepancy + imbalance) / static_cast<double>(level.input_size);
}

}  // namespace

std::pair<PointSet, HalvingLevel> halve(const PointSet& p, const Kernel& k,
                                        const HalvingOptions& opts) {
  if (p.size() < 2) throw std::invalid_argument("halving requires at least two points");
  const PointSet centers = default_centers(p, k, opts.grid_resolution);
  LevelOutcome out = run_level(p, k, opts, centers, opts.seed);

  std::vector<double> kept;
  kept.reserve(out.level.retained_size * p.dim());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (out.chi.signs[i] == out.level.retained_sign) {
      const auto pt = p.point(i);
      kept.insert(kept.end(), pt.begin(), pt.end());
    }
  return {PointSet(std::move(kept), p.dim()), out.level};
}

std::pair<Coreset, HalvingReport> halving_coreset(const PointSet& p, const Kernel& k,
                                                  double epsilon, const HalvingOptions& opts) {
  if (k.family != KernelFamily::gaussian)
    throw std::invalid_argument("halving coresets are built for Gaussian kernels only");
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw std::invalid_argument("epsilon must lie in (0, 1]");

  // Pre-scale by 1/sigma so the unit-bandwidth transference applies.
  const double inv_sigma = 1.0 / k.bandwidth;
  std::vector<double> scaled(p.coords().begin(), p.coords().end());
  for (double& v : scaled) v *= inv_sigma;
  const PointSet scaled_pts(std::move(scaled), p.dim());
  const Kernel unit(KernelFamily::gaussian, 1.0);
  const PointSet centers = default_centers(scaled_pts, unit, opts.grid_resolution);

  std::vector<std::size_t> survivors(p.size());
  std::iota(survivors.begin(), survivors.end(), std::size_t{0});

  HalvingReport report;
  double accumulated = 0.0;
  std::size_t level_index = 0;
  while (survivors.size() >= 2) {
    std::vector<double> coords;
    coords.reserve(survivors.size() * p.dim());
    for (std::size_t i : survivors) {
      const auto pt = scaled_pts.point(i);
      coords.insert(coords.end(), pt.begin(), pt.end());
    }
    const PointSet level_pts(std::move(coords), p.dim());
    const std::uint64_t level_seed = splitmix64(opts.seed ^ (level_index + 1));
    const LevelOutcome out = run_level(level_pts, unit, opts, centers, level_seed);
    const double bound = level_bound(out.level);
    if (accumulated + bound > epsilon) break;

    std::vector<std::size_t> next;
    next.reserve(out.level.retained_size);
    for (std::size_t j = 0; j < survivors.size(); ++j)
      if (out.chi.signs[j] == out.level.retained_sign) next.push_back(survivors[j]);
    survivors = std::move(next);
    accumulated += bound;
    report.levels.push_back(out.level);
    ++level_index;
  }
  report.total_bound = accumulated;
  return {Coreset(p, std::move(survivors)), std::move(report)};
}

}  // namespace kdecoreset
