#include "kdecoreset/herding.hpp"

#include <cmath>
#include <stdexcept>

#include "kdecoreset/accumulate.hpp"
#include "kdecoreset/parallel.hpp"
#include "kdecoreset/rng.hpp"

namespace kdecoreset {

HerdingStop HerdingStop::by_steps(std::size_t t) {
  if (t < 1) throw std::invalid_argument("herding needs at least one step");
  HerdingStop s;
  s.steps = t;
  return s;
}

HerdingStop HerdingStop::by_epsilon(double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("herding epsilon must lie in (0, 1]");
  HerdingStop s;
  s.epsilon = eps;
  s.steps = static_cast<std::size_t>(std::ceil(2.0 / (eps * eps)));
  return s;
}

HerdingState::HerdingState(const PointSet& p, const Kernel& k, const HerdingOptions& opts)
    : p_(&p), kernel_(k), start_at_index_zero_(opts.start_at_index_zero) {
  const std::size_t n = p.size();
  s_.assign(n, 0.0);
  s_comp_.assign(n, 0.0);
  m_.assign(n, 0.0);

  if (n <= opts.exact_mean_threshold) {
    // m_i = kde_P(p_i), one exact O(n^2) pass.
    chunked_reduce<int>(
        n, 0,
        [&](std::size_t b, std::size_t e) {
          for (std::size_t i = b; i < e; ++i) {
            KahanSum row;
            const auto pi = p.point(i);
            for (std::size_t j = 0; j < n; ++j) row.add(eval(kernel_, pi, p.point(j)));
            m_[i] = row.value() / static_cast<double>(n);
          }
          return 0;
        },
        [](int, int) { return 0; },
        std::max<std::size_t>(1, kDefaultChunk / n));
  } else {
    exact_means_ = false;
    std::mt19937_64 rng(opts.mean_sample_seed);
    std::vector<std::size_t> sample(std::min(opts.mean_sample_size, n));
    for (auto& s : sample) s = static_cast<std::size_t>(next_below(rng, n));
    chunked_reduce<int>(
        n, 0,
        [&](std::size_t b, std::size_t e) {
          for (std::size_t i = b; i < e; ++i) {
            KahanSum row;
            const auto pi = p.point(i);
            for (std::size_t j : sample) row.add(eval(kernel_, pi, p.point(j)));
            m_[i] = row.value() / static_cast<double>(sample.size());
          }
          return 0;
        },
        [](int, int) { return 0; },
        std::max<std::size_t>(1, kDefaultChunk / sample.size()));
  }

  // kappa(P,P) = mean of m_i.
  KahanSum total;
  for (double mi : m_) total.add(mi);
  kappa_pp_ = total.value() / static_cast<double>(n);
}

std::size_t first_point(const PointSet& p, const Kernel& k, const HerdingOptions& opts) {
  if (opts.start_at_index_zero) return 0;
  HerdingState state(p, k, opts);
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (state.mean_similarity(i) > state.mean_similarity(best)) best = i;
  return best;
}

std::size_t HerdingState::select_first() {
  if (!selected_.empty())
    throw std::logic_error("select_first is only valid before any selection");
  std::size_t best = 0;
  if (!start_at_index_zero_)
    for (std::size_t i = 1; i < m_.size(); ++i)
      if (m_[i] > m_[best]) best = i;
  absorb(best);
  return best;
}

std::size_t HerdingState::step() {
  const std::size_t t = selected_.size();
  if (t < 1) throw std::logic_error("step requires a first selection");
  const double inv_t = 1.0 / static_cast<double>(t);

  struct Best {
    double value;
    std::size_t index;
  };
  auto scan = [&](std::size_t b, std::size_t e) {
    Best best{s_[b] * inv_t - m_[b], b};
    for (std::size_t i = b + 1; i < e; ++i) {
      const double score = s_[i] * inv_t - m_[i];
      if (score < best.value) best = Best{score, i};
    }
    return best;
  };
  auto pick = [](Best a, Best b) {
    if (b.value < a.value) return b;
    if (b.value == a.value && b.index < a.index) return b;
    return a;
  };
  const Best best = chunked_reduce<Best>(
      m_.size(), Best{s_[0] * inv_t - m_[0], 0}, scan, pick);
  absorb(best.index);
  return best.index;
}

void HerdingState::absorb(std::size_t pick) {
  // Gram sum gains the new row twice plus the diagonal K(p,p) = 1;
  // s_ already holds the selected-row sums, so this is O(1) bookkeeping
  // before the O(n) s_ refresh.
  {
    const double y = 2.0 * s_[pick] + 1.0 - gram_comp_;
    const double t = gram_sum_ + y;
    gram_comp_ = (t - gram_sum_) - y;
    gram_sum_ = t;
  }
  {
    const double y = m_[pick] - mean_comp_;
    const double t = mean_sum_ + y;
    mean_comp_ = (t - mean_sum_) - y;
    mean_sum_ = t;
  }
  selected_.push_back(pick);

  const auto pp = p_->point(pick);
  chunked_reduce<int>(
      m_.size(), 0,
      [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
          const double y = eval(kernel_, pp, p_->point(i)) - s_comp_[i];
          const double t = s_[i] + y;
          s_comp_[i] = (t - s_[i]) - y;
          s_[i] = t;
        }
        return 0;
      },
      [](int, int) { return 0; });
}

double HerdingState::gap_squared() const {
  const std::size_t t = selected_.size();
  if (t < 1) throw std::logic_error("gap_squared requires at least one selection");
  const double td = static_cast<double>(t);
  const double gap = gram_sum_ / (td * td) - 2.0 * mean_sum_ / td + kappa_pp_;
  if (gap < 0.0) {
    if (gap < -1e-9)
      throw std::runtime_error("negative squared gap below -1e-9: internal inconsistency");
    return 0.0;
  }
  return gap;
}

HerdingResult herd(const PointSet& p, const Kernel& k, const HerdingStop& stop,
                   const HerdingOptions& opts) {
  if (!stop.steps) throw std::invalid_argument("herding stop rule must fix a step count");
  const std::size_t t_max = *stop.steps;

  HerdingState state(p, k, opts);
  HerdingTrace trace;
  trace.entries.reserve(t_max);

  std::size_t pick = state.select_first();
  trace.entries.push_back({1, pick, state.gap_squared()});

  for (std::size_t t = 2; t <= t_max; ++t) {
    pick = state.step();
    trace.entries.push_back({t, pick, state.gap_squared()});
  }

  // Multiplicity -> weights over distinct indices.
  std::vector<std::size_t> counts(p.size(), 0);
  for (std::size_t i : state.selected()) ++counts[i];
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) distinct.push_back(i);

  const std::size_t first_count = counts[distinct.front()];
  bool uniform = true;
  for (std::size_t i : distinct)
    if (counts[i] != first_count) {
      uniform = false;
      break;
    }

  std::optional<std::vector<double>> weights;
  if (!uniform) {
    std::vector<double> w;
    w.reserve(distinct.size());
    for (std::size_t i : distinct)
      w.push_back(static_cast<double>(counts[i]) / static_cast<double>(t_max));
    weights = std::move(w);
  }

  HerdingResult result{Coreset(p, std::move(distinct), std::move(weights)),
                       std::move(trace), t_max, 0};
  result.distinct_size = result.coreset.size();
  return result;
}

}  // namespace kdecoreset
