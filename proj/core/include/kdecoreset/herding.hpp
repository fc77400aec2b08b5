#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kdecoreset/coreset.hpp"
#include "kdecoreset/kde.hpp"

namespace kdecoreset {

struct HerdingOptions {
  // Start from index 0 instead of the densest point, for reproducing runs
  // that used the older convention.
  bool start_at_index_zero = false;
  // Above this size the per-point mean similarities m_i are estimated from
  // a seeded subsample instead of the exact O(n^2) pass.  Estimation voids
  // the gap certificate; traces still record the estimated gap.
  std::size_t exact_mean_threshold = 20000;
  std::size_t mean_sample_size = 2048;
  std::uint64_t mean_sample_seed = 0x9e3779b97f4a7c15ULL;
};

struct TraceEntry {
  std::size_t t;             // iteration count after this selection
  std::size_t chosen_index;  // index into the parent set
  double gap_sq;             // exact ||x_t - mu||^2 in the RKHS
};

struct HerdingTrace {
  std::vector<TraceEntry> entries;
};

struct HerdingStop {
  std::optional<std::size_t> steps;  // run exactly T iterations
  std::optional<double> epsilon;     // run ceil(2/eps^2) iterations

  static HerdingStop by_steps(std::size_t t);
  static HerdingStop by_epsilon(double eps);
};

struct HerdingResult {
  Coreset coreset;        // distinct selected indices, multiplicity weights
  HerdingTrace trace;
  std::size_t steps;          // T
  std::size_t distinct_size;  // number of distinct indices (<= T)
};

// Greedy mean approximation state.  x_t is the running average of the
// selected lifts, tracked implicitly through
//   s_i  = sum over selections j of K(p_j, p_i)
//   m_i  = kde_P(p_i)
// plus running Gram and mean sums, so step and gap queries are O(n).
class HerdingState {
 public:
  HerdingState(const PointSet& p, const Kernel& k, const HerdingOptions& opts = {});

  // Selection count so far.
  std::size_t iterations() const { return selected_.size(); }
  const std::vector<std::size_t>& selected() const { return selected_; }

  // First selection: the densest point (argmax m_i, lowest index on ties),
  // or index 0 under start_at_index_zero.  Valid only at t = 0.
  std::size_t select_first();

  // One argmin step of the mean-gap linearization: picks
  // argmin_i (s_i / t - m_i), lowest index on ties, and folds the pick into
  // the state.  Valid for t >= 1.
  std::size_t step();

  // Exact ||x_t - mu||^2 via kernel expansions, clamped at 0 for float
  // residue above -1e-9.  Valid for t >= 1.
  double gap_squared() const;

  double mean_similarity(std::size_t i) const { return m_[i]; }
  double self_similarity() const { return kappa_pp_; }
  bool certified() const { return exact_means_; }

 private:
  const PointSet* p_;
  Kernel kernel_;
  std::vector<double> s_;   // running selected-kernel sums per point
  std::vector<double> m_;   // kde_P(p_i), exact or subsampled
  std::vector<double> s_comp_;  // Kahan compensation for s_
  std::vector<std::size_t> selected_;
  double kappa_pp_ = 0.0;
  bool exact_means_ = true;
  bool start_at_index_zero_ = false;
  // Gram-sum over selected pairs and mean-sum over selections, compensated.
  double gram_sum_ = 0.0, gram_comp_ = 0.0;
  double mean_sum_ = 0.0, mean_comp_ = 0.0;

  void absorb(std::size_t pick);
};

// First selection rule as a standalone query (does not advance any state).
std::size_t first_point(const PointSet& p, const Kernel& k, const HerdingOptions& opts = {});

// Runs herding to the stop rule and packages the result.  The coreset lists
// distinct indices with weights proportional to selection multiplicity;
// uniform multiplicity yields an unweighted coreset.  The trace certifies
// gap_sq(t) <= 2/t at every step.
HerdingResult herd(const PointSet& p, const Kernel& k, const HerdingStop& stop,
                   const HerdingOptions& opts = {});

}  // namespace kdecoreset
