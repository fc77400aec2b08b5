#pragma once

#include <span>
#include <vector>

#include "kdecoreset/coreset.hpp"
#include "kdecoreset/kernel.hpp"
#include "kdecoreset/point_set.hpp"

namespace kdecoreset {

// Non-owning view of a weighted point collection.  Weight conventions:
// empty indices = the whole set; empty weights = uniform 1/m.  Every kde /
// kappa / distance operation below works on this view, so point sets,
// coresets and externally weighted sets (grid snapping) share one code path.
struct WeightedRef {
  const PointSet* points = nullptr;
  std::span<const std::size_t> indices = {};
  std::span<const double> weights = {};

  WeightedRef(const PointSet& p) : points(&p) {}
  WeightedRef(const Coreset& c)
      : points(&c.parent()), indices(c.indices()), weights(c.weights()) {}
  WeightedRef(const PointSet& p, std::span<const double> w) : points(&p), weights(w) {}

  std::size_t size() const { return indices.empty() ? points->size() : indices.size(); }
  std::span<const double> point(std::size_t j) const {
    return points->point(indices.empty() ? j : indices[j]);
  }
  double weight(std::size_t j) const {
    return weights.empty() ? 1.0 / static_cast<double>(size()) : weights[j];
  }
};

// kde_P(x) = (1/|P|) sum_p K(x,p); in [0,1].  The weighted overloads compute
// sum w(q) K(x,q).
double kde(const PointSet& p, const Kernel& k, std::span<const double> x);
double kde(const Coreset& q, const Kernel& k, std::span<const double> x);
double kde(const WeightedRef& s, const Kernel& k, std::span<const double> x);

// kappa(P,Q) = sum_i sum_j w_i w_j K(p_i, q_j), the normalized set
// similarity.  Compensated summation with deterministic chunking.
double similarity(const WeightedRef& p, const WeightedRef& q, const Kernel& k);

// D_K(P,Q) = sqrt(kappa(P,P) + kappa(Q,Q) - 2 kappa(P,Q)), the RKHS distance
// between kernel means.  For characteristic kernels a radicand below -1e-9
// is an internal inconsistency and throws; tiny negative float residue is
// clamped to 0.  Non-characteristic families are advisory and clamp.
double kernel_distance(const WeightedRef& p, const WeightedRef& q, const Kernel& k);

struct ErrorReport {
  double sup_error_estimate = 0.0;       // max |kde_P - kde_Q| over candidates
  std::vector<double> witness_point;     // candidate attaining it
  double rkhs_gap = 0.0;                 // D_K(P, Q)
  std::size_t candidate_count = 0;
};

// Union of the points of P and a regular grid of `grid_resolution` points
// per axis spanning the bounding box of P expanded by 3 sigma on each side.
// Guarded to d <= 6; pass grid_resolution through point_only_candidates for
// higher dimensions.
PointSet sup_error_candidates(const PointSet& p, const Kernel& k, int grid_resolution);

// Just the points of P, for dimensions where a grid is infeasible.
PointSet point_only_candidates(const PointSet& p);

// Max |kde_P(x) - kde_Q(x)| over the candidate set (a certified lower bound
// on the true sup) together with the RKHS gap (an upper bound for
// characteristic kernels).  Deterministic max-reduction; ties go to the
// lexicographically smallest witness.
ErrorReport evaluate_error(const WeightedRef& p, const WeightedRef& q, const Kernel& k,
                           const PointSet& candidates);

}  // namespace kdecoreset
