#include "kdecoreset/point_set.hpp"

#include <cmath>
#include <stdexcept>

namespace kdecoreset {

PointSet::PointSet(std::vector<double> coords, std::size_t dim)
    : d_(dim), coords_(std::move(coords)) {
  if (d_ == 0) throw std::invalid_argument("point dimension must be >= 1");
  if (coords_.empty() || coords_.size() % d_ != 0)
    throw std::invalid_argument("coordinate buffer must hold n >= 1 points of dimension d");
  for (double v : coords_)
    if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
  n_ = coords_.size() / d_;
  box_min_.assign(coords_.begin(), coords_.begin() + d_);
  box_max_ = box_min_;
  for (std::size_t i = 1; i < n_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) {
      const double v = coords_[i * d_ + j];
      if (v < box_min_[j]) box_min_[j] = v;
      if (v > box_max_[j]) box_max_[j] = v;
    }
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("point set must be non-empty");
  const std::size_t d = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw std::invalid_argument("all points must share dimension");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return PointSet(std::move(flat), d);
}

double PointSet::diameter() const {
  double cached = diameter_cache_.load(std::memory_order_acquire);
  if (cached >= 0.0) return cached;
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double dist = euclidean_distance(point(i), point(j));
      if (dist > best) best = dist;
    }
  diameter_cache_.store(best, std::memory_order_release);
  return best;
}

PointSet::PointSet(const PointSet& o)
    : n_(o.n_), d_(o.d_), coords_(o.coords_), box_min_(o.box_min_), box_max_(o.box_max_) {
  diameter_cache_.store(o.diameter_cache_.load());
}

PointSet& PointSet::operator=(const PointSet& o) {
  if (this != &o) {
    n_ = o.n_;
    d_ = o.d_;
    coords_ = o.coords_;
    box_min_ = o.box_min_;
    box_max_ = o.box_max_;
    diameter_cache_.store(o.diameter_cache_.load());
  }
  return *this;
}

PointSet::PointSet(PointSet&& o) noexcept
    : n_(o.n_), d_(o.d_), coords_(std::move(o.coords_)),
      box_min_(std::move(o.box_min_)), box_max_(std::move(o.box_max_)) {
  diameter_cache_.store(o.diameter_cache_.load());
}

PointSet& PointSet::operator=(PointSet&& o) noexcept {
  if (this != &o) {
    n_ = o.n_;
    d_ = o.d_;
    coords_ = std::move(o.coords_);
    box_min_ = std::move(o.box_min_);
    box_max_ = std::move(o.box_max_);
    diameter_cache_.store(o.diameter_cache_.load());
  }
  return *this;
}

}  // namespace kdecoreset
