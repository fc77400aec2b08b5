#pragma once

namespace kdecoreset {

// Kahan compensated accumulator.  Keeps double sums reproducible to ~1e-15
// relative error independent of summation length.
class KahanSum {
 public:
  void add(double v) {
    const double y = v - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace kdecoreset
