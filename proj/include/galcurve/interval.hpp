#pragma once

namespace galcurve {

/// Closed parameter interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double s) const { return s >= lo && s <= hi; }
  bool degenerate() const { return !(lo < hi); }
  double width() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace galcurve
