#pragma once

#include <vector>

namespace phigrad {

/// A finite union of intervals (and isolated points) inside (0, +inf).
/// Endpoint 0 is always open; +inf is represented by an infinite hi.
class IntervalSet {
 public:
  struct Interval {
    double lo, hi;
    bool lo_closed, hi_closed;
  };

  static IntervalSet empty_set();
  static IntervalSet all_positive();                      // (0, inf)
  static IntervalSet point(double t);                     // {t}
  static IntervalSet interval(double lo, double hi, bool lo_closed, bool hi_closed);

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet complement_in_positive() const;             // (0, inf) minus this

  bool contains(double t) const;
  bool empty() const { return parts_.empty(); }
  bool is_all_positive() const;

  const std::vector<Interval>& parts() const { return parts_; }

 private:
  void add(Interval iv);
  void normalize();
  std::vector<Interval> parts_;  // sorted, disjoint, non-adjacent
};

}  // namespace phigrad
