#include "phigrad/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phigrad/errors.hpp"

namespace phigrad {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

IntervalSet IntervalSet::empty_set() { return IntervalSet{}; }

IntervalSet IntervalSet::all_positive() {
  return interval(0.0, kInf, false, false);
}

IntervalSet IntervalSet::point(double t) {
  if (!(t > 0.0)) throw precondition_error("IntervalSet::point: t must be > 0");
  return interval(t, t, true, true);
}

IntervalSet IntervalSet::interval(double lo, double hi, bool lo_closed,
                                  bool hi_closed) {
  if (std::isnan(lo) || std::isnan(hi) || lo < 0.0 || hi < lo)
    throw precondition_error("IntervalSet::interval: bad endpoints");
  if (lo == hi && !(lo_closed && hi_closed)) return empty_set();
  IntervalSet s;
  s.parts_.push_back({lo, hi, lo_closed && lo > 0.0, hi_closed && std::isfinite(hi)});
  return s;
}

bool IntervalSet::is_all_positive() const {
  return parts_.size() == 1 && parts_[0].lo == 0.0 && !parts_[0].lo_closed &&
         parts_[0].hi == kInf;
}

void IntervalSet::add(Interval iv) {
  parts_.push_back(iv);
  normalize();
}

void IntervalSet::normalize() {
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> merged;
  for (const Interval& iv : parts_) {
    if (!merged.empty()) {
      Interval& last = merged.back();
      const bool overlap =
          iv.lo < last.hi ||
          (iv.lo == last.hi && (iv.lo_closed || last.hi_closed));
      if (overlap) {
        if (iv.hi > last.hi) {
          last.hi = iv.hi;
          last.hi_closed = iv.hi_closed;
        } else if (iv.hi == last.hi) {
          last.hi_closed = last.hi_closed || iv.hi_closed;
        }
        continue;
      }
    }
    merged.push_back(iv);
  }
  parts_ = std::move(merged);
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  IntervalSet s = *this;
  for (const Interval& iv : other.parts_) s.parts_.push_back(iv);
  s.normalize();
  return s;
}

IntervalSet IntervalSet::complement_in_positive() const {
  IntervalSet out;
  double cursor = 0.0;
  bool cursor_closed = false;  // 0 itself excluded
  for (const Interval& iv : parts_) {
    if (iv.lo > cursor || (iv.lo == cursor && !iv.lo_closed && cursor > 0.0 && cursor_closed)) {
      out.parts_.push_back({cursor, iv.lo, cursor_closed, !iv.lo_closed});
    } else if (iv.lo == cursor && !iv.lo_closed && cursor > 0.0 && !cursor_closed) {
      // the single point `cursor` lies in neither set half; it belongs to
      // the complement
      out.parts_.push_back({cursor, cursor, true, true});
    }
    cursor = iv.hi;
    cursor_closed = !iv.hi_closed;
    if (cursor == kInf) return out;
  }
  out.parts_.push_back({cursor, kInf, cursor_closed && cursor > 0.0, false});
  out.normalize();
  return out;
}

bool IntervalSet::contains(double t) const {
  for (const Interval& iv : parts_) {
    if (t < iv.lo || (t == iv.lo && !iv.lo_closed)) continue;
    if (t > iv.hi || (t == iv.hi && !iv.hi_closed)) continue;
    return true;
  }
  return false;
}

}  // namespace phigrad
