#pragma once

#include <optional>
#include <span>
#include <vector>

#include "conlat/schema.hpp"

namespace conlat {

/// One connected piece of a subset of the real line. Infinite endpoints are
/// always open.
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool operator==(const Segment&) const = default;
  bool empty() const noexcept { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
};

/// A finite union of segments in canonical form: sorted, non-empty,
/// pairwise disjoint and never touching in a way that would merge.
///
/// All real-valued properties denote a Region; the subset order on regions
/// is the order used for the disjunctive and negated interval spaces.
class Region {
 public:
  Region() = default;

  static Region real_line();
  static Region closed(double lo, double hi);
  static Region from_closed(std::span<const Interval> intervals);
  static Region from_segments(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  bool empty() const noexcept { return segments_.empty(); }
  bool bounded() const noexcept;

  /// The closed bounded intervals making up this region, or nothing when
  /// some piece is open or unbounded.
  std::optional<std::vector<Interval>> closed_intervals() const;

  bool subset_of(const Region& other) const;

  bool operator==(const Region&) const = default;

  friend Region unite(const Region& a, const Region& b);
  friend Region intersect(const Region& a, const Region& b);
  friend Region complement(const Region& a);
  friend Region subtract(const Region& a, const Region& b);

 private:
  std::vector<Segment> segments_;
};

Region unite(const Region& a, const Region& b);
Region intersect(const Region& a, const Region& b);
Region complement(const Region& a);
Region subtract(const Region& a, const Region& b);

/// Point set denoted by a real-valued property (Point, Interval, PointSet,
/// IntervalSet, NegatedRegion). Throws DomainMismatch for symbolic kinds.
Region region_of(const Property& p);

}  // namespace conlat
