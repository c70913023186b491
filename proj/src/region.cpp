#include "conlat/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conlat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool starts_before(const Segment& a, const Segment& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.lo_closed && !b.lo_closed;
}

// `a` ends no later than `b` when both are read as sets.
bool ends_no_later(const Segment& a, const Segment& b) {
  if (a.hi != b.hi) return a.hi < b.hi;
  return !a.hi_closed || b.hi_closed;
}

// Adjacent segments merge when they overlap or share an endpoint that one
// of them contains.
bool joins(const Segment& left, const Segment& right) {
  if (left.hi > right.lo) return true;
  return left.hi == right.lo && (left.hi_closed || right.lo_closed);
}

Segment normalized(Segment s) {
  if (std::isinf(s.lo)) s.lo_closed = false;
  if (std::isinf(s.hi)) s.hi_closed = false;
  return s;
}

}  // namespace

Region Region::real_line() {
  Region r;
  r.segments_.push_back(Segment{-kInf, kInf, false, false});
  return r;
}

Region Region::closed(double lo, double hi) {
  return from_segments({Segment{lo, hi, true, true}});
}

Region Region::from_closed(std::span<const Interval> intervals) {
  std::vector<Segment> segments;
  segments.reserve(intervals.size());
  for (const auto& iv : intervals) segments.push_back(Segment{iv.lo, iv.hi, true, true});
  return from_segments(std::move(segments));
}

Region Region::from_segments(std::vector<Segment> segments) {
  std::vector<Segment> kept;
  kept.reserve(segments.size());
  for (auto& s : segments) {
    s = normalized(s);
    if (!s.empty()) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), starts_before);
  Region r;
  for (const auto& s : kept) {
    if (!r.segments_.empty() && joins(r.segments_.back(), s)) {
      auto& last = r.segments_.back();
      if (ends_no_later(last, s)) {
        last.hi = s.hi;
        last.hi_closed = s.hi_closed;
      }
    } else {
      r.segments_.push_back(s);
    }
  }
  return r;
}

bool Region::bounded() const noexcept {
  return segments_.empty() ||
         (std::isfinite(segments_.front().lo) && std::isfinite(segments_.back().hi));
}

std::optional<std::vector<Interval>> Region::closed_intervals() const {
  std::vector<Interval> out;
  out.reserve(segments_.size());
  for (const auto& s : segments_) {
    if (!s.lo_closed || !s.hi_closed) return std::nullopt;
    out.push_back(Interval{s.lo, s.hi});
  }
  return out;
}

bool Region::subset_of(const Region& other) const {
  return subtract(*this, other).empty();
}

Region unite(const Region& a, const Region& b) {
  std::vector<Segment> all = a.segments_;
  all.insert(all.end(), b.segments_.begin(), b.segments_.end());
  return Region::from_segments(std::move(all));
}

Region intersect(const Region& a, const Region& b) {
  Region out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.segments_.size() && j < b.segments_.size()) {
    const Segment& s = a.segments_[i];
    const Segment& t = b.segments_[j];
    Segment piece;
    if (s.lo != t.lo) {
      const Segment& later = s.lo > t.lo ? s : t;
      piece.lo = later.lo;
      piece.lo_closed = later.lo_closed;
    } else {
      piece.lo = s.lo;
      piece.lo_closed = s.lo_closed && t.lo_closed;
    }
    if (s.hi != t.hi) {
      const Segment& earlier = s.hi < t.hi ? s : t;
      piece.hi = earlier.hi;
      piece.hi_closed = earlier.hi_closed;
    } else {
      piece.hi = s.hi;
      piece.hi_closed = s.hi_closed && t.hi_closed;
    }
    if (!piece.empty()) out.segments_.push_back(piece);
    if (ends_no_later(s, t)) {
      ++i;
    } else {
      ++j;
    }
  }
  // Pieces come out sorted and disjoint; run them through the merger anyway
  // so touching closed/open ends are fused.
  return Region::from_segments(std::move(out.segments_));
}

Region complement(const Region& a) {
  std::vector<Segment> gaps;
  double cursor = -kInf;
  bool cursor_closed = true;  // so the first gap starts open at -inf
  for (const auto& s : a.segments_) {
    gaps.push_back(Segment{cursor, s.lo, !cursor_closed, !s.lo_closed});
    cursor = s.hi;
    cursor_closed = s.hi_closed;
  }
  gaps.push_back(Segment{cursor, kInf, !cursor_closed, false});
  return Region::from_segments(std::move(gaps));
}

Region subtract(const Region& a, const Region& b) { return intersect(a, complement(b)); }

Region region_of(const Property& p) {
  if (const auto* x = std::get_if<Point>(&p)) return Region::closed(x->value, x->value);
  if (const auto* iv = std::get_if<Interval>(&p)) return Region::closed(iv->lo, iv->hi);
  if (const auto* ps = std::get_if<PointSet>(&p)) {
    std::vector<Segment> segments;
    for (double v : ps->values) segments.push_back(Segment{v, v, true, true});
    return Region::from_segments(std::move(segments));
  }
  if (const auto* set = std::get_if<IntervalSet>(&p)) return Region::from_closed(set->members);
  if (const auto* neg = std::get_if<NegatedRegion>(&p)) {
    return complement(Region::from_closed(neg->excluded));
  }
  throw Error(ErrorCode::DomainMismatch,
              "property kind '" + std::string(property_kind(p)) + "' has no real-line region");
}

}  // namespace conlat
