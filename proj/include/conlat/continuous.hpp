#pragma once

#include <optional>
#include <vector>

#include "conlat/concept.hpp"
#include "conlat/region.hpp"
#include "conlat/schema.hpp"

namespace conlat {

/// A disjunction of closed intervals ("green or blue or red"). No length cap
/// applies to the members. Always canonical and non-empty.
class DisjunctiveProperty {
 public:
  explicit DisjunctiveProperty(std::vector<Interval> members);
  /// Accepts Interval or IntervalSet.
  static DisjunctiveProperty from(const Property& p);

  const std::vector<Interval>& members() const noexcept { return members_; }
  Region region() const { return Region::from_closed(members_); }
  IntervalSet to_property() const { return IntervalSet{members_}; }

  bool operator==(const DisjunctiveProperty&) const = default;

 private:
  std::vector<Interval> members_;
};

/// The real line minus a non-empty disjunction of closed intervals.
class NegatedProperty {
 public:
  explicit NegatedProperty(DisjunctiveProperty excluded) : excluded_(std::move(excluded)) {}
  static NegatedProperty from(const NegatedRegion& p);

  const DisjunctiveProperty& excluded() const noexcept { return excluded_; }
  Region region() const { return complement(excluded_.region()); }
  NegatedRegion to_property() const { return NegatedRegion{excluded_.members()}; }

  bool operator==(const NegatedProperty&) const = default;

 private:
  DisjunctiveProperty excluded_;
};

/// Meet in the disjunctive space: union, no cap.
DisjunctiveProperty disj_meet(const DisjunctiveProperty& p, const DisjunctiveProperty& q);

/// Join in the disjunctive space: intersection, nullopt when empty.
std::optional<DisjunctiveProperty> disj_join(const DisjunctiveProperty& p,
                                             const DisjunctiveProperty& q);

/// Superset order on denoted point sets (p is less informative than q).
bool disj_leq(const DisjunctiveProperty& p, const DisjunctiveProperty& q);

NegatedProperty negate(const DisjunctiveProperty& p);
DisjunctiveProperty negate(const NegatedProperty& p);

/// Complement of an Interval, IntervalSet or NegatedRegion value.
Property negate(const Property& p);

/// Subset relation between the point sets two real-valued properties denote.
bool denotes_subset(const Property& p, const Property& q);

enum class MeetContext { Discovery, Analysis };

/// Meet of two concepts under a usage policy.
///
/// Discovery runs in the convex base space only: any disjunctive or negated
/// entry in either argument raises PolicyError, otherwise the result is
/// generalise(c, d). Analysis delegates to analysis_meet().
Concept guard_base_meet(MeetContext context, const Concept& c, const Concept& d);

/// Meet over the combined base/disjunctive/negated space. Real-line entries
/// meet by union of their point sets (so two base intervals meet to their
/// disjunction, uncapped); a union covering the whole line drops the
/// feature. A union that is neither a closed bounded set nor the complement
/// of one has no greatest lower bound and raises PolicyError. Other domains
/// behave as in generalise().
Concept analysis_meet(const Concept& c, const Concept& d);

}  // namespace conlat
