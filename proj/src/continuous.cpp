#include "conlat/continuous.hpp"

#include <cmath>

#include "conlat/order.hpp"

namespace conlat {

namespace {

bool is_region_kind(const Property& p) {
  return std::holds_alternative<Interval>(p) || std::holds_alternative<IntervalSet>(p) ||
         std::holds_alternative<NegatedRegion>(p);
}

std::vector<Interval> closed_or_throw(const Region& r) {
  auto closed = r.closed_intervals();
  if (!closed || closed->empty() || !r.bounded()) {
    throw Error(ErrorCode::Malformed, "region is not a non-empty closed bounded set");
  }
  return std::move(*closed);
}

}  // namespace

DisjunctiveProperty::DisjunctiveProperty(std::vector<Interval> members) {
  if (members.empty()) throw Error(ErrorCode::Malformed, "disjunction must not be empty");
  for (const auto& m : members) {
    if (!std::isfinite(m.lo) || !std::isfinite(m.hi) || m.lo > m.hi) {
      throw Error(ErrorCode::Malformed, "disjunction members must be finite closed intervals");
    }
  }
  members_ = merge_intervals(std::move(members));
}

DisjunctiveProperty DisjunctiveProperty::from(const Property& p) {
  if (const auto* iv = std::get_if<Interval>(&p)) return DisjunctiveProperty({*iv});
  if (const auto* set = std::get_if<IntervalSet>(&p)) return DisjunctiveProperty(set->members);
  throw Error(ErrorCode::DomainMismatch,
              "'" + std::string(property_kind(p)) + "' is not a disjunction of intervals");
}

NegatedProperty NegatedProperty::from(const NegatedRegion& p) {
  return NegatedProperty(DisjunctiveProperty(p.excluded));
}

DisjunctiveProperty disj_meet(const DisjunctiveProperty& p, const DisjunctiveProperty& q) {
  return DisjunctiveProperty(closed_or_throw(unite(p.region(), q.region())));
}

std::optional<DisjunctiveProperty> disj_join(const DisjunctiveProperty& p,
                                             const DisjunctiveProperty& q) {
  const Region common = intersect(p.region(), q.region());
  if (common.empty()) return std::nullopt;
  return DisjunctiveProperty(closed_or_throw(common));
}

bool disj_leq(const DisjunctiveProperty& p, const DisjunctiveProperty& q) {
  return q.region().subset_of(p.region());
}

NegatedProperty negate(const DisjunctiveProperty& p) { return NegatedProperty(p); }

DisjunctiveProperty negate(const NegatedProperty& p) { return p.excluded(); }

Property negate(const Property& p) {
  if (const auto* neg = std::get_if<NegatedRegion>(&p)) {
    return negate(NegatedProperty::from(*neg)).to_property();
  }
  return negate(DisjunctiveProperty::from(p)).to_property();
}

bool denotes_subset(const Property& p, const Property& q) {
  return region_of(p).subset_of(region_of(q));
}

Concept guard_base_meet(MeetContext context, const Concept& c, const Concept& d) {
  if (context == MeetContext::Analysis) return analysis_meet(c, d);
  for (const Concept* operand : {&c, &d}) {
    for (const auto& [feature, p] : operand->entries()) {
      if (!is_base(p)) {
        throw Error(ErrorCode::PolicyError, "discovery restricted to convex base space");
      }
    }
  }
  return generalise(c, d);
}

Concept analysis_meet(const Concept& c, const Concept& d) {
  require_same_schema(c.schema(), d.schema());
  Concept::Entries out;
  for (const auto& [feature, p] : c.entries()) {
    const Property* q = d.find(feature);
    if (q == nullptr) continue;
    const ValueDomain& domain = c.schema().domain(feature);
    if (!is_region_kind(p) || !is_region_kind(*q)) {
      if (auto m = prop_meet(domain, p, *q)) out.emplace(feature, std::move(*m));
      continue;
    }
    const Region joined = unite(region_of(p), region_of(*q));
    if (auto closed = joined.closed_intervals(); closed && joined.bounded()) {
      out.emplace(feature, IntervalSet{std::move(*closed)});
      continue;
    }
    const Region excluded = complement(joined);
    if (excluded.empty()) continue;  // covers the whole line: unspecified
    auto closed = excluded.closed_intervals();
    if (!closed || !excluded.bounded()) {
      throw Error(ErrorCode::PolicyError,
                  "no greatest lower bound in the negated space for feature '" +
                      c.schema().feature(feature).name + "'");
    }
    out.emplace(feature, NegatedRegion{std::move(*closed)});
  }
  return Concept(c.schema_ptr(), out);
}

}  // namespace conlat
