#include "conlat/order.hpp"

#include <algorithm>
#include <iterator>

#include "conlat/region.hpp"

namespace conlat {

namespace {

bool is_region_kind(const Property& p) {
  return std::holds_alternative<Interval>(p) || std::holds_alternative<IntervalSet>(p) ||
         std::holds_alternative<NegatedRegion>(p);
}

[[noreturn]] void incomparable(const Property& p, const Property& q) {
  throw Error(ErrorCode::DomainMismatch, "cannot compare '" + std::string(property_kind(p)) +
                                             "' with '" + std::string(property_kind(q)) + "'");
}

template <class T>
std::vector<T> sorted_union(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <class T>
std::vector<T> sorted_intersection(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Turns a region back into a property of an interval dimension, if the
// region is one of the representable shapes.
std::optional<Property> region_property(const ValueDomain& domain, const Region& r) {
  if (r.empty()) return std::nullopt;
  if (auto closed = r.closed_intervals()) {
    return canonicalize(domain, IntervalSet{std::move(*closed)});
  }
  if (auto excluded = complement(r).closed_intervals(); excluded && !excluded->empty()) {
    return canonicalize(domain, NegatedRegion{std::move(*excluded)});
  }
  return std::nullopt;
}

void require_same_kind(const Property& p, const Property& q) {
  if (p.index() != q.index() && !(is_region_kind(p) && is_region_kind(q))) incomparable(p, q);
}

}  // namespace

bool prop_leq(const Property& p, const Property& q) {
  require_same_kind(p, q);
  if (const auto* a = std::get_if<Interval>(&p)) {
    if (const auto* b = std::get_if<Interval>(&q)) return a->lo <= b->lo && b->hi <= a->hi;
  }
  if (is_region_kind(p)) return region_of(q).subset_of(region_of(p));
  if (const auto* a = std::get_if<SymbolSet>(&p)) {
    const auto& b = std::get<SymbolSet>(q);
    return std::includes(a->values.begin(), a->values.end(), b.values.begin(), b.values.end());
  }
  if (const auto* a = std::get_if<PointSet>(&p)) {
    const auto& b = std::get<PointSet>(q);
    return std::includes(a->values.begin(), a->values.end(), b.values.begin(), b.values.end());
  }
  return p == q;
}

std::optional<Property> prop_meet(const ValueDomain& domain, const Property& p,
                                  const Property& q) {
  require_same_kind(p, q);
  if (!is_base(p) || !is_base(q)) {
    throw Error(ErrorCode::PolicyError,
                "discovery restricted to convex base space: meets of disjunctive or negated "
                "values need the analysis context");
  }
  if (const auto* a = std::get_if<Interval>(&p)) {
    const auto& b = std::get<Interval>(q);
    const Interval hull{std::min(a->lo, b.lo), std::max(a->hi, b.hi)};
    if (hull.width() > 2.0 * std::get<CappedInterval>(domain).epsilon) return std::nullopt;
    return hull;
  }
  if (const auto* a = std::get_if<SymbolSet>(&p)) {
    return SymbolSet{sorted_union(a->values, std::get<SymbolSet>(q).values)};
  }
  if (const auto* a = std::get_if<PointSet>(&p)) {
    PointSet merged{sorted_union(a->values, std::get<PointSet>(q).values)};
    if (merged.values.back() - merged.values.front() >
        2.0 * std::get<BoundedPointSet>(domain).epsilon) {
      return std::nullopt;
    }
    return merged;
  }
  if (p == q) return p;
  return std::nullopt;
}

std::optional<Property> prop_join(const ValueDomain& domain, const Property& p,
                                  const Property& q) {
  require_same_kind(p, q);
  if (const auto* a = std::get_if<Interval>(&p)) {
    if (const auto* b = std::get_if<Interval>(&q)) {
      const Interval meet{std::max(a->lo, b->lo), std::min(a->hi, b->hi)};
      if (meet.lo > meet.hi) return std::nullopt;
      return meet;
    }
  }
  if (is_region_kind(p)) return region_property(domain, intersect(region_of(p), region_of(q)));
  if (const auto* a = std::get_if<SymbolSet>(&p)) {
    SymbolSet common{sorted_intersection(a->values, std::get<SymbolSet>(q).values)};
    if (common.values.empty()) return std::nullopt;
    return common;
  }
  if (const auto* a = std::get_if<PointSet>(&p)) {
    PointSet common{sorted_intersection(a->values, std::get<PointSet>(q).values)};
    if (common.values.empty()) return std::nullopt;
    return common;
  }
  if (p == q) return p;
  return std::nullopt;
}

bool subsumes(const Concept& c, const Concept& d) {
  require_same_schema(c.schema(), d.schema());
  for (const auto& [feature, p] : c.entries()) {
    const Property* q = d.find(feature);
    if (q == nullptr || !prop_leq(p, *q)) return false;
  }
  return true;
}

Concept generalise(const Concept& c, const Concept& d) {
  require_same_schema(c.schema(), d.schema());
  Concept::Entries out;
  for (const auto& [feature, p] : c.entries()) {
    const Property* q = d.find(feature);
    if (q == nullptr) continue;
    if (auto m = prop_meet(c.schema().domain(feature), p, *q)) out.emplace(feature, std::move(*m));
  }
  return Concept(c.schema_ptr(), out);
}

MeetJoinResult unify(const Concept& c, const Concept& d) {
  require_same_schema(c.schema(), d.schema());
  Concept::Entries out = c.entries();
  for (const auto& [feature, q] : d.entries()) {
    auto it = out.find(feature);
    if (it == out.end()) {
      out.emplace(feature, q);
      continue;
    }
    auto j = prop_join(c.schema().domain(feature), it->second, q);
    if (!j) return std::nullopt;
    it->second = std::move(*j);
  }
  return Concept(c.schema_ptr(), out);
}

Concept concept_diff(const Concept& c, const Concept& d) {
  const Concept m = generalise(c, d);
  Concept::Entries out;
  for (const auto& [feature, p] : c.entries()) {
    const Property* kept = m.find(feature);
    if (kept == nullptr || !(*kept == p)) out.emplace(feature, p);
  }
  return Concept(c.schema_ptr(), out);
}

Concept to_concept(const Instance& instance) {
  const FeatureSchema& schema = *instance.schema_ptr();
  Concept::Entries out;
  for (FeatureId f = 0; f < schema.size(); ++f) {
    const double x = instance[f];
    const ValueDomain& domain = schema.domain(f);
    if (std::holds_alternative<RealPoint>(domain)) {
      out.emplace(f, Point{x});
    } else if (std::holds_alternative<CappedInterval>(domain)) {
      out.emplace(f, Interval{x, x});
    } else if (std::holds_alternative<BoundedPointSet>(domain)) {
      out.emplace(f, PointSet{{x}});
    } else if (const auto* part = std::get_if<Partition>(&domain)) {
      out.emplace(f, Bucket{part->bucket_of(x)});
    } else {
      throw Error(ErrorCode::SymbolDomainInInstance,
                  "feature '" + schema.feature(f).name + "' is symbolic; instances are real-valued");
    }
  }
  return Concept(instance.schema_ptr(), out);
}

std::vector<std::size_t> extension_indices(const Concept& c, std::span<const Instance> pool) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    require_same_schema(c.schema(), *pool[i].schema_ptr());
    if (subsumes(c, to_concept(pool[i]))) out.push_back(i);
  }
  return out;
}

std::vector<Instance> extension(const Concept& c, std::span<const Instance> pool) {
  std::vector<Instance> out;
  for (std::size_t i : extension_indices(c, pool)) out.push_back(pool[i]);
  return out;
}

}  // namespace conlat
