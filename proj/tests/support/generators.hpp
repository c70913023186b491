#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "conlat/concept.hpp"
#include "conlat/schema.hpp"

namespace testsupport {

using conlat::Concept;
using conlat::Property;
using conlat::SchemaPtr;
using Rng = std::mt19937_64;

enum class Family { Discrete, Disjunctive, Interval, Partition, PointSet, Mixed };

inline const std::vector<Family>& all_families() {
  static const std::vector<Family> f{Family::Discrete, Family::Disjunctive, Family::Interval,
                                     Family::Partition, Family::PointSet, Family::Mixed};
  return f;
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Discrete: return "discrete";
    case Family::Disjunctive: return "disjunctive";
    case Family::Interval: return "interval";
    case Family::Partition: return "partition";
    case Family::PointSet: return "pointset";
    case Family::Mixed: return "mixed";
  }
  return "?";
}

inline SchemaPtr family_schema(Family f) {
  using namespace conlat;
  switch (f) {
    case Family::Discrete:
      return make_schema({{"a", DiscreteSymbols{{"p", "q", "r"}}},
                          {"b", DiscreteSymbols{{"p", "q", "r"}}},
                          {"c", DiscreteSymbols{{"p", "q"}}}});
    case Family::Disjunctive:
      return make_schema({{"a", DiscreteDisjunctive{{"p", "q", "r", "s"}}},
                          {"b", DiscreteDisjunctive{{"p", "q", "r"}}}});
    case Family::Interval:
      return make_schema({{"x", CappedInterval{1.0}}, {"y", CappedInterval{0.5}}});
    case Family::Partition:
      return make_schema({{"u", Partition{{0.0, 1.0}}},
                          {"v", Partition{{-1.0, 0.0, 2.0}}},
                          {"w", Partition{{0.5}}}});
    case Family::PointSet:
      return make_schema({{"s", BoundedPointSet{0.5}}, {"t", BoundedPointSet{1.0}}});
    case Family::Mixed:
      return make_schema({{"pt", RealPoint{}},
                          {"iv", CappedInterval{1.0}},
                          {"bk", Partition{{0.0, 1.0}}},
                          {"ps", BoundedPointSet{0.5}}});
  }
  return nullptr;
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Values on a quarter grid over [-2, 3] so that coincidences are common.
inline double grid_real(Rng& rng) { return -2.0 + 0.25 * static_cast<double>(pick(rng, 21)); }

inline conlat::Interval grid_interval(Rng& rng, double max_width) {
  const double lo = grid_real(rng);
  const auto steps = static_cast<std::size_t>(max_width / 0.25);
  return {lo, lo + 0.25 * static_cast<double>(pick(rng, steps + 1))};
}

/// A random value for one domain. With `base_only` false, interval domains
/// also yield disjunctive and negated forms.
inline Property random_property(const conlat::ValueDomain& domain, Rng& rng, bool base_only) {
  using namespace conlat;
  if (const auto* d = std::get_if<DiscreteSymbols>(&domain)) {
    return Symbol{d->symbols[pick(rng, d->symbols.size())]};
  }
  if (const auto* d = std::get_if<DiscreteDisjunctive>(&domain)) {
    SymbolSet s;
    while (s.values.empty()) {
      for (const auto& sym : d->symbols) {
        if (coin(rng, 0.4)) s.values.push_back(sym);
      }
    }
    return s;
  }
  if (std::holds_alternative<RealPoint>(domain)) return Point{grid_real(rng)};
  if (const auto* d = std::get_if<CappedInterval>(&domain)) {
    if (!base_only && coin(rng, 0.3)) {
      std::vector<Interval> members;
      const std::size_t n = 1 + pick(rng, 3);
      for (std::size_t i = 0; i < n; ++i) members.push_back(grid_interval(rng, 1.5));
      if (coin(rng, 0.4)) return NegatedRegion{members};
      return IntervalSet{members};
    }
    return grid_interval(rng, 2.0 * d->epsilon);
  }
  if (const auto* d = std::get_if<BoundedPointSet>(&domain)) {
    const double lo = grid_real(rng);
    const auto steps = static_cast<std::size_t>(2.0 * d->epsilon / 0.25);
    PointSet s{{lo}};
    for (std::size_t k = 1; k <= steps; ++k) {
      if (coin(rng, 0.35)) s.values.push_back(lo + 0.25 * static_cast<double>(k));
    }
    return s;
  }
  const auto& part = std::get<Partition>(domain);
  return Bucket{pick(rng, part.bucket_count())};
}

inline Concept random_concept(const SchemaPtr& schema, Rng& rng, bool base_only = true,
                              double presence = 0.6) {
  Concept::Entries entries;
  for (std::size_t f = 0; f < schema->size(); ++f) {
    if (coin(rng, presence)) entries.emplace(f, random_property(schema->domain(f), rng, base_only));
  }
  return Concept(schema, entries);
}

/// Instance coordinates on a finer grid than the concept generator so that
/// they fall both on and between interval endpoints.
inline conlat::Instance random_instance(const SchemaPtr& schema, Rng& rng) {
  std::vector<double> values;
  for (std::size_t f = 0; f < schema->size(); ++f) {
    values.push_back(-2.5 + 0.125 * static_cast<double>(pick(rng, 49)));
  }
  return conlat::Instance(schema, std::move(values));
}

/// An instance that lies inside `c` wherever that is easy to arrange (points,
/// intervals, point sets, buckets); other coordinates are random.
inline conlat::Instance instance_near(const Concept& c, Rng& rng) {
  using namespace conlat;
  const auto& schema = c.schema_ptr();
  std::vector<double> values = random_instance(schema, rng).values();
  for (const auto& [f, p] : c.entries()) {
    if (const auto* x = std::get_if<Point>(&p)) values[f] = x->value;
    if (const auto* iv = std::get_if<Interval>(&p)) {
      values[f] = std::uniform_real_distribution<double>(iv->lo, iv->hi)(rng);
    }
    if (const auto* s = std::get_if<PointSet>(&p)) values[f] = s->values[pick(rng, s->values.size())];
    if (const auto* b = std::get_if<Bucket>(&p)) {
      const auto& cuts = std::get<Partition>(schema->domain(f)).cutoffs;
      const double lo = b->index == 0 ? cuts.front() - 1.0 : cuts[b->index - 1];
      const double hi = b->index == cuts.size() ? cuts.back() + 1.0 : cuts[b->index];
      values[f] = lo + 0.5 * (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    }
  }
  return Instance(schema, std::move(values));
}

}  // namespace testsupport
