#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conlat/error.hpp"

namespace conlat {

// ---------------------------------------------------------------------------
// Value domains
// ---------------------------------------------------------------------------

/// Finite set of atomic symbols; values are single symbols, ordered by equality.
struct DiscreteSymbols {
  std::vector<std::string> symbols;
  bool operator==(const DiscreteSymbols&) const = default;
};

/// Finite symbol set whose values are non-empty subsets, ordered by superset.
struct DiscreteDisjunctive {
  std::vector<std::string> symbols;
  bool operator==(const DiscreteDisjunctive&) const = default;
};

/// Single reals, ordered by equality.
struct RealPoint {
  bool operator==(const RealPoint&) const = default;
};

/// Closed intervals of width at most 2*epsilon. The same dimension also
/// accepts the uncapped disjunctive (IntervalSet) and negated forms.
struct CappedInterval {
  double epsilon = 1.0;
  bool operator==(const CappedInterval&) const = default;
};

/// Finite real sets whose spread max - min is at most 2*epsilon.
struct BoundedPointSet {
  double epsilon = 1.0;
  bool operator==(const BoundedPointSet&) const = default;
};

/// Buckets of the real line cut at strictly increasing cutoffs. With N
/// cutoffs there are N + 1 buckets, numbered 0..N from the left.
struct Partition {
  std::vector<double> cutoffs;
  bool operator==(const Partition&) const = default;

  std::size_t bucket_count() const noexcept { return cutoffs.size() + 1; }
  std::size_t bucket_of(double x) const;
};

using ValueDomain = std::variant<DiscreteSymbols, DiscreteDisjunctive, RealPoint,
                                 CappedInterval, BoundedPointSet, Partition>;

std::string_view domain_kind(const ValueDomain& domain) noexcept;

/// True for domains with finitely many values (enumerable by lattice_verify).
bool is_finite(const ValueDomain& domain) noexcept;

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

struct Symbol {
  std::string value;
  bool operator==(const Symbol&) const = default;
};

/// Sorted, deduplicated, non-empty.
struct SymbolSet {
  std::vector<std::string> values;
  bool operator==(const SymbolSet&) const = default;
};

struct Point {
  double value = 0.0;
  bool operator==(const Point&) const = default;
};

/// Closed interval [lo, hi]; lo == hi is the point form of an instance.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;

  double width() const noexcept { return hi - lo; }
};

/// Sorted, deduplicated, non-empty.
struct PointSet {
  std::vector<double> values;
  bool operator==(const PointSet&) const = default;
};

/// Disjunction of closed intervals: sorted, pairwise disjoint, non-touching.
struct IntervalSet {
  std::vector<Interval> members;
  bool operator==(const IntervalSet&) const = default;
};

/// The real line minus the union of `excluded` (kept in IntervalSet form).
struct NegatedRegion {
  std::vector<Interval> excluded;
  bool operator==(const NegatedRegion&) const = default;
};

struct Bucket {
  std::size_t index = 0;
  bool operator==(const Bucket&) const = default;
};

using Property = std::variant<Symbol, SymbolSet, Point, Interval, PointSet,
                              IntervalSet, NegatedRegion, Bucket>;

std::string_view property_kind(const Property& p) noexcept;

/// Base properties live in the convex discovery space. IntervalSet and
/// NegatedRegion values are the disjunctive and negated extensions.
bool is_base(const Property& p) noexcept;

// ---------------------------------------------------------------------------
// Schema
// ---------------------------------------------------------------------------

using FeatureId = std::size_t;

struct Feature {
  std::string name;
  ValueDomain domain;
  bool operator==(const Feature&) const = default;
};

/// Ordered, named feature dimensions. Feature ids are the positions 0..K-1.
class FeatureSchema {
 public:
  FeatureSchema() = default;
  explicit FeatureSchema(std::vector<Feature> features);

  std::size_t size() const noexcept { return features_.size(); }
  const std::vector<Feature>& features() const noexcept { return features_; }
  const Feature& feature(FeatureId id) const;
  const ValueDomain& domain(FeatureId id) const { return feature(id).domain; }
  std::optional<FeatureId> find(std::string_view name) const;

  bool operator==(const FeatureSchema&) const = default;

 private:
  std::vector<Feature> features_;
};

using SchemaPtr = std::shared_ptr<const FeatureSchema>;

SchemaPtr make_schema(std::vector<Feature> features);

// ---------------------------------------------------------------------------
// Validation and canonical forms
// ---------------------------------------------------------------------------

/// Throws DomainMismatch, CapExceeded or Malformed when `p` does not belong
/// to `domain`. Accepts non-canonical input (unsorted sets and the like).
void validate_property(const ValueDomain& domain, const Property& p);
void validate_property(const FeatureSchema& schema, FeatureId feature,
                       const Property& p);

/// Structural canonical form: sorted and deduplicated sets, merged
/// overlapping or touching intervals. Idempotent.
Property canonicalize(const Property& p);

/// Domain-aware canonical form used for concept entries. On top of the
/// structural form, a disjunction that collapsed to one interval within the
/// domain's cap becomes a plain Interval, so equal point sets have one
/// spelling. Validates first.
Property canonicalize(const ValueDomain& domain, const Property& p);

/// Sorts and merges closed intervals; touching endpoints merge.
std::vector<Interval> merge_intervals(std::vector<Interval> intervals);

}  // namespace conlat
