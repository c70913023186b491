#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conlat/schema.hpp"

namespace conlat {

/// A partial map from features to properties. Entries are validated against
/// the schema and stored in canonical form, so structural equality is order
/// equality. The empty map is the universal concept (bottom).
class Concept {
 public:
  using Entries = std::map<FeatureId, Property>;

  explicit Concept(SchemaPtr schema);
  Concept(SchemaPtr schema, const Entries& entries);

  /// Builds a concept from (feature name, property) pairs.
  static Concept of(SchemaPtr schema,
                    std::initializer_list<std::pair<std::string, Property>> entries);

  const SchemaPtr& schema_ptr() const noexcept { return schema_; }
  const FeatureSchema& schema() const noexcept { return *schema_; }
  const Entries& entries() const noexcept { return entries_; }

  bool is_universal() const noexcept { return entries_.empty(); }
  bool is_total() const noexcept { return entries_.size() == schema_->size(); }
  std::size_t size() const noexcept { return entries_.size(); }

  /// nullptr when the feature is unspecified.
  const Property* find(FeatureId feature) const;

  Concept with(FeatureId feature, const Property& p) const;
  Concept without(FeatureId feature) const;

  bool operator==(const Concept& other) const;

 private:
  SchemaPtr schema_;
  Entries entries_;
};

/// A total assignment of one real per feature: a point of the K-dimensional
/// representation space.
class Instance {
 public:
  Instance(SchemaPtr schema, std::vector<double> values);

  const SchemaPtr& schema_ptr() const noexcept { return schema_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](FeatureId feature) const { return values_.at(feature); }

  bool operator==(const Instance& other) const;

 private:
  SchemaPtr schema_;
  std::vector<double> values_;
};

/// Result of unification: nullopt when the join does not exist.
using MeetJoinResult = std::optional<Concept>;

/// Pointer-equal or structurally equal schemas are interchangeable.
bool same_schema(const FeatureSchema& a, const FeatureSchema& b) noexcept;

/// Throws SchemaMismatch unless both schemas are interchangeable.
void require_same_schema(const FeatureSchema& a, const FeatureSchema& b);

}  // namespace conlat
