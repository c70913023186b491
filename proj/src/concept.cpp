#include "conlat/concept.hpp"

#include <cmath>

namespace conlat {

Concept::Concept(SchemaPtr schema) : schema_(std::move(schema)) {
  if (!schema_) throw Error(ErrorCode::Malformed, "concept requires a schema");
}

Concept::Concept(SchemaPtr schema, const Entries& entries) : Concept(std::move(schema)) {
  for (const auto& [feature, p] : entries) {
    entries_.emplace(feature, canonicalize(schema_->domain(feature), p));
  }
}

Concept Concept::of(SchemaPtr schema,
                    std::initializer_list<std::pair<std::string, Property>> entries) {
  Entries map;
  for (const auto& [name, p] : entries) {
    const auto id = schema->find(name);
    if (!id) throw Error(ErrorCode::UnknownFeature, "unknown feature '" + name + "'");
    if (!map.emplace(*id, p).second) {
      throw Error(ErrorCode::Malformed, "feature '" + name + "' given twice");
    }
  }
  return Concept(std::move(schema), map);
}

const Property* Concept::find(FeatureId feature) const {
  const auto it = entries_.find(feature);
  return it == entries_.end() ? nullptr : &it->second;
}

Concept Concept::with(FeatureId feature, const Property& p) const {
  Concept out = *this;
  out.entries_.insert_or_assign(feature, canonicalize(schema_->domain(feature), p));
  return out;
}

Concept Concept::without(FeatureId feature) const {
  Concept out = *this;
  out.entries_.erase(feature);
  return out;
}

bool Concept::operator==(const Concept& other) const {
  return same_schema(*schema_, *other.schema_) && entries_ == other.entries_;
}

Instance::Instance(SchemaPtr schema, std::vector<double> values)
    : schema_(std::move(schema)), values_(std::move(values)) {
  if (!schema_) throw Error(ErrorCode::Malformed, "instance requires a schema");
  if (values_.size() != schema_->size()) {
    throw Error(ErrorCode::SchemaMismatch,
                "instance has " + std::to_string(values_.size()) + " values, schema has " +
                    std::to_string(schema_->size()) + " features");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::Malformed, "instance values must be finite");
  }
}

bool Instance::operator==(const Instance& other) const {
  return same_schema(*schema_, *other.schema_) && values_ == other.values_;
}

bool same_schema(const FeatureSchema& a, const FeatureSchema& b) noexcept {
  return &a == &b || a == b;
}

void require_same_schema(const FeatureSchema& a, const FeatureSchema& b) {
  if (!same_schema(a, b)) throw Error(ErrorCode::SchemaMismatch, "operands use different schemas");
}

}  // namespace conlat
