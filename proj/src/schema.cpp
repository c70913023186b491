#include "conlat/schema.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace conlat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) fail(ErrorCode::Malformed, std::string(what) + " must be finite");
}

void check_interval_shape(const Interval& iv) {
  check_finite(iv.lo, "interval endpoint");
  check_finite(iv.hi, "interval endpoint");
  if (iv.lo > iv.hi) {
    fail(ErrorCode::Malformed, "interval lower endpoint exceeds upper endpoint");
  }
}

void check_symbols(const std::vector<std::string>& symbols) {
  if (symbols.empty()) fail(ErrorCode::Malformed, "symbol domain must not be empty");
  std::set<std::string> seen;
  for (const auto& s : symbols) {
    if (!seen.insert(s).second) fail(ErrorCode::Malformed, "duplicate symbol '" + s + "'");
  }
}

void check_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    fail(ErrorCode::Malformed, "epsilon must be a positive finite real");
  }
}

bool contains(const std::vector<std::string>& symbols, const std::string& s) {
  return std::find(symbols.begin(), symbols.end(), s) != symbols.end();
}

[[noreturn]] void mismatch(const ValueDomain& domain, const Property& p) {
  fail(ErrorCode::DomainMismatch, std::string("property kind '") +
                                      std::string(property_kind(p)) +
                                      "' does not belong to domain '" +
                                      std::string(domain_kind(domain)) + "'");
}

}  // namespace

std::size_t Partition::bucket_of(double x) const {
  return static_cast<std::size_t>(std::upper_bound(cutoffs.begin(), cutoffs.end(), x) -
                                  cutoffs.begin());
}

std::string_view domain_kind(const ValueDomain& domain) noexcept {
  return std::visit(overloaded{
                        [](const DiscreteSymbols&) { return std::string_view("discrete"); },
                        [](const DiscreteDisjunctive&) { return std::string_view("disjunctive"); },
                        [](const RealPoint&) { return std::string_view("point"); },
                        [](const CappedInterval&) { return std::string_view("interval"); },
                        [](const BoundedPointSet&) { return std::string_view("pointset"); },
                        [](const Partition&) { return std::string_view("partition"); },
                    },
                    domain);
}

bool is_finite(const ValueDomain& domain) noexcept {
  return std::holds_alternative<DiscreteSymbols>(domain) ||
         std::holds_alternative<DiscreteDisjunctive>(domain) ||
         std::holds_alternative<Partition>(domain);
}

std::string_view property_kind(const Property& p) noexcept {
  return std::visit(overloaded{
                        [](const Symbol&) { return std::string_view("symbol"); },
                        [](const SymbolSet&) { return std::string_view("symbols"); },
                        [](const Point&) { return std::string_view("point"); },
                        [](const Interval&) { return std::string_view("interval"); },
                        [](const PointSet&) { return std::string_view("pointset"); },
                        [](const IntervalSet&) { return std::string_view("intervalset"); },
                        [](const NegatedRegion&) { return std::string_view("negated"); },
                        [](const Bucket&) { return std::string_view("bucket"); },
                    },
                    p);
}

bool is_base(const Property& p) noexcept {
  return !std::holds_alternative<IntervalSet>(p) && !std::holds_alternative<NegatedRegion>(p);
}

FeatureSchema::FeatureSchema(std::vector<Feature> features) : features_(std::move(features)) {
  std::set<std::string> names;
  for (const auto& f : features_) {
    if (f.name.empty()) fail(ErrorCode::Malformed, "feature name must not be empty");
    if (!names.insert(f.name).second) {
      fail(ErrorCode::Malformed, "duplicate feature name '" + f.name + "'");
    }
    std::visit(overloaded{
                   [](const DiscreteSymbols& d) { check_symbols(d.symbols); },
                   [](const DiscreteDisjunctive& d) { check_symbols(d.symbols); },
                   [](const RealPoint&) {},
                   [](const CappedInterval& d) { check_epsilon(d.epsilon); },
                   [](const BoundedPointSet& d) { check_epsilon(d.epsilon); },
                   [](const Partition& d) {
                     for (std::size_t i = 0; i < d.cutoffs.size(); ++i) {
                       check_finite(d.cutoffs[i], "partition cutoff");
                       if (i > 0 && !(d.cutoffs[i - 1] < d.cutoffs[i])) {
                         fail(ErrorCode::Malformed, "partition cutoffs must be strictly increasing");
                       }
                     }
                   },
               },
               f.domain);
  }
}

const Feature& FeatureSchema::feature(FeatureId id) const {
  if (id >= features_.size()) {
    fail(ErrorCode::UnknownFeature, "feature id " + std::to_string(id) + " out of range");
  }
  return features_[id];
}

std::optional<FeatureId> FeatureSchema::find(std::string_view name) const {
  for (FeatureId i = 0; i < features_.size(); ++i) {
    if (features_[i].name == name) return i;
  }
  return std::nullopt;
}

SchemaPtr make_schema(std::vector<Feature> features) {
  return std::make_shared<const FeatureSchema>(std::move(features));
}

void validate_property(const ValueDomain& domain, const Property& p) {
  std::visit(
      overloaded{
          [&](const DiscreteSymbols& d) {
            const auto* s = std::get_if<Symbol>(&p);
            if (s == nullptr) mismatch(domain, p);
            if (!contains(d.symbols, s->value)) {
              fail(ErrorCode::Malformed, "unknown symbol '" + s->value + "'");
            }
          },
          [&](const DiscreteDisjunctive& d) {
            const auto* s = std::get_if<SymbolSet>(&p);
            if (s == nullptr) mismatch(domain, p);
            if (s->values.empty()) fail(ErrorCode::Malformed, "symbol set must not be empty");
            for (const auto& v : s->values) {
              if (!contains(d.symbols, v)) fail(ErrorCode::Malformed, "unknown symbol '" + v + "'");
            }
          },
          [&](const RealPoint&) {
            const auto* x = std::get_if<Point>(&p);
            if (x == nullptr) mismatch(domain, p);
            check_finite(x->value, "point");
          },
          [&](const CappedInterval& d) {
            if (const auto* iv = std::get_if<Interval>(&p)) {
              check_interval_shape(*iv);
              if (iv->hi - iv->lo > 2.0 * d.epsilon) {
                fail(ErrorCode::CapExceeded, "interval wider than 2*epsilon");
              }
            } else if (const auto* set = std::get_if<IntervalSet>(&p)) {
              if (set->members.empty()) fail(ErrorCode::Malformed, "interval set must not be empty");
              for (const auto& m : set->members) check_interval_shape(m);
            } else if (const auto* neg = std::get_if<NegatedRegion>(&p)) {
              if (neg->excluded.empty()) {
                fail(ErrorCode::Malformed, "negated region must exclude something");
              }
              for (const auto& m : neg->excluded) check_interval_shape(m);
            } else {
              mismatch(domain, p);
            }
          },
          [&](const BoundedPointSet& d) {
            const auto* s = std::get_if<PointSet>(&p);
            if (s == nullptr) mismatch(domain, p);
            if (s->values.empty()) fail(ErrorCode::Malformed, "point set must not be empty");
            for (double v : s->values) check_finite(v, "point set element");
            const auto [lo, hi] = std::minmax_element(s->values.begin(), s->values.end());
            if (*hi - *lo > 2.0 * d.epsilon) {
              fail(ErrorCode::CapExceeded, "point set spread exceeds 2*epsilon");
            }
          },
          [&](const Partition& d) {
            const auto* b = std::get_if<Bucket>(&p);
            if (b == nullptr) mismatch(domain, p);
            if (b->index >= d.bucket_count()) {
              fail(ErrorCode::Malformed, "bucket index out of range");
            }
          },
      },
      domain);
}

void validate_property(const FeatureSchema& schema, FeatureId feature, const Property& p) {
  validate_property(schema.domain(feature), p);
}

std::vector<Interval> merge_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Interval> merged;
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

Property canonicalize(const Property& p) {
  return std::visit(
      overloaded{
          [](const SymbolSet& s) -> Property {
            auto values = s.values;
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            return SymbolSet{std::move(values)};
          },
          [](const PointSet& s) -> Property {
            auto values = s.values;
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            return PointSet{std::move(values)};
          },
          [](const IntervalSet& s) -> Property { return IntervalSet{merge_intervals(s.members)}; },
          [](const NegatedRegion& n) -> Property {
            return NegatedRegion{merge_intervals(n.excluded)};
          },
          [](const auto& atom) -> Property { return atom; },
      },
      p);
}

Property canonicalize(const ValueDomain& domain, const Property& p) {
  validate_property(domain, p);
  Property c = canonicalize(p);
  if (const auto* cap = std::get_if<CappedInterval>(&domain)) {
    if (const auto* set = std::get_if<IntervalSet>(&c);
        set != nullptr && set->members.size() == 1 &&
        set->members.front().width() <= 2.0 * cap->epsilon) {
      return set->members.front();
    }
  }
  return c;
}

}  // namespace conlat
