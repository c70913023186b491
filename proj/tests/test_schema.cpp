#include <doctest.h>

#include "conlat/schema.hpp"
#include "generators.hpp"

using namespace conlat;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("schema construction rejects bad declarations") {
  CHECK(code_of([] { make_schema({{"a", RealPoint{}}, {"a", RealPoint{}}}); }) ==
        ErrorCode::Malformed);
  CHECK(code_of([] { make_schema({{"", RealPoint{}}}); }) == ErrorCode::Malformed);
  CHECK(code_of([] { make_schema({{"a", CappedInterval{0.0}}}); }) == ErrorCode::Malformed);
  CHECK(code_of([] { make_schema({{"a", BoundedPointSet{-1.0}}}); }) == ErrorCode::Malformed);
  CHECK(code_of([] { make_schema({{"a", Partition{{1.0, 1.0}}}}); }) == ErrorCode::Malformed);
  CHECK(code_of([] { make_schema({{"a", DiscreteSymbols{{}}}}); }) == ErrorCode::Malformed);
  CHECK(code_of([] { make_schema({{"a", DiscreteSymbols{{"x", "x"}}}}); }) == ErrorCode::Malformed);
}

TEST_CASE("feature lookup") {
  const auto s = make_schema({{"Color", DiscreteSymbols{{"Red"}}}, {"Size", RealPoint{}}});
  CHECK(s->size() == 2);
  CHECK(s->find("Size") == FeatureId{1});
  CHECK_FALSE(s->find("Weight"));
  CHECK(code_of([&] { s->feature(2); }) == ErrorCode::UnknownFeature);
  CHECK(domain_kind(s->domain(0)) == "discrete");
  CHECK(domain_kind(s->domain(1)) == "point");
  CHECK(is_finite(s->domain(0)));
  CHECK_FALSE(is_finite(s->domain(1)));
}

TEST_CASE("partition buckets are half-open on the right") {
  const Partition p{{0.0, 1.0}};
  CHECK(p.bucket_count() == 3);
  CHECK(p.bucket_of(-0.5) == 0);
  CHECK(p.bucket_of(0.0) == 1);
  CHECK(p.bucket_of(0.999) == 1);
  CHECK(p.bucket_of(1.0) == 2);
  CHECK(p.bucket_of(1e9) == 2);
}

TEST_CASE("property validation per domain") {
  const ValueDomain iv = CappedInterval{0.5};
  CHECK_NOTHROW(validate_property(iv, Interval{0.0, 1.0}));  // width exactly 2*epsilon
  CHECK(code_of([&] { validate_property(iv, Interval{0.0, 1.0000001}); }) ==
        ErrorCode::CapExceeded);
  CHECK(code_of([&] { validate_property(iv, Interval{1.0, 0.0}); }) == ErrorCode::Malformed);
  CHECK_NOTHROW(validate_property(iv, IntervalSet{{{0.0, 5.0}}}));
  CHECK_NOTHROW(validate_property(iv, NegatedRegion{{{0.0, 1.0}}}));
  CHECK(code_of([&] { validate_property(iv, Symbol{"x"}); }) == ErrorCode::DomainMismatch);
  CHECK(code_of([&] { validate_property(iv, Interval{0.0, INFINITY}); }) == ErrorCode::Malformed);

  const ValueDomain ps = BoundedPointSet{0.5};
  CHECK_NOTHROW(validate_property(ps, PointSet{{0.0, 1.0}}));
  CHECK(code_of([&] { validate_property(ps, PointSet{{0.0, 1.5}}); }) == ErrorCode::CapExceeded);
  CHECK(code_of([&] { validate_property(ps, IntervalSet{{{0.0, 1.0}}}); }) ==
        ErrorCode::DomainMismatch);

  const ValueDomain sym = DiscreteSymbols{{"Red", "Blue"}};
  CHECK(code_of([&] { validate_property(sym, Symbol{"Green"}); }) == ErrorCode::Malformed);
  const ValueDomain dis = DiscreteDisjunctive{{"Red", "Blue"}};
  CHECK(code_of([&] { validate_property(dis, SymbolSet{{}}); }) == ErrorCode::Malformed);
  const ValueDomain part = Partition{{0.0}};
  CHECK(code_of([&] { validate_property(part, Bucket{2}); }) == ErrorCode::Malformed);
}

TEST_CASE("canonical forms") {
  CHECK(canonicalize(SymbolSet{{"b", "a", "b"}}) == Property{SymbolSet{{"a", "b"}}});
  CHECK(canonicalize(PointSet{{2.0, 1.0, 2.0}}) == Property{PointSet{{1.0, 2.0}}});
  CHECK(canonicalize(IntervalSet{{{2.0, 3.0}, {0.0, 1.0}, {1.0, 1.5}}}) ==
        Property{IntervalSet{{{0.0, 1.5}, {2.0, 3.0}}}});
  CHECK(canonicalize(NegatedRegion{{{1.0, 2.0}, {0.0, 1.5}}}) ==
        Property{NegatedRegion{{{0.0, 2.0}}}});

  const ValueDomain iv = CappedInterval{1.0};
  CHECK(canonicalize(iv, IntervalSet{{{0.0, 1.0}, {1.0, 2.0}}}) == Property{Interval{0.0, 2.0}});
  CHECK(canonicalize(iv, IntervalSet{{{0.0, 2.5}}}) == Property{IntervalSet{{{0.0, 2.5}}}});
  CHECK(canonicalize(iv, IntervalSet{{{0.0, 1.0}, {2.0, 3.0}}}) ==
        Property{IntervalSet{{{0.0, 1.0}, {2.0, 3.0}}}});
}

TEST_CASE("canonicalization is idempotent on random properties") {
  testsupport::Rng rng(11);
  for (auto fam : testsupport::all_families()) {
    const auto schema = testsupport::family_schema(fam);
    for (int i = 0; i < 300; ++i) {
      const FeatureId f = testsupport::pick(rng, schema->size());
      const auto p = testsupport::random_property(schema->domain(f), rng, false);
      const auto once = canonicalize(schema->domain(f), p);
      CHECK(canonicalize(schema->domain(f), once) == once);
    }
  }
}
