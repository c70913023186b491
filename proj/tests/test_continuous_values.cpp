#include <doctest.h>

#include "conlat/continuous.hpp"
#include "conlat/order.hpp"
#include "generators.hpp"
#include "worked_examples.hpp"

using namespace conlat;
using namespace testsupport;

TEST_CASE("meets and joins among blue, red, dark red and green") {
  const auto b = on_line(blue());
  const auto r = on_line(red());
  const auto dr = on_line(dark_red());
  const auto g = on_line(green());
  const auto red_or_blue = line_set({{0.0, 1.0}, {2.0, 3.0}});

  CHECK_FALSE(unify(b, r));
  CHECK(analysis_meet(b, r) == red_or_blue);
  CHECK(unify(r, dr) == dr);
  CHECK(analysis_meet(r, dr) == r);
  CHECK(unify(red_or_blue, dr) == dr);
  CHECK(analysis_meet(red_or_blue, dr) == red_or_blue);
  CHECK(analysis_meet(red_or_blue, g) == line_set({{0.0, 1.0}, {2.0, 3.0}, {4.0, 5.0}}));
}

TEST_CASE("discovery meets stay in the convex base space") {
  const auto b = on_line(blue());
  const auto r = on_line(red());
  const auto red_or_blue = line_set({{0.0, 1.0}, {2.0, 3.0}});
  // Hull [0,3] is wider than 2: the dimension is dropped.
  CHECK(guard_base_meet(MeetContext::Discovery, b, r).is_universal());
  CHECK(guard_base_meet(MeetContext::Discovery, r, on_line(dark_red())) == r);
  CHECK_THROWS_AS(guard_base_meet(MeetContext::Discovery, red_or_blue, b), Error);
  CHECK_THROWS_AS(generalise(red_or_blue, b), Error);
  CHECK(guard_base_meet(MeetContext::Analysis, red_or_blue, b) == red_or_blue);
}

TEST_CASE("negated values order by inclusion") {
  const auto not_ = [](const Property& p) { return negate(p); };
  CHECK(denotes_subset(red(), not_(blue())));
  CHECK(denotes_subset(not_(red()), not_(dark_red())));
  CHECK(denotes_subset(not_(IntervalSet{{{0.0, 1.0}, {2.0, 3.0}}}), not_(red())));
  CHECK_FALSE(denotes_subset(not_(dark_red()), not_(red())));

  // In the order of information, the superset is the lesser concept.
  CHECK(subsumes(on_line(not_(blue())), on_line(red())));
  CHECK(subsumes(on_line(not_(dark_red())), on_line(not_(red()))));
}

TEST_CASE("negation is an involution") {
  const Property twice = negate(negate(red()));
  CHECK(denotes_subset(twice, red()));
  CHECK(denotes_subset(red(), twice));
  CHECK(negate(red()) == Property{NegatedRegion{{{2.0, 3.0}}}});
  const DisjunctiveProperty d({{2.0, 3.0}, {0.0, 1.0}});
  CHECK(negate(negate(d)) == d);
}

TEST_CASE("disjunctive operations") {
  const DisjunctiveProperty a({{0.0, 1.0}, {2.0, 3.0}});
  const DisjunctiveProperty b({{0.5, 2.5}});
  CHECK(disj_meet(a, b) == DisjunctiveProperty({{0.0, 3.0}}));
  CHECK(disj_join(a, b) == DisjunctiveProperty({{0.5, 1.0}, {2.0, 2.5}}));
  CHECK_FALSE(disj_join(a, DisjunctiveProperty({{5.0, 6.0}})));
  CHECK(disj_leq(a, DisjunctiveProperty({{2.2, 2.6}})));
  CHECK_THROWS_AS(DisjunctiveProperty({}), Error);
  CHECK_THROWS_AS(DisjunctiveProperty({{1.0, 0.0}}), Error);
}

TEST_CASE("analysis meet with negations") {
  const auto not_red = on_line(negate(red()));
  const auto not_green = on_line(negate(green()));
  // Union of the two complements is everything: the feature is unspecified.
  CHECK(analysis_meet(not_red, not_green).is_universal());
  // not-red or [2.2,2.6] leaves half-open holes: no representable glb.
  CHECK_THROWS_AS(analysis_meet(not_red, on_line(dark_red())), Error);
  CHECK(analysis_meet(not_red, on_line(Interval{1.5, 3.5})).is_universal());
  // not(red or green) or red = not green.
  const auto not_red_or_green = on_line(NegatedRegion{{{2.0, 3.0}, {4.0, 5.0}}});
  CHECK(analysis_meet(not_red_or_green, on_line(red())) == not_green);
}

TEST_CASE("joins with negations") {
  const auto not_red = on_line(negate(red()));
  CHECK(unify(not_red, on_line(blue())) == on_line(blue()));
  // [1.5,2.5] minus [2,3] is half-open: no least upper bound.
  CHECK_FALSE(unify(not_red, on_line(Interval{1.5, 2.5})));
  CHECK(unify(not_red, on_line(negate(green()))) ==
        on_line(NegatedRegion{{{2.0, 3.0}, {4.0, 5.0}}}));
}

TEST_CASE("order axioms hold on mixed base, disjunctive and negated values") {
  Rng rng(5);
  const auto schema = family_schema(Family::Interval);
  std::vector<Concept> pool;
  for (int i = 0; i < 200; ++i) pool.push_back(random_concept(schema, rng, false));
  for (const auto& a : pool) {
    CHECK(subsumes(a, a));
    for (const auto& b : pool) {
      if (subsumes(a, b) && subsumes(b, a)) CHECK(a == b);
    }
  }
  for (int i = 0; i < 20000; ++i) {
    const auto& a = pool[pick(rng, pool.size())];
    const auto& b = pool[pick(rng, pool.size())];
    const auto& c = pool[pick(rng, pool.size())];
    if (subsumes(a, b) && subsumes(b, c)) CHECK(subsumes(a, c));
  }
}

TEST_CASE("analysis meet is a lower bound whenever it exists") {
  Rng rng(9);
  const auto schema = family_schema(Family::Interval);
  int defined = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_concept(schema, rng, false);
    const auto b = random_concept(schema, rng, false);
    try {
      const auto m = analysis_meet(a, b);
      ++defined;
      CHECK(subsumes(m, a));
      CHECK(subsumes(m, b));
      CHECK(analysis_meet(b, a) == m);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PolicyError);
    }
  }
  CHECK(defined > 1000);
}
