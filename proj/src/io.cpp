#include "conlat/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "conlat/format.hpp"
#include "conlat/region.hpp"

namespace conlat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::ParseError, message); }

const Json& member(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) fail(std::string(where) + " must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string(where) + " is missing \"" + key + "\"");
  return *it;
}

double real_of(const Json& j) {
  if (!j.is_number()) fail("expected a number, got " + j.dump());
  return j.get<double>();
}

std::vector<double> reals_of(const Json& j) {
  if (!j.is_array()) fail("expected an array of numbers, got " + j.dump());
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(real_of(x));
  return out;
}

std::vector<std::string> strings_of(const Json& j) {
  if (!j.is_array()) fail("expected an array of strings, got " + j.dump());
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) fail("expected a string, got " + x.dump());
    out.push_back(x.get<std::string>());
  }
  return out;
}

Interval interval_of(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail("an interval is a pair [lo, hi], got " + j.dump());
  return Interval{real_of(j[0]), real_of(j[1])};
}

std::vector<Interval> intervals_of(const Json& j) {
  if (!j.is_array()) fail("expected a list of intervals, got " + j.dump());
  std::vector<Interval> out;
  for (const auto& x : j) out.push_back(interval_of(x));
  return out;
}

Json real(double x) { return Json(round_real(x)); }

Json reals(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(real(x));
  return out;
}

Json pair(const Interval& iv) { return Json::array({real(iv.lo), real(iv.hi)}); }

Json pairs(const std::vector<Interval>& ivs) {
  Json out = Json::array();
  for (const auto& iv : ivs) out.push_back(pair(iv));
  return out;
}

// The next 12-significant-digit value below an already rounded x.
double step_down(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
  return round_real(x - std::pow(10.0, exponent - 11));
}

// Rounding both ends of an interval at the length cap can widen it past
// the cap; pull the upper end in so the output parses back.
Property fit_after_rounding(const ValueDomain& domain, const Property& p) {
  if (const auto* iv = std::get_if<Interval>(&p)) {
    if (const auto* cap = std::get_if<CappedInterval>(&domain)) {
      const double lo = round_real(iv->lo);
      double hi = round_real(iv->hi);
      while (hi - lo > 2.0 * cap->epsilon && hi > lo) hi = step_down(hi);
      return Interval{lo, hi};
    }
  }
  if (const auto* ps = std::get_if<PointSet>(&p)) {
    if (const auto* cap = std::get_if<BoundedPointSet>(&domain)) {
      std::vector<double> values;
      for (double v : ps->values) values.push_back(round_real(v));
      const double lo = values.front();
      for (double& v : values) {
        while (v - lo > 2.0 * cap->epsilon && v > lo) v = step_down(v);
      }
      return PointSet{values};
    }
  }
  return p;
}

Json end_of(double x) { return std::isfinite(x) ? real(x) : Json(nullptr); }

Json domain_json(const ValueDomain& d) {
  Json out = Json::object();
  out["kind"] = std::string(domain_kind(d));
  std::visit(overloaded{
                 [&](const DiscreteSymbols& s) { out["symbols"] = s.symbols; },
                 [&](const DiscreteDisjunctive& s) { out["symbols"] = s.symbols; },
                 [](const RealPoint&) {},
                 [&](const CappedInterval& c) { out["epsilon"] = real(c.epsilon); },
                 [&](const BoundedPointSet& c) { out["epsilon"] = real(c.epsilon); },
                 [&](const Partition& p) { out["cutoffs"] = reals(p.cutoffs); },
             },
             d);
  return out;
}

ValueDomain parse_domain(const Json& j) {
  const Json& kind_json = member(j, "kind", "domain");
  if (!kind_json.is_string()) fail("domain kind must be a string");
  const auto kind = kind_json.get<std::string>();
  if (kind == "discrete") return DiscreteSymbols{strings_of(member(j, "symbols", "domain"))};
  if (kind == "disjunctive") return DiscreteDisjunctive{strings_of(member(j, "symbols", "domain"))};
  if (kind == "point") return RealPoint{};
  if (kind == "interval") return CappedInterval{real_of(member(j, "epsilon", "domain"))};
  if (kind == "pointset") return BoundedPointSet{real_of(member(j, "epsilon", "domain"))};
  if (kind == "partition") return Partition{reals_of(member(j, "cutoffs", "domain"))};
  fail("unknown domain kind \"" + kind + "\"");
}

std::vector<Json> concept_list(const FiniteSpace& space, const std::vector<std::size_t>& ids) {
  std::vector<Json> out;
  for (std::size_t i : ids) out.push_back(to_json(space.at(i)));
  return out;
}

Json verdict(const FiniteSpace& space, const AxiomVerdict& v) {
  Json out = Json::object();
  out["holds"] = v.holds;
  out["counterexample"] = concept_list(space, v.counterexample);
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(); }

SchemaPtr parse_schema(const Json& j) {
  const Json& list = member(j, "features", "schema");
  if (!list.is_array()) fail("schema \"features\" must be an array");
  std::vector<Feature> features;
  for (const auto& f : list) {
    const Json& name = member(f, "name", "feature");
    if (!name.is_string()) fail("feature name must be a string");
    features.push_back(Feature{name.get<std::string>(), parse_domain(member(f, "domain", "feature"))});
  }
  return make_schema(std::move(features));
}

Property parse_property(const Json& j) {
  if (!j.is_object()) fail("a property must be a JSON object, got " + j.dump());
  // "gaps" is derived output next to "negated" and carries no information.
  std::size_t keys = j.size() - (j.contains("negated") && j.contains("gaps") ? 1 : 0);
  if (keys != 1) fail("a property has exactly one kind key, got " + j.dump());
  const std::string key = j.begin().key();
  const Json& v = j.begin().value();
  if (key == "symbol") {
    if (!v.is_string()) fail("\"symbol\" takes a string");
    return Symbol{v.get<std::string>()};
  }
  if (key == "symbols") return SymbolSet{strings_of(v)};
  if (key == "point") return Point{real_of(v)};
  if (key == "interval") return interval_of(v);
  if (key == "pointset") return PointSet{reals_of(v)};
  if (key == "intervalset") return IntervalSet{intervals_of(v)};
  if (key == "negated") return NegatedRegion{intervals_of(v)};
  if (key == "bucket") {
    if (!v.is_number_unsigned()) fail("\"bucket\" takes a non-negative integer");
    return Bucket{v.get<std::size_t>()};
  }
  if (key == "gaps") return NegatedRegion{intervals_of(member(j, "negated", "property"))};
  fail("unknown property kind \"" + key + "\"");
}

Concept parse_concept(const SchemaPtr& schema, const Json& j) {
  const Json& entries = member(j, "entries", "concept");
  if (!entries.is_object()) fail("concept \"entries\" must be an object");
  Concept::Entries out;
  for (const auto& [name, p] : entries.items()) {
    const auto id = schema->find(name);
    if (!id) throw Error(ErrorCode::UnknownFeature, "schema has no feature \"" + name + "\"");
    out.emplace(*id, parse_property(p));
  }
  return Concept(schema, out);
}

Instance parse_instance(const SchemaPtr& schema, const Json& j) {
  return Instance(schema, reals_of(member(j, "point", "instance")));
}

std::vector<Instance> parse_pool(const SchemaPtr& schema, const Json& j) {
  const Json& list = member(j, "instances", "pool");
  if (!list.is_array()) fail("pool \"instances\" must be an array");
  std::vector<Instance> out;
  for (const auto& x : list) {
    out.push_back(x.is_object() ? parse_instance(schema, x) : Instance(schema, reals_of(x)));
  }
  return out;
}

Posterior parse_posterior(const Json& j) {
  return Posterior(reals_of(member(j, "mean", "posterior")),
                   reals_of(member(j, "stddev", "posterior")));
}

Json to_json(const FeatureSchema& schema) {
  Json features = Json::array();
  for (const auto& f : schema.features()) {
    Json entry = Json::object();
    entry["name"] = f.name;
    entry["domain"] = domain_json(f.domain);
    features.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["features"] = std::move(features);
  return out;
}

Json to_json(const Property& p) {
  Json out = Json::object();
  std::visit(overloaded{
                 [&](const Symbol& s) { out["symbol"] = s.value; },
                 [&](const SymbolSet& s) { out["symbols"] = s.values; },
                 [&](const Point& x) { out["point"] = real(x.value); },
                 [&](const Interval& iv) { out["interval"] = pair(iv); },
                 [&](const PointSet& s) { out["pointset"] = reals(s.values); },
                 [&](const IntervalSet& s) { out["intervalset"] = pairs(s.members); },
                 [&](const NegatedRegion& n) {
                   out["negated"] = pairs(n.excluded);
                   Json gaps = Json::array();
                   const Region region = region_of(n);
                   for (const auto& s : region.segments()) {
                     gaps.push_back(Json::array({end_of(s.lo), end_of(s.hi)}));
                   }
                   out["gaps"] = std::move(gaps);
                 },
                 [&](const Bucket& b) { out["bucket"] = b.index; },
             },
             p);
  return out;
}

Json to_json(const Concept& c) {
  Json entries = Json::object();
  for (const auto& [feature, p] : c.entries()) {
    entries[c.schema().feature(feature).name] =
        to_json(fit_after_rounding(c.schema().domain(feature), p));
  }
  Json out = Json::object();
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const Instance& x) {
  Json out = Json::object();
  out["point"] = reals(x.values());
  return out;
}

Json to_json(const Posterior& p) {
  Json out = Json::object();
  out["mean"] = reals(p.mean());
  out["stddev"] = reals(p.stddev());
  return out;
}

Json to_json(const PMeetResult& result) {
  Json dims = Json::array();
  for (std::size_t d = 0; d < result.dimensions.size(); ++d) {
    const auto& outcome = result.dimensions[d];
    Json entry = Json::object();
    entry["feature"] = result.meet.schema().feature(d).name;
    if (outcome.found) {
      entry["outcome"] = "found";
      entry["interval"] = pair(outcome.found->interval);
      entry["length"] = real(outcome.found->interval.width());
      entry["joint_mass"] = real(outcome.found->joint_mass);
    } else {
      entry["outcome"] = "dropped";
    }
    dims.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["dimensions"] = std::move(dims);
  out["concept"] = to_json(result.meet);
  return out;
}

Json to_json(const FiniteSpace& space, const CheckReport& report) {
  Json out = Json::object();
  out["size"] = space.size();
  out["reflexive"] = verdict(space, report.reflexive);
  out["antisymmetric"] = verdict(space, report.antisymmetric);
  out["transitive"] = verdict(space, report.transitive);
  out["has_bottom"] = report.has_bottom;
  out["bottom"] = report.bottom ? to_json(space.at(*report.bottom)) : Json(nullptr);
  out["meet_semilattice"] = report.is_meet_semilattice;
  out["meets"] = verdict(space, report.meets);
  out["join_total"] = report.join_total;
  out["maximal_count"] = report.maximal_elements.size();
  out["maximal_are_fully_specified"] = report.maximal_are_fully_specified;
  out["chains_have_lub"] = report.cpo_chain_check;
  out["chains"] = verdict(space, report.chains);
  out["maximal_chain_count"] = report.maximal_chain_count;
  out["chains_checked"] = report.chains_checked;
  out["chains_sampled"] = report.chains_sampled;
  out["is_cpo"] = report.is_cpo();
  return out;
}

}  // namespace conlat
