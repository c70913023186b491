#include "conlat/prob_meet.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <string>

namespace conlat {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
// Upper bound on grid points per scan; the step widens beyond it.
constexpr double kMaxGridPoints = 1e6;

double upper_tail(double z) { return 0.5 * std::erfc(z * kInvSqrt2); }

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double gaussian_mass(const Gaussian& g, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  const double za = (lo - g.mean) / g.stddev;
  const double zb = (hi - g.mean) / g.stddev;
  double mass;
  if (za >= 0.0) {
    mass = upper_tail(za) - upper_tail(zb);
  } else if (zb <= 0.0) {
    mass = normal_cdf(zb) - normal_cdf(za);
  } else {
    mass = 1.0 - normal_cdf(za) - upper_tail(zb);
  }
  return std::clamp(mass, 0.0, 1.0);
}

double gaussian_mass(const Gaussian& g, const Region& region) {
  double total = 0.0;
  for (const auto& s : region.segments()) total += gaussian_mass(g, s.lo, s.hi);
  return std::min(total, 1.0);
}

Posterior::Posterior(std::vector<double> mean, std::vector<double> stddev)
    : mean_(std::move(mean)), stddev_(std::move(stddev)) {
  if (mean_.size() != stddev_.size()) {
    throw Error(ErrorCode::Malformed, "posterior mean and stddev lengths differ");
  }
  for (std::size_t d = 0; d < mean_.size(); ++d) {
    if (!std::isfinite(mean_[d])) throw Error(ErrorCode::Malformed, "posterior mean must be finite");
    if (!std::isfinite(stddev_[d]) || stddev_[d] <= 0.0) {
      throw Error(ErrorCode::Malformed, "posterior stddev must be positive and finite");
    }
  }
}

double concept_prob(const Concept& c, const Posterior& posterior) {
  if (posterior.size() != c.schema().size()) {
    throw Error(ErrorCode::SchemaMismatch, "posterior has " + std::to_string(posterior.size()) +
                                               " dimensions, schema has " +
                                               std::to_string(c.schema().size()));
  }
  double p = 1.0;
  for (const auto& [feature, property] : c.entries()) {
    p *= gaussian_mass(posterior.dimension(feature), region_of(property));
  }
  return p;
}

void PMeetConfig::validate(std::size_t dimensions) const {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::ConfigError, "threshold must lie strictly between 0 and 1");
  }
  if (epsilon.size() != dimensions) {
    throw Error(ErrorCode::ConfigError, "expected " + std::to_string(dimensions) +
                                            " epsilon values, got " +
                                            std::to_string(epsilon.size()));
  }
  for (double e : epsilon) {
    if (!std::isfinite(e) || e <= 0.0) throw Error(ErrorCode::ConfigError, "epsilon must be positive");
  }
  if (resolution && (!std::isfinite(*resolution) || *resolution <= 0.0)) {
    throw Error(ErrorCode::ConfigError, "resolution must be positive");
  }
  if (!std::isfinite(tolerance) || tolerance < 0.0) {
    throw Error(ErrorCode::ConfigError, "tolerance must be non-negative");
  }
}

double PMeetConfig::resolution_for(std::size_t d) const {
  return resolution ? *resolution : 1e-3 * epsilon.at(d);
}

IntervalFit best_interval(const Gaussian& first, const Gaussian& second, double length,
                          double resolution) {
  const double half = 0.5 * length;
  const auto joint = [&](double centre) {
    return gaussian_mass(first, centre - half, centre + half) *
           gaussian_mass(second, centre - half, centre + half);
  };

  const double spread = std::max(first.stddev, second.stddev);
  const double from = std::min(first.mean, second.mean) - 6.0 * spread;
  const double to = std::max(first.mean, second.mean) + 6.0 * spread;
  const double step = std::max(resolution, (to - from) / kMaxGridPoints);
  const auto points = static_cast<std::size_t>(std::ceil((to - from) / step));

  double best_centre = from;
  double best_mass = joint(from);
  for (std::size_t k = 1; k <= points; ++k) {
    const double centre = from + static_cast<double>(k) * step;
    const double m = joint(centre);
    if (m > best_mass) {
      best_mass = m;
      best_centre = centre;
    }
  }

  // Refine inside the neighbouring grid cells. The objective is log-concave
  // in the centre, so the derivative of its log changes sign once; bisect on
  // that sign. Fall back to golden-section search where a mass underflows.
  double a = best_centre - step;
  double b = best_centre + step;
  const auto slope = [&](double centre) -> std::optional<double> {
    double total = 0.0;
    for (const Gaussian* g : {&first, &second}) {
      const double m = gaussian_mass(*g, centre - half, centre + half);
      if (!(m > 0.0)) return std::nullopt;
      const double za = (centre - half - g->mean) / g->stddev;
      const double zb = (centre + half - g->mean) / g->stddev;
      total += (std::exp(-0.5 * za * za) - std::exp(-0.5 * zb * zb)) / (g->stddev * m);
    }
    return total;
  };
  bool bisected = true;
  for (int it = 0; it < 200 && b - a > 0.0; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const auto s = slope(mid);
    if (!s) {
      bisected = false;
      break;
    }
    if (*s > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  if (!bisected) {
    constexpr double kInvPhi = 0.61803398874989484820;
    a = best_centre - step;
    b = best_centre + step;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = joint(x1);
    double f2 = joint(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(best_centre)); ++it) {
      if (f1 >= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = joint(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = joint(x2);
      }
    }
  }
  const double refined = 0.5 * (a + b);
  const double refined_mass = joint(refined);
  if (refined_mass > best_mass || (refined_mass == best_mass && refined < best_centre)) {
    best_mass = refined_mass;
    best_centre = refined;
  }

  Interval iv{best_centre - half, best_centre + half};
  while (iv.width() > length) iv.hi = std::nextafter(iv.hi, iv.lo);
  return IntervalFit{iv, gaussian_mass(first, iv.lo, iv.hi) * gaussian_mass(second, iv.lo, iv.hi)};
}

IntervalFit max_mass_interval(std::size_t d, const Posterior& first, const Posterior& second,
                              double epsilon, double resolution) {
  return best_interval(first.dimension(d), second.dimension(d), 2.0 * epsilon, resolution);
}

namespace {

DimensionOutcome search_dimension(const Gaussian& first, const Gaussian& second, double epsilon,
                                  double resolution, double threshold, double tolerance) {
  const auto reaches = [&](const IntervalFit& fit) {
    return fit.joint_mass >= threshold - tolerance;
  };
  IntervalFit best = best_interval(first, second, 2.0 * epsilon, resolution);
  if (!reaches(best)) return {};
  // Best joint mass is non-decreasing in the length, so bisect on it.
  double lo = 0.0;
  double hi = 2.0 * epsilon;
  while (hi - lo > 0.5 * resolution) {
    const double mid = 0.5 * (lo + hi);
    IntervalFit fit = best_interval(first, second, mid, resolution);
    if (reaches(fit)) {
      hi = mid;
      best = fit;
    } else {
      lo = mid;
    }
  }
  return DimensionOutcome{best};
}

}  // namespace

PMeetResult probabilistic_meet(const Posterior& first, const Posterior& second,
                               const PMeetConfig& config, SchemaPtr schema) {
  if (first.size() != second.size()) {
    throw Error(ErrorCode::SchemaMismatch, "posteriors have different dimension counts");
  }
  const std::size_t k = first.size();
  if (!schema || schema->size() != k) {
    throw Error(ErrorCode::SchemaMismatch, "schema does not match the posterior dimension count");
  }
  for (std::size_t d = 0; d < k; ++d) {
    if (!std::holds_alternative<CappedInterval>(schema->domain(d))) {
      throw Error(ErrorCode::DomainMismatch,
                  "feature '" + schema->feature(d).name + "' is not an interval dimension");
    }
  }
  config.validate(k);

  std::vector<std::future<DimensionOutcome>> jobs;
  jobs.reserve(k);
  for (std::size_t d = 0; d < k; ++d) {
    jobs.push_back(std::async(std::launch::async, search_dimension, first.dimension(d),
                              second.dimension(d), config.epsilon[d], config.resolution_for(d),
                              config.threshold, config.tolerance));
  }

  PMeetResult result{{}, Concept(schema)};
  Concept::Entries entries;
  for (std::size_t d = 0; d < k; ++d) {
    result.dimensions.push_back(jobs[d].get());
    if (const auto& found = result.dimensions.back().found) entries.emplace(d, found->interval);
  }
  result.meet = Concept(schema, entries);
  return result;
}

SchemaPtr interval_schema(const std::vector<double>& epsilon) {
  std::vector<Feature> features;
  for (std::size_t d = 0; d < epsilon.size(); ++d) {
    features.push_back(Feature{"z" + std::to_string(d), CappedInterval{epsilon[d]}});
  }
  return make_schema(std::move(features));
}

}  // namespace conlat
