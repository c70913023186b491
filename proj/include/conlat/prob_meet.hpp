#pragma once

#include <optional>
#include <vector>

#include "conlat/concept.hpp"
#include "conlat/region.hpp"

namespace conlat {

struct Gaussian {
  double mean = 0.0;
  double stddev = 1.0;
};

/// Standard normal CDF, Phi(z).
double normal_cdf(double z);

/// Probability that N(g.mean, g.stddev^2) falls in [lo, hi]. Written in
/// terms of erfc on whichever tail keeps the subtraction well conditioned.
double gaussian_mass(const Gaussian& g, double lo, double hi);

/// Probability of a region; open versus closed ends carry no mass.
double gaussian_mass(const Gaussian& g, const Region& region);

/// Diagonal Gaussian posterior p(z|x): one independent Gaussian per dimension.
class Posterior {
 public:
  Posterior(std::vector<double> mean, std::vector<double> stddev);

  std::size_t size() const noexcept { return mean_.size(); }
  Gaussian dimension(std::size_t d) const { return {mean_.at(d), stddev_.at(d)}; }
  const std::vector<double>& mean() const noexcept { return mean_; }
  const std::vector<double>& stddev() const noexcept { return stddev_; }

 private:
  std::vector<double> mean_;
  std::vector<double> stddev_;
};

/// p(C|x): the product over specified dimensions of the posterior mass of
/// each property's region. Unspecified dimensions contribute 1, points and
/// finite point sets contribute 0. Throws DomainMismatch for symbolic or
/// bucket properties and SchemaMismatch for a posterior of the wrong length.
double concept_prob(const Concept& c, const Posterior& posterior);

struct PMeetConfig {
  double threshold = 0.9;
  /// Half of the maximum interval length, one per dimension.
  std::vector<double> epsilon;
  /// Grid step of the interval search; defaults to 1e-3 * epsilon per dimension.
  std::optional<double> resolution;
  /// Slack allowed when comparing joint mass with the threshold.
  double tolerance = 1e-9;

  /// Throws ConfigError.
  void validate(std::size_t dimensions) const;
  double resolution_for(std::size_t d) const;
};

struct IntervalFit {
  Interval interval;
  double joint_mass = 0.0;
};

/// Among intervals of the given length, one maximising the joint mass
/// mass1([a,b]) * mass2([a,b]). Centres are scanned on a grid of step
/// `resolution` over [min mean - 6 sd, max mean + 6 sd] and the best cell is
/// refined by bisection on the slope of the log objective, which is
/// log-concave in the centre. Equal masses prefer the smaller left endpoint.
IntervalFit best_interval(const Gaussian& first, const Gaussian& second, double length,
                          double resolution);

/// Best interval of the maximal length 2*epsilon on dimension `d`.
IntervalFit max_mass_interval(std::size_t d, const Posterior& first, const Posterior& second,
                              double epsilon, double resolution);

struct DimensionOutcome {
  std::optional<IntervalFit> found;  ///< nullopt: the dimension is dropped
};

struct PMeetResult {
  std::vector<DimensionOutcome> dimensions;
  Concept meet;  ///< found intervals; universal when every dimension dropped
};

/// Smallest interval per dimension whose joint mass reaches the threshold.
/// Dimension lengths are bisected over (0, 2*epsilon] to within half a
/// resolution step. A dimension that misses the threshold even at 2*epsilon
/// is dropped. `schema` must have a CappedInterval feature per dimension.
PMeetResult probabilistic_meet(const Posterior& first, const Posterior& second,
                               const PMeetConfig& config, SchemaPtr schema);

/// Schema of K interval features named z0..z{K-1} with the given epsilons.
SchemaPtr interval_schema(const std::vector<double>& epsilon);

}  // namespace conlat
