#pragma once

// Reference computations that share no numerics with the library: masses
// are integrated from the density by adaptive Simpson quadrature, regions
// are read straight off the property values.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "conlat/concept.hpp"

namespace testsupport {

inline double normal_pdf(double x, double mu, double sd) {
  const double z = (x - mu) / sd;
  return std::exp(-0.5 * z * z) / (sd * 2.5066282746310002);
}

inline double simpson_step(double mu, double sd, double a, double b, double fa, double fm,
                           double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = normal_pdf(lm, mu, sd);
  const double frm = normal_pdf(rm, mu, sd);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson_step(mu, sd, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(mu, sd, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Integral of the N(mu, sd^2) density over [lo, hi]; either end may be
/// infinite. The range is cut at mu + k*sd breakpoints first so that the
/// adaptive rule cannot step over the peak.
inline double simpson_mass(double mu, double sd, double lo, double hi, double tol = 1e-13) {
  lo = std::max(lo, mu - 40.0 * sd);
  hi = std::min(hi, mu + 40.0 * sd);
  if (!(hi > lo)) return 0.0;
  std::vector<double> cuts{lo, hi};
  for (double k : {-16.0, -8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    const double x = mu + k * sd;
    if (x > lo && x < hi) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const double fa = normal_pdf(a, mu, sd);
    const double fb = normal_pdf(b, mu, sd);
    const double fm = normal_pdf(0.5 * (a + b), mu, sd);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total += simpson_step(mu, sd, a, b, fa, fm, fb, whole, tol, 50);
  }
  return total;
}

/// Closed pieces of a real-valued property as (lo, hi) pairs; negations are
/// turned into their gaps by hand.
inline std::vector<std::pair<double, double>> pieces(const conlat::Property& p) {
  using namespace conlat;
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, double>> out;
  if (const auto* x = std::get_if<Point>(&p)) out.emplace_back(x->value, x->value);
  if (const auto* iv = std::get_if<Interval>(&p)) out.emplace_back(iv->lo, iv->hi);
  if (const auto* s = std::get_if<PointSet>(&p)) {
    for (double v : s->values) out.emplace_back(v, v);
  }
  if (const auto* s = std::get_if<IntervalSet>(&p)) {
    for (const auto& m : s->members) out.emplace_back(m.lo, m.hi);
  }
  if (const auto* n = std::get_if<NegatedRegion>(&p)) {
    auto ex = n->excluded;
    std::sort(ex.begin(), ex.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double from = -inf;
    for (const auto& m : ex) {
      if (m.lo > from) out.emplace_back(from, m.lo);
      from = std::max(from, m.hi);
    }
    out.emplace_back(from, inf);
  }
  return out;
}

inline double oracle_property_mass(const conlat::Property& p, double mu, double sd) {
  double total = 0.0;
  for (const auto& [lo, hi] : pieces(p)) total += simpson_mass(mu, sd, lo, hi);
  return total;
}

inline double oracle_concept_prob(const conlat::Concept& c, const std::vector<double>& mean,
                                  const std::vector<double>& stddev) {
  double prob = 1.0;
  for (const auto& [f, p] : c.entries()) prob *= oracle_property_mass(p, mean[f], stddev[f]);
  return prob;
}

/// Best joint mass over interval centres on a grid between the two means.
/// The optimum lies between them since each factor decreases away from its
/// own mean.
inline std::pair<double, double> oracle_best_centre(double mu1, double sd1, double mu2,
                                                    double sd2, double length, double step) {
  const double from = std::min(mu1, mu2);
  const double to = std::max(mu1, mu2);
  double best_c = from;
  double best_m = -1.0;
  for (double c = from; c <= to + 0.5 * step; c += step) {
    const double m = simpson_mass(mu1, sd1, c - 0.5 * length, c + 0.5 * length, 1e-12) *
                     simpson_mass(mu2, sd2, c - 0.5 * length, c + 0.5 * length, 1e-12);
    if (m > best_m) {
      best_m = m;
      best_c = c;
    }
  }
  return {best_c, best_m};
}

/// Smallest length on the grid k*step (k >= 1, length <= max_length) whose
/// best grid-centred interval reaches the threshold; 0 when none does.
inline double oracle_min_length(double mu1, double sd1, double mu2, double sd2,
                                double threshold, double max_length, double step) {
  const auto reaches = [&](double len) {
    return oracle_best_centre(mu1, sd1, mu2, sd2, len, step).second >= threshold;
  };
  auto hi = static_cast<long>(std::floor(max_length / step + 1e-9));
  if (!reaches(static_cast<double>(hi) * step)) return 0.0;
  long lo = 0;
  while (hi - lo > 1) {
    const long mid = (lo + hi) / 2;
    if (reaches(static_cast<double>(mid) * step)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<double>(hi) * step;
}

}  // namespace testsupport
