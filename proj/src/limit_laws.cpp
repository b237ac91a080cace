#include "sojourn/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sojourn/closed_form.hpp"
#include "sojourn/errors.hpp"

namespace sojourn::limits {

std::string_view to_string(Law law) {
  switch (law) {
    case Law::Arcsine:
      return "arcsine";
    case Law::MpPositive:
      return "mp-positive";
    case Law::MpNegative:
      return "mp-negative";
  }
  return "?";
}

Law parse_law(std::string_view name) {
  for (Law law : {Law::Arcsine, Law::MpPositive, Law::MpNegative}) {
    if (to_string(law) == name) {
      return law;
    }
  }
  throw ArgumentError("unknown law '" + std::string(name) +
                      "' (expected arcsine, mp-positive or mp-negative)");
}

double DistributionSpec::cdf(double r) const {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw ArgumentError("cdf argument " + std::to_string(r) + " outside [0, 1]");
  }
  constexpr double two_over_pi = 2.0 / std::numbers::pi;
  const double angle = std::asin(std::sqrt(r));
  const double cross = std::sqrt(r * (1.0 - r));
  switch (law_) {
    case Law::Arcsine:
      return two_over_pi * angle;
    case Law::MpPositive:
      return std::clamp(two_over_pi * (angle - cross), 0.0, 1.0);
    case Law::MpNegative:
      return std::clamp(two_over_pi * (angle + cross), 0.0, 1.0);
  }
  return 0.0;
}

double DistributionSpec::density(double r) const {
  if (!(r > 0.0 && r < 1.0)) {
    throw ArgumentError("density is defined on (0, 1) only, got " + std::to_string(r));
  }
  switch (law_) {
    case Law::Arcsine:
      return 1.0 / (std::numbers::pi * std::sqrt(r * (1.0 - r)));
    case Law::MpPositive:
      return 2.0 / std::numbers::pi * std::sqrt(r / (1.0 - r));
    case Law::MpNegative:
      return 2.0 / std::numbers::pi * std::sqrt((1.0 - r) / r);
  }
  return 0.0;
}

double StepCdf::operator()(double r) const {
  const auto it = std::upper_bound(support.begin(), support.end(), r);
  if (it == support.begin()) {
    return 0.0;
  }
  return cumulative[static_cast<std::size_t>(it - support.begin()) - 1];
}

std::vector<ExactProbability> finite_n_cdf_exact(int n, PathClass c) {
  const auto pmf = closed_form::sojourn_pmf(n, c);
  std::vector<ExactProbability> cumulative;
  cumulative.reserve(pmf.size());
  ExactCount running = 0;
  const ExactCount total = closed_form::class_total(n, c);
  for (int k = 0; k <= n; ++k) {
    running += closed_form::count_by_class(n, k, c);
    cumulative.emplace_back(running, total);
  }
  return cumulative;
}

StepCdf finite_n_cdf(int n, PathClass c) {
  StepCdf cdf;
  cdf.path_class = c;
  for (int k = 0; k <= n; ++k) {
    cdf.support.push_back(static_cast<double>(k) / n);
  }
  for (const auto& p : finite_n_cdf_exact(n, c)) {
    cdf.cumulative.push_back(p.to_double());
  }
  return cdf;
}

namespace {

template <class Count>
StepCdf build_empirical(std::span<const Count> counts, std::optional<PathClass> c) {
  if (counts.size() < 2) {
    throw ArgumentError("empirical CDF needs counts for k = 0..n with n >= 1");
  }
  const auto n = counts.size() - 1;
  ExactCount total = 0;
  for (const auto& v : counts) {
    total += v;
  }
  if (total == 0) {
    throw DegenerateOutputError("empirical CDF of an empty histogram");
  }
  StepCdf cdf;
  cdf.path_class = c;
  ExactCount running = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    running += counts[k];
    cdf.support.push_back(static_cast<double>(k) / static_cast<double>(n));
    cdf.cumulative.push_back(ExactProbability(running, total).to_double());
  }
  return cdf;
}

}  // namespace

StepCdf empirical_cdf(std::span<const std::uint64_t> counts, std::optional<PathClass> c) {
  return build_empirical(counts, c);
}

StepCdf empirical_cdf(std::span<const ExactCount> counts, std::optional<PathClass> c) {
  return build_empirical(counts, c);
}

double ks_distance(const StepCdf& discrete, const DistributionSpec& spec) {
  if (discrete.support.size() != discrete.cumulative.size() || discrete.support.empty()) {
    throw ArgumentError("malformed step CDF");
  }
  double worst = 0.0;
  double before = 0.0;
  for (std::size_t i = 0; i < discrete.support.size(); ++i) {
    const double g = spec.cdf(discrete.support[i]);
    const double at = discrete.cumulative[i];
    worst = std::max({worst, std::abs(before - g), std::abs(at - g)});
    before = at;
  }
  // Beyond the last jump F stays at its final value while G climbs to 1.
  worst = std::max(worst, std::abs(before - 1.0));
  return worst;
}

std::optional<Law> matching_law(PathClass c) {
  switch (c) {
    case PathClass::All:
      return Law::Arcsine;
    case PathClass::PositiveEnd:
      return Law::MpPositive;
    case PathClass::Bridge:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace sojourn::limits
