#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sojourn/exact.hpp"
#include "sojourn/path.hpp"

namespace sojourn::limits {

/// Limit laws of the sojourn fraction r = T_{2n} / 2n on [0, 1].
///   Arcsine     all paths
///   MpPositive  paths ending on the positive side
///   MpNegative  paths ending on the negative side
enum class Law { Arcsine, MpPositive, MpNegative };

std::string_view to_string(Law law);
/// Accepts "arcsine", "mp-positive", "mp-negative".
Law parse_law(std::string_view name);

class DistributionSpec {
 public:
  constexpr explicit DistributionSpec(Law law) : law_(law) {}

  Law law() const { return law_; }
  std::string_view name() const { return to_string(law_); }

  /// Closed-form CDF on [0, 1]:
  ///   Arcsine     (2/pi) asin(sqrt r)
  ///   MpPositive  (2/pi) (asin(sqrt r) - sqrt(r(1-r)))
  ///   MpNegative  (2/pi) (asin(sqrt r) + sqrt(r(1-r)))
  /// Throws ArgumentError for r outside [0, 1].
  double cdf(double r) const;

  /// Density on the open interval (0, 1); throws ArgumentError elsewhere,
  /// since each law is singular at one or both endpoints.
  double density(double r) const;

 private:
  Law law_;
};

/// Right-continuous step CDF with jumps at `support` (strictly increasing,
/// inside [0, 1]). cumulative[i] is F(support[i]); the last value is 1.
struct StepCdf {
  std::vector<double> support;
  std::vector<double> cumulative;
  std::optional<PathClass> path_class;

  /// F(r) for any real r.
  double operator()(double r) const;
};

/// Exact finite-n CDF of k/n from closed_form::sojourn_pmf. Requires n >= 1.
StepCdf finite_n_cdf(int n, PathClass c);

/// Same support points, exact cumulative probabilities.
std::vector<ExactProbability> finite_n_cdf_exact(int n, PathClass c);

/// Empirical CDF of k/n from per-k counts (k = 0..n, n = counts.size() - 1).
/// Throws DegenerateOutputError if all counts are zero.
StepCdf empirical_cdf(std::span<const std::uint64_t> counts,
                      std::optional<PathClass> c = std::nullopt);
StepCdf empirical_cdf(std::span<const ExactCount> counts,
                      std::optional<PathClass> c = std::nullopt);

/// sup_r |F(r) - G(r)| for step F and continuous G, taking both F(r_i-) and
/// F(r_i) at every jump.
double ks_distance(const StepCdf& discrete, const DistributionSpec& spec);

/// Limit law matched to a class (Bridge has no limit among these three).
std::optional<Law> matching_law(PathClass c);

}  // namespace sojourn::limits
