#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sojourn {

/// Arbitrary-precision path count. Counts pass 2^64 around 2n = 68.
using ExactCount = boost::multiprecision::cpp_int;

inline constexpr int kDefaultSignificantDigits = 12;

/// Decimal string of an exact count, no padding or sign.
std::string to_decimal_string(const ExactCount& n);
/// Parses an unsigned decimal integer; throws ArgumentError on anything else.
ExactCount parse_exact_count(const std::string& text);

/// Exact rational in [0, 1], always stored reduced with a positive
/// denominator.
class ExactProbability {
 public:
  ExactProbability() : num_(0), den_(1) {}
  /// Throws ArgumentError if den <= 0 or num/den is outside [0, 1].
  ExactProbability(ExactCount num, ExactCount den);

  static ExactProbability zero() { return {}; }
  static ExactProbability one() { return {1, 1}; }

  const ExactCount& numerator() const { return num_; }
  const ExactCount& denominator() const { return den_; }

  double to_double() const;

  /// "7/10", or "0" / "1" for integral values.
  std::string to_fraction_string() const;

  /// Fixed-point decimal rounded (half away from zero) to `significant`
  /// significant digits, trailing zeros dropped: 7/10 -> "0.7", 1 -> "1".
  std::string to_decimal(int significant = kDefaultSignificantDigits) const;

  friend bool operator==(const ExactProbability&, const ExactProbability&) = default;
  friend bool operator<(const ExactProbability& a, const ExactProbability& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  /// Sum; throws ArgumentError if the result exceeds 1.
  friend ExactProbability operator+(const ExactProbability& a, const ExactProbability& b);

 private:
  ExactCount num_;
  ExactCount den_;
};

/// Same rounding as ExactProbability::to_decimal for an arbitrary
/// nonnegative rational num/den.
std::string format_decimal(const ExactCount& num, const ExactCount& den,
                           int significant = kDefaultSignificantDigits);

/// Exact decimal rendering of a finite double (every double is a dyadic
/// rational), same rounding rules. Throws ArgumentError for negative or
/// non-finite input.
std::string format_decimal(double value, int significant = kDefaultSignificantDigits);

}  // namespace sojourn
