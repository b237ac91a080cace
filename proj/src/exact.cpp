#include "sojourn/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "sojourn/errors.hpp"

namespace sojourn {

namespace mp = boost::multiprecision;

std::string to_decimal_string(const ExactCount& n) { return n.str(); }

ExactCount parse_exact_count(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw ArgumentError("not an unsigned decimal integer: '" + text + "'");
  }
  return ExactCount(text);
}

namespace {

ExactCount pow10(unsigned e) { return mp::pow(ExactCount(10), e); }

// num/den >= 10^e
bool at_least_pow10(const ExactCount& num, const ExactCount& den, int e) {
  return e >= 0 ? num >= den * pow10(static_cast<unsigned>(e))
                : num * pow10(static_cast<unsigned>(-e)) >= den;
}

int decimal_digits(const ExactCount& v) { return static_cast<int>(v.str().size()); }

}  // namespace

std::string format_decimal(const ExactCount& num, const ExactCount& den, int significant) {
  if (den <= 0 || num < 0) {
    throw ArgumentError("format_decimal needs num >= 0 and den > 0");
  }
  if (significant < 1) {
    throw ArgumentError("need at least one significant digit");
  }
  if (num == 0) {
    return "0";
  }

  // Exponent of the leading digit: 10^e <= num/den < 10^(e+1).
  int e = decimal_digits(num) - decimal_digits(den);
  if (!at_least_pow10(num, den, e)) {
    --e;
  } else if (at_least_pow10(num, den, e + 1)) {
    ++e;
  }

  const auto s = significant;
  auto rounded = [&](int exponent) {
    ExactCount n = num;
    ExactCount d = den;
    const int shift = s - 1 - exponent;
    if (shift >= 0) {
      n *= pow10(static_cast<unsigned>(shift));
    } else {
      d *= pow10(static_cast<unsigned>(-shift));
    }
    return ExactCount((2 * n + d) / (2 * d));
  };

  ExactCount scaled = rounded(e);
  if (scaled == pow10(static_cast<unsigned>(s))) {
    ++e;
    scaled = rounded(e);
  }

  const std::string digits = scaled.str();
  std::string text;
  if (e >= s - 1) {
    text = digits + std::string(static_cast<std::size_t>(e - s + 1), '0');
  } else if (e >= 0) {
    text = digits.substr(0, static_cast<std::size_t>(e) + 1) + "." +
           digits.substr(static_cast<std::size_t>(e) + 1);
  } else {
    text = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  }

  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') {
      text.pop_back();
    }
    if (text.back() == '.') {
      text.pop_back();
    }
  }
  return text;
}

std::string format_decimal(double value, int significant) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ArgumentError("format_decimal needs a finite nonnegative value");
  }
  if (value == 0.0) {
    return "0";
  }
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  const auto bits = static_cast<std::uint64_t>(std::ldexp(mantissa, 53));
  const int shift = exponent - 53;
  if (shift >= 0) {
    return format_decimal(ExactCount(bits) << shift, ExactCount(1), significant);
  }
  return format_decimal(ExactCount(bits), ExactCount(1) << -shift, significant);
}

ExactProbability::ExactProbability(ExactCount num, ExactCount den) {
  if (den <= 0) {
    throw ArgumentError("probability denominator must be positive");
  }
  if (num < 0 || num > den) {
    throw ArgumentError("probability " + num.str() + "/" + den.str() + " outside [0, 1]");
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  const ExactCount g = mp::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double ExactProbability::to_double() const {
  return mp::number<mp::cpp_rational_backend>(num_, den_).convert_to<double>();
}

std::string ExactProbability::to_fraction_string() const {
  if (den_ == 1) {
    return num_.str();
  }
  return num_.str() + "/" + den_.str();
}

std::string ExactProbability::to_decimal(int significant) const {
  return format_decimal(num_, den_, significant);
}

ExactProbability operator+(const ExactProbability& a, const ExactProbability& b) {
  return ExactProbability(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

}  // namespace sojourn
