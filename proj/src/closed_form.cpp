#include "sojourn/closed_form.hpp"

#include <algorithm>
#include <string>

#include "sojourn/errors.hpp"

namespace sojourn::closed_form {

namespace {

ExactCount exact_quotient(const ExactCount& num, const ExactCount& den, const char* what) {
  ExactCount q;
  ExactCount r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InvariantViolation(std::string(what) + ": " + num.str() + " is not divisible by " +
                             den.str());
  }
  return q;
}

void require_range(int n, int k, int min_n, const char* what) {
  if (n < min_n) {
    throw ArgumentError(std::string(what) + ": n must be at least " + std::to_string(min_n) +
                        ", got " + std::to_string(n));
  }
  if (k < 0 || k > n) {
    throw ArgumentError(std::string(what) + ": k = " + std::to_string(k) + " outside [0, " +
                        std::to_string(n) + "]");
  }
}

}  // namespace

ExactCount binomial(int a, int b) {
  if (a < 0) {
    throw ArgumentError("binomial: upper index must be nonnegative");
  }
  if (b < 0 || b > a) {
    return 0;
  }
  b = std::min(b, a - b);
  ExactCount c = 1;
  // After step i, c = C(a - b + i, i); each division is exact.
  for (int i = 1; i <= b; ++i) {
    c *= a - b + i;
    c /= i;
  }
  return c;
}

ExactCount central_binomial(int j) {
  if (j < 0) {
    throw ArgumentError("central_binomial: index must be nonnegative");
  }
  thread_local std::vector<ExactCount> cache{ExactCount(1)};
  while (cache.size() <= static_cast<std::size_t>(j)) {
    const auto i = static_cast<long>(cache.size()) - 1;
    // C(2i+2, i+1) = C(2i, i) * 2(2i+1) / (i+1)
    cache.push_back(exact_quotient(cache.back() * (2 * (2 * i + 1)), i + 1, "central_binomial"));
  }
  return cache[static_cast<std::size_t>(j)];
}

ExactCount catalan(int j) {
  return exact_quotient(central_binomial(j), j + 1, "catalan");
}

ExactCount count_all(int steps) {
  if (steps < 0) {
    throw ArgumentError("count_all: steps must be nonnegative");
  }
  return ExactCount(1) << steps;
}

ExactCount count_bridges(int steps) {
  if (steps < 0) {
    throw ArgumentError("count_bridges: steps must be nonnegative");
  }
  if (steps % 2 != 0) {
    return 0;
  }
  return central_binomial(steps / 2);
}

ExactCount count_by_sojourn(int n, int k) {
  require_range(n, k, 0, "count_by_sojourn");
  return central_binomial(k) * central_binomial(n - k);
}

ExactCount count_bridges_by_sojourn(int n, int k) {
  require_range(n, k, 1, "count_bridges_by_sojourn");
  return exact_quotient(central_binomial(n), n + 1, "count_bridges_by_sojourn");
}

ExactCount count_positive_end_by_sojourn(int n, int k) {
  require_range(n, k, 1, "count_positive_end_by_sojourn");
  if (k == 0) {
    return 0;
  }
  return exact_quotient(k * central_binomial(k) * central_binomial(n - k), n,
                        "count_positive_end_by_sojourn");
}

ExactCount count_positive_end_by_sojourn_sum(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw ArgumentError("count_positive_end_by_sojourn_sum: need 1 <= k <= n, got n = " +
                        std::to_string(n) + ", k = " + std::to_string(k));
  }
  // l = n - tau where 2 tau is the last visit to 0 before time 2n: a bridge
  // of length 2(n-l) followed by an excursion above 0 of length 2l - 1 and a
  // free last step.
  ExactCount sum = 0;
  for (int l = 1; l <= k; ++l) {
    const ExactCount term = central_binomial(n - l) * 2 * central_binomial(l - 1);
    sum += exact_quotient(term, n - l + 1, "count_positive_end_by_sojourn_sum");
  }
  return sum;
}

ExactCount count_by_class(int n, int k, PathClass c) {
  switch (c) {
    case PathClass::All:
      return count_by_sojourn(n, k);
    case PathClass::Bridge:
      return count_bridges_by_sojourn(n, k);
    case PathClass::PositiveEnd:
      return count_positive_end_by_sojourn(n, k);
  }
  throw ArgumentError("unknown path class");
}

ExactCount class_total(int n, PathClass c) {
  if (n < 1) {
    throw ArgumentError("class_total: n must be at least 1");
  }
  switch (c) {
    case PathClass::All:
      return count_all(2 * n);
    case PathClass::Bridge:
      return count_bridges(2 * n);
    case PathClass::PositiveEnd:
      return count_all(2 * n - 1);
  }
  throw ArgumentError("unknown path class");
}

ExactProbability conditional_positive_probability(int n, int k) {
  require_range(n, k, 1, "conditional_positive_probability");
  return ExactProbability(count_positive_end_by_sojourn(n, k), count_by_sojourn(n, k));
}

std::vector<ExactProbability> sojourn_pmf(int n, PathClass c) {
  const ExactCount total = class_total(n, c);
  std::vector<ExactProbability> pmf;
  pmf.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    pmf.emplace_back(count_by_class(n, k, c), total);
  }
  return pmf;
}

}  // namespace sojourn::closed_form
