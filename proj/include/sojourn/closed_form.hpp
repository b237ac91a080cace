#pragma once

#include <vector>

#include "sojourn/exact.hpp"
#include "sojourn/path.hpp"

// Exact counting formulas for sojourn times of the simple random walk.
//
// Notation: paths have N = 2n steps, sojourn time T = 2k. All results are
// exact integers; every division in this file is checked to be exact and an
// InvariantViolation is thrown if it is not.
namespace sojourn::closed_form {

/// C(a, b); 0 when b < 0 or b > a. Throws ArgumentError for a < 0.
ExactCount binomial(int a, int b);

/// C(2j, j), memoized per thread.
ExactCount central_binomial(int j);

/// C(2j, j) / (j + 1).
ExactCount catalan(int j);

/// 2^N.
ExactCount count_all(int steps);

/// Paths ending at 0: C(2n, n) for N = 2n, 0 for odd N.
ExactCount count_bridges(int steps);

/// Paths with T_{2n} = 2k: C(2k, k) C(2n-2k, n-k). Requires 0 <= k <= n.
ExactCount count_by_sojourn(int n, int k);

/// Bridges with T_{2n} = 2k: C(2n, n) / (n+1), the same for every k.
/// Requires n >= 1 and 0 <= k <= n.
ExactCount count_bridges_by_sojourn(int n, int k);

/// Positive-end paths with T_{2n} = 2k: (k/n) C(2k, k) C(2n-2k, n-k).
/// Requires n >= 1 and 0 <= k <= n.
ExactCount count_positive_end_by_sojourn(int n, int k);

/// The same count via the last-zero decomposition
///   sum_{l=1..k} Catalan(n-l) * 2 * C(2l-2, l-1).
/// Requires 1 <= k <= n.
ExactCount count_positive_end_by_sojourn_sum(int n, int k);

/// Count for one class; dispatches to the three formulas above.
ExactCount count_by_class(int n, int k, PathClass c);

/// Number of length-2n paths in a class: 4^n, C(2n, n) or 2^{2n-1}.
ExactCount class_total(int n, PathClass c);

/// P(positive end | T_{2n} = 2k) = k/n, from the two counts.
/// Requires n >= 1 and 0 <= k <= n.
ExactProbability conditional_positive_probability(int n, int k);

/// Distribution of k = T_{2n}/2 within a class, indexed by k in [0, n].
/// Requires n >= 1.
std::vector<ExactProbability> sojourn_pmf(int n, PathClass c);

}  // namespace sojourn::closed_form
