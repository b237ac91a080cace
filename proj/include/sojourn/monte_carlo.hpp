#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sojourn/path.hpp"
#include "sojourn/philox.hpp"

namespace sojourn::monte_carlo {

/// Samples are drawn in fixed-size chunks; chunk c uses Philox stream
/// (seed, c). Results depend on (seed, samples, chunk_size) only, never on
/// the thread count.
inline constexpr std::uint64_t kDefaultChunkSize = 1u << 14;

struct SamplerConfig {
  int half_steps = 1;
  /// Proposals drawn. Under PositiveEnd roughly half are accepted.
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  PathClass conditioning = PathClass::All;
  std::uint64_t chunk_size = kDefaultChunkSize;
  /// 0 means hardware concurrency.
  unsigned threads = 1;
};

struct EmpiricalHistogram {
  int half_steps = 0;
  PathClass conditioning = PathClass::All;
  /// counts[k] for k = T_{2n}/2 in [0, n].
  std::vector<std::uint64_t> counts;
  std::uint64_t accepted = 0;
  std::uint64_t proposals = 0;

  /// Entrywise merge; throws ArgumentError on shape mismatch.
  EmpiricalHistogram& operator+=(const EmpiricalHistogram& other);
  friend bool operator==(const EmpiricalHistogram&, const EmpiricalHistogram&) = default;
};

/// Uniform path of length 2n: each step is one fresh random bit.
StepSequence sample_path(int n, Philox4x32& rng);

/// Uniform bridge of length 2n: Fisher-Yates shuffle of n ups and n downs.
StepSequence sample_bridge(int n, Philox4x32& rng);

/// Throws ArgumentError for n < 1, samples < 1 or chunk_size < 1 and
/// DegenerateOutputError when nothing is accepted.
EmpiricalHistogram simulate_sojourn(const SamplerConfig& config);

struct ConditionalEstimate {
  std::uint64_t observations = 0;
  std::uint64_t positive_end = 0;
  double estimate = 0.0;
  /// Binomial standard error sqrt(p(1-p)/observations).
  double standard_error = 0.0;
};

/// One pass over `samples` unconditioned paths; for every k that was
/// observed, the fraction of those paths that end on the positive side.
/// Unobserved k are absent from the map.
std::map<int, ConditionalEstimate> estimate_conditional_positive(
    int n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1,
    std::uint64_t chunk_size = kDefaultChunkSize);

}  // namespace sojourn::monte_carlo
