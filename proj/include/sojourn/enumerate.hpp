#pragma once

#include "sojourn/exact.hpp"
#include "sojourn/path.hpp"
#include "sojourn/table.hpp"

// Exhaustive enumeration of all 2^N paths. This is the ground truth the
// closed forms are checked against, so it deliberately does nothing clever:
// every path is walked step by step.
namespace sojourn::enumerate {

inline constexpr int kDefaultCap = 28;
inline constexpr int kHardCap = 62;

/// Cap from SOJOURN_ENUM_CAP if set and valid, else kDefaultCap.
int cap_from_environment();

struct EnumerationConfig {
  int steps = 0;
  int cap = kDefaultCap;
  /// Number of fixed-prefix shards; a power of two, at most 2^steps.
  std::uint64_t partitions = 1;
  /// Worker threads; 0 means hardware concurrency. Never affects results.
  unsigned threads = 1;
};

/// Throws ResourceLimitError when steps > cap and ArgumentError for a bad
/// steps/partitions combination.
void validate(const EnumerationConfig& config);

/// Counts of every path of length N by raw sojourn value and class.
SojournTable enumerate_counts(const EnumerationConfig& config);

/// Counts for a single shard: paths whose first `prefix_bits` steps equal the
/// low bits of `prefix`.
SojournTable enumerate_shard(int steps, int prefix_bits, std::uint64_t prefix);

/// One cell of enumerate_counts for raw sojourn m. Requires 0 <= m <= N.
ExactCount count_paths_brute(int steps, int sojourn, PathClass c,
                             int cap = kDefaultCap);

}  // namespace sojourn::enumerate
