#include "sojourn/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "sojourn/errors.hpp"

namespace sojourn::enumerate {

namespace {

// Per-worker tallies; 2^62 paths still fit.
struct RawCounts {
  explicit RawCounts(int steps)
      : all(steps + 1, 0), bridge(steps + 1, 0), positive_end(steps + 1, 0) {}

  void add_shard(int steps, int prefix_bits, std::uint64_t prefix) {
    const int free_bits = steps - prefix_bits;
    const std::uint64_t suffixes = std::uint64_t{1} << free_bits;
    for (std::uint64_t suffix = 0; suffix < suffixes; ++suffix) {
      const std::uint64_t bits = prefix | (suffix << prefix_bits);
      const PathSummary s = summarize_word(bits, steps);
      ++all[s.sojourn];
      bridge[s.sojourn] += s.bridge;
      positive_end[s.sojourn] += s.positive_end;
    }
  }

  void merge_into(SojournTable& table) const {
    for (int m = 0; m <= table.steps(); ++m) {
      table.at(m, PathClass::All) += all[m];
      table.at(m, PathClass::Bridge) += bridge[m];
      table.at(m, PathClass::PositiveEnd) += positive_end[m];
    }
  }

  std::vector<std::uint64_t> all;
  std::vector<std::uint64_t> bridge;
  std::vector<std::uint64_t> positive_end;
};

}  // namespace

int cap_from_environment() {
  const char* raw = std::getenv("SOJOURN_ENUM_CAP");
  if (raw == nullptr) {
    return kDefaultCap;
  }
  const std::string_view text(raw);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 || value > kHardCap) {
    return kDefaultCap;
  }
  return value;
}

void validate(const EnumerationConfig& config) {
  if (config.cap < 1 || config.cap > kHardCap) {
    throw ArgumentError("enumeration cap must be in [1, " + std::to_string(kHardCap) + "]");
  }
  if (config.steps > config.cap) {
    throw ResourceLimitError("refusing to enumerate 2^" + std::to_string(config.steps) +
                             " paths: cap is " + std::to_string(config.cap) +
                             " steps (raise it with SOJOURN_ENUM_CAP)");
  }
  if (config.steps < 1) {
    throw ArgumentError("enumeration needs at least one step");
  }
  if (!std::has_single_bit(config.partitions)) {
    throw ArgumentError("partitions must be a power of two");
  }
  if (std::bit_width(config.partitions) - 1 > static_cast<unsigned>(config.steps)) {
    throw ArgumentError("partitions must not exceed 2^steps");
  }
}

SojournTable enumerate_shard(int steps, int prefix_bits, std::uint64_t prefix) {
  if (steps < 1 || steps > kHardCap || prefix_bits < 0 || prefix_bits > steps) {
    throw ArgumentError("bad shard shape");
  }
  if (prefix_bits < 64 && (prefix >> prefix_bits) != 0) {
    throw ArgumentError("shard prefix has more bits than prefix_bits");
  }
  RawCounts counts(steps);
  counts.add_shard(steps, prefix_bits, prefix);
  SojournTable table(steps);
  counts.merge_into(table);
  return table;
}

SojournTable enumerate_counts(const EnumerationConfig& config) {
  validate(config);
  const int steps = config.steps;
  const int prefix_bits = std::bit_width(config.partitions) - 1;
  const std::uint64_t shards = config.partitions;

  unsigned workers = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  workers = std::max(1u, workers);
  if (workers > shards) {
    workers = static_cast<unsigned>(shards);
  }

  std::vector<RawCounts> per_worker(workers, RawCounts(steps));
  std::atomic<std::uint64_t> next{0};
  auto work = [&](unsigned w) {
    for (std::uint64_t s = next++; s < shards; s = next++) {
      per_worker[w].add_shard(steps, prefix_bits, s);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work, w);
    }
  }

  SojournTable table(steps);
  for (const auto& counts : per_worker) {
    counts.merge_into(table);
  }
  return table;
}

ExactCount count_paths_brute(int steps, int sojourn, PathClass c, int cap) {
  if (sojourn < 0 || sojourn > steps) {
    throw ArgumentError("sojourn value " + std::to_string(sojourn) + " outside [0, " +
                        std::to_string(steps) + "]");
  }
  EnumerationConfig config;
  config.steps = steps;
  config.cap = cap;
  return enumerate_counts(config).at(sojourn, c);
}

}  // namespace sojourn::enumerate
