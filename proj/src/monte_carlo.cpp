#include "sojourn/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "sojourn/errors.hpp"

namespace sojourn::monte_carlo {

EmpiricalHistogram& EmpiricalHistogram::operator+=(const EmpiricalHistogram& other) {
  if (other.half_steps != half_steps || other.conditioning != conditioning ||
      other.counts.size() != counts.size()) {
    throw ArgumentError("cannot merge histograms of different shape");
  }
  for (std::size_t k = 0; k < counts.size(); ++k) {
    counts[k] += other.counts[k];
  }
  accepted += other.accepted;
  proposals += other.proposals;
  return *this;
}

StepSequence sample_path(int n, Philox4x32& rng) {
  if (n < 0) {
    throw ArgumentError("sample_path: n must be nonnegative");
  }
  const int steps = 2 * n;
  std::vector<std::uint64_t> words((static_cast<std::size_t>(steps) + 63) / 64);
  for (auto& w : words) {
    w = rng();
  }
  return StepSequence::from_words(std::move(words), steps);
}

StepSequence sample_bridge(int n, Philox4x32& rng) {
  if (n < 0) {
    throw ArgumentError("sample_bridge: n must be nonnegative");
  }
  std::vector<int> steps(2 * static_cast<std::size_t>(n), -1);
  std::fill(steps.begin(), steps.begin() + n, 1);
  for (std::size_t i = steps.size(); i > 1; --i) {
    const auto j = uniform_below(rng, i);
    std::swap(steps[i - 1], steps[j]);
  }
  return StepSequence::from_steps(steps);
}

namespace {

unsigned resolve_threads(unsigned requested, std::uint64_t chunks) {
  unsigned t = requested == 0 ? std::thread::hardware_concurrency() : requested;
  t = std::max(1u, t);
  return static_cast<unsigned>(std::min<std::uint64_t>(t, chunks));
}

// Runs `body(chunk, first, count)` for every chunk, spreading chunks over
// worker threads. Each chunk writes only to its own slot.
template <class Body>
void for_each_chunk(std::uint64_t samples, std::uint64_t chunk_size, unsigned threads,
                    Body&& body) {
  const std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
  const unsigned workers = resolve_threads(threads, chunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t first = c * chunk_size;
      body(c, std::min(chunk_size, samples - first));
    }
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back(work);
  }
}

void require_sampling_args(int n, std::uint64_t samples, std::uint64_t chunk_size) {
  if (n < 1) {
    throw ArgumentError("half_steps must be at least 1");
  }
  if (samples < 1) {
    throw ArgumentError("samples must be at least 1");
  }
  if (chunk_size < 1) {
    throw ArgumentError("chunk_size must be at least 1");
  }
}

}  // namespace

EmpiricalHistogram simulate_sojourn(const SamplerConfig& config) {
  require_sampling_args(config.half_steps, config.samples, config.chunk_size);
  const int n = config.half_steps;

  EmpiricalHistogram empty;
  empty.half_steps = n;
  empty.conditioning = config.conditioning;
  empty.counts.assign(static_cast<std::size_t>(n) + 1, 0);

  const std::uint64_t chunks = (config.samples + config.chunk_size - 1) / config.chunk_size;
  std::vector<EmpiricalHistogram> partial(chunks, empty);

  for_each_chunk(config.samples, config.chunk_size, config.threads,
                 [&](std::uint64_t chunk, std::uint64_t count) {
                   Philox4x32 rng(config.seed, chunk);
                   EmpiricalHistogram& h = partial[chunk];
                   for (std::uint64_t i = 0; i < count; ++i) {
                     const StepSequence path = config.conditioning == PathClass::Bridge
                                                   ? sample_bridge(n, rng)
                                                   : sample_path(n, rng);
                     const PathSummary s = summarize(path);
                     ++h.proposals;
                     if (config.conditioning == PathClass::PositiveEnd && !s.positive_end) {
                       continue;
                     }
                     ++h.accepted;
                     ++h.counts[static_cast<std::size_t>(s.sojourn / 2)];
                   }
                 });

  EmpiricalHistogram total = empty;
  for (const auto& h : partial) {
    total += h;
  }
  if (total.accepted == 0) {
    throw DegenerateOutputError("no sample was accepted (" + std::to_string(total.proposals) +
                                " proposals)");
  }
  return total;
}

std::map<int, ConditionalEstimate> estimate_conditional_positive(int n, std::uint64_t samples,
                                                                 std::uint64_t seed,
                                                                 unsigned threads,
                                                                 std::uint64_t chunk_size) {
  require_sampling_args(n, samples, chunk_size);
  const auto cells = static_cast<std::size_t>(n) + 1;
  const std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
  // [chunk][k] -> (observed, positive end)
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> partial(
      chunks, std::vector<std::pair<std::uint64_t, std::uint64_t>>(cells));

  for_each_chunk(samples, chunk_size, threads, [&](std::uint64_t chunk, std::uint64_t count) {
    Philox4x32 rng(seed, chunk);
    auto& tally = partial[chunk];
    for (std::uint64_t i = 0; i < count; ++i) {
      const PathSummary s = summarize(sample_path(n, rng));
      auto& cell = tally[static_cast<std::size_t>(s.sojourn / 2)];
      ++cell.first;
      cell.second += s.positive_end;
    }
  });

  std::map<int, ConditionalEstimate> out;
  for (std::size_t k = 0; k < cells; ++k) {
    ConditionalEstimate e;
    for (const auto& tally : partial) {
      e.observations += tally[k].first;
      e.positive_end += tally[k].second;
    }
    if (e.observations == 0) {
      continue;
    }
    e.estimate = static_cast<double>(e.positive_end) / static_cast<double>(e.observations);
    e.standard_error =
        std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(e.observations));
    out.emplace(static_cast<int>(k), e);
  }
  return out;
}

}  // namespace sojourn::monte_carlo
