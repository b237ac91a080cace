#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace sojourn {

/// Path classes. Every path is in All; Bridge means X(N) = 0; PositiveEnd
/// means the path is on the positive side at t = N.
enum class PathClass { All, Bridge, PositiveEnd };

inline constexpr PathClass kAllClasses[] = {PathClass::All, PathClass::Bridge,
                                            PathClass::PositiveEnd};

std::string_view to_string(PathClass c);
/// Accepts "all", "bridge", "positive-end". Throws ArgumentError otherwise.
PathClass parse_path_class(std::string_view name);

/// Set of classes a path belongs to.
struct ClassSet {
  bool all = true;
  bool bridge = false;
  bool positive_end = false;

  bool contains(PathClass c) const;
  friend bool operator==(const ClassSet&, const ClassSet&) = default;
};

/// A walk path with steps in {-1, +1}, bit-packed one bit per step
/// (bit i of the sequence is step i+1, 1 = up). X(0) = 0 implicitly.
class StepSequence {
 public:
  StepSequence() = default;

  /// Throws ArgumentError unless every step is -1 or +1.
  static StepSequence from_steps(std::span<const int> steps);
  static StepSequence from_steps(std::initializer_list<int> steps);
  /// Low `length` bits of `bits`; length <= 64.
  static StepSequence from_word(std::uint64_t bits, int length);
  /// Packed words, LSB first; bits past `length` are ignored.
  static StepSequence from_words(std::vector<std::uint64_t> words, int length);

  int length() const { return length_; }
  /// Step at 1-based time t, i.e. X(t) - X(t-1).
  int step(int t) const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<int> steps() const;

  /// Every step negated.
  StepSequence reflected() const;

  friend bool operator==(const StepSequence&, const StepSequence&) = default;

 private:
  std::vector<std::uint64_t> words_;
  int length_ = 0;
};

/// X(t) for t in [0, N]. Throws IndexError outside that range.
int position(const StepSequence& path, int t);

/// X(t) >= 0 and X(t-1) >= 0, for t in [1, N]. Throws IndexError otherwise
/// (including t = 0).
bool is_positive_side(const StepSequence& path, int t);

/// X(t) <= 0 and X(t-1) <= 0, for t in [1, N]; the mirror of is_positive_side.
bool is_negative_side(const StepSequence& path, int t);

/// T_N: number of t in [1, N] at which the path is on the positive side.
int sojourn_time(const StepSequence& path);

/// Throws ArgumentError for the empty path.
ClassSet classify(const StepSequence& path);

/// Everything the enumerator and sampler need from one left-to-right pass.
struct PathSummary {
  int sojourn = 0;
  int final_position = 0;
  bool bridge = false;
  bool positive_end = false;
  bool negative_end = false;
};

PathSummary summarize(const StepSequence& path);

/// Single-word kernel behind summarize(); `length` in [1, 64].
inline PathSummary summarize_word(std::uint64_t bits, int length) {
  PathSummary s;
  int x = 0;
  int prev = 0;
  for (int i = 0; i < length; ++i) {
    prev = x;
    x += ((bits >> i) & 1u) ? 1 : -1;
    s.sojourn += (x >= 0 && prev >= 0);
  }
  s.final_position = x;
  s.bridge = (x == 0);
  s.positive_end = length > 0 && x >= 0 && prev >= 0;
  s.negative_end = length > 0 && x <= 0 && prev <= 0;
  return s;
}

}  // namespace sojourn
