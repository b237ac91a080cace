#include "sojourn/path.hpp"

#include <string>

#include "sojourn/errors.hpp"

namespace sojourn {

std::string_view to_string(PathClass c) {
  switch (c) {
    case PathClass::All:
      return "all";
    case PathClass::Bridge:
      return "bridge";
    case PathClass::PositiveEnd:
      return "positive-end";
  }
  return "?";
}

PathClass parse_path_class(std::string_view name) {
  for (PathClass c : kAllClasses) {
    if (to_string(c) == name) {
      return c;
    }
  }
  throw ArgumentError("unknown path class '" + std::string(name) +
                      "' (expected all, bridge or positive-end)");
}

bool ClassSet::contains(PathClass c) const {
  switch (c) {
    case PathClass::All:
      return all;
    case PathClass::Bridge:
      return bridge;
    case PathClass::PositiveEnd:
      return positive_end;
  }
  return false;
}

StepSequence StepSequence::from_steps(std::span<const int> steps) {
  StepSequence path;
  path.length_ = static_cast<int>(steps.size());
  path.words_.assign((steps.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == 1) {
      path.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    } else if (steps[i] != -1) {
      throw ArgumentError("step " + std::to_string(i + 1) + " is " +
                          std::to_string(steps[i]) + ", expected -1 or +1");
    }
  }
  return path;
}

StepSequence StepSequence::from_steps(std::initializer_list<int> steps) {
  return from_steps(std::span<const int>(steps.begin(), steps.size()));
}

StepSequence StepSequence::from_word(std::uint64_t bits, int length) {
  if (length < 0 || length > 64) {
    throw ArgumentError("word length must be in [0, 64]");
  }
  return from_words({bits}, length);
}

StepSequence StepSequence::from_words(std::vector<std::uint64_t> words, int length) {
  if (length < 0 || static_cast<std::size_t>(length) > words.size() * 64) {
    throw ArgumentError("not enough words for the requested length");
  }
  StepSequence path;
  path.length_ = length;
  words.resize((static_cast<std::size_t>(length) + 63) / 64);
  if (length % 64 != 0) {
    words.back() &= (std::uint64_t{1} << (length % 64)) - 1;
  }
  path.words_ = std::move(words);
  return path;
}

int StepSequence::step(int t) const {
  if (t < 1 || t > length_) {
    throw IndexError("step index " + std::to_string(t) + " outside [1, " +
                     std::to_string(length_) + "]");
  }
  const auto i = static_cast<std::size_t>(t - 1);
  return ((words_[i / 64] >> (i % 64)) & 1u) ? 1 : -1;
}

std::vector<int> StepSequence::steps() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int t = 1; t <= length_; ++t) {
    out.push_back(step(t));
  }
  return out;
}

StepSequence StepSequence::reflected() const {
  std::vector<std::uint64_t> flipped(words_);
  for (auto& w : flipped) {
    w = ~w;
  }
  return from_words(std::move(flipped), length_);
}

int position(const StepSequence& path, int t) {
  if (t < 0 || t > path.length()) {
    throw IndexError("time " + std::to_string(t) + " outside [0, " +
                     std::to_string(path.length()) + "]");
  }
  int x = 0;
  for (int s = 1; s <= t; ++s) {
    x += path.step(s);
  }
  return x;
}

namespace {

void require_positive_time(const StepSequence& path, int t) {
  if (t < 1 || t > path.length()) {
    throw IndexError("side is defined for t in [1, " + std::to_string(path.length()) +
                     "], got " + std::to_string(t));
  }
}

}  // namespace

bool is_positive_side(const StepSequence& path, int t) {
  require_positive_time(path, t);
  const int before = position(path, t - 1);
  return before >= 0 && before + path.step(t) >= 0;
}

bool is_negative_side(const StepSequence& path, int t) {
  require_positive_time(path, t);
  const int before = position(path, t - 1);
  return before <= 0 && before + path.step(t) <= 0;
}

PathSummary summarize(const StepSequence& path) {
  PathSummary s;
  int x = 0;
  int prev = 0;
  const auto words = path.words();
  for (int i = 0; i < path.length(); ++i) {
    prev = x;
    x += ((words[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u) ? 1 : -1;
    s.sojourn += (x >= 0 && prev >= 0);
  }
  s.final_position = x;
  s.bridge = (x == 0);
  s.positive_end = path.length() > 0 && x >= 0 && prev >= 0;
  s.negative_end = path.length() > 0 && x <= 0 && prev <= 0;
  return s;
}

int sojourn_time(const StepSequence& path) { return summarize(path).sojourn; }

ClassSet classify(const StepSequence& path) {
  if (path.length() == 0) {
    throw ArgumentError("cannot classify the empty path");
  }
  const PathSummary s = summarize(path);
  return ClassSet{.all = true, .bridge = s.bridge, .positive_end = s.positive_end};
}

}  // namespace sojourn
