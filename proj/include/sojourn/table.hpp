#pragma once

#include <array>
#include <vector>

#include "sojourn/exact.hpp"
#include "sojourn/path.hpp"

namespace sojourn {

/// Exact path counts by sojourn value and class for paths of a fixed length.
///
/// Cells are stored by raw sojourn value m in [0, N]. For even N = 2n the
/// natural index is k = m / 2 (at_half); odd m never occurs there.
class SojournTable {
 public:
  explicit SojournTable(int steps = 0);

  int steps() const { return steps_; }
  /// n = N / 2 (floor for odd N).
  int half_steps() const { return steps_ / 2; }

  const ExactCount& at(int sojourn, PathClass c) const;
  ExactCount& at(int sojourn, PathClass c);

  /// Cell for sojourn 2k; requires even N and k in [0, n].
  const ExactCount& at_half(int k, PathClass c) const;

  /// Sum over all sojourn values for one class.
  ExactCount total(PathClass c) const;

  /// Entrywise addition; throws ArgumentError on length mismatch.
  SojournTable& operator+=(const SojournTable& other);

  friend bool operator==(const SojournTable&, const SojournTable&) = default;

 private:
  int steps_;
  std::array<std::vector<ExactCount>, 3> cells_;
};

}  // namespace sojourn
