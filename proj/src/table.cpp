#include "sojourn/table.hpp"

#include <string>
#include <utility>

#include "sojourn/errors.hpp"

namespace sojourn {

namespace {

std::size_t class_slot(PathClass c) { return static_cast<std::size_t>(c); }

}  // namespace

SojournTable::SojournTable(int steps) : steps_(steps) {
  if (steps < 0) {
    throw ArgumentError("table length must be nonnegative");
  }
  for (auto& column : cells_) {
    column.assign(static_cast<std::size_t>(steps) + 1, ExactCount(0));
  }
}

const ExactCount& SojournTable::at(int sojourn, PathClass c) const {
  if (sojourn < 0 || sojourn > steps_) {
    throw IndexError("sojourn value " + std::to_string(sojourn) + " outside [0, " +
                     std::to_string(steps_) + "]");
  }
  return cells_[class_slot(c)][static_cast<std::size_t>(sojourn)];
}

ExactCount& SojournTable::at(int sojourn, PathClass c) {
  return const_cast<ExactCount&>(std::as_const(*this).at(sojourn, c));
}

const ExactCount& SojournTable::at_half(int k, PathClass c) const {
  if (steps_ % 2 != 0) {
    throw ArgumentError("half-sojourn indexing needs an even number of steps");
  }
  return at(2 * k, c);
}

ExactCount SojournTable::total(PathClass c) const {
  ExactCount sum = 0;
  for (const auto& v : cells_[class_slot(c)]) {
    sum += v;
  }
  return sum;
}

SojournTable& SojournTable::operator+=(const SojournTable& other) {
  if (other.steps_ != steps_) {
    throw ArgumentError("cannot merge tables of different lengths");
  }
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    for (std::size_t m = 0; m < cells_[c].size(); ++m) {
      cells_[c][m] += other.cells_[c][m];
    }
  }
  return *this;
}

}  // namespace sojourn
