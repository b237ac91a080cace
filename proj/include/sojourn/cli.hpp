#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sojourn/exact.hpp"

namespace sojourn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// The formulas `verify` checks. Tests substitute broken ones to confirm a
/// mismatch is reported.
struct Formulas {
  std::function<ExactCount(int, int)> by_sojourn;
  std::function<ExactCount(int, int)> bridges_by_sojourn;
  std::function<ExactCount(int, int)> positive_end_by_sojourn;
  std::function<ExactCount(int, int)> positive_end_by_sojourn_sum;

  static Formulas standard();
};

struct VerifyOptions {
  int max_steps = 16;
  int identity_max_n = 200;
  int cap = 28;
  unsigned threads = 1;
  Formulas formulas = Formulas::standard();
};

/// Oracle vs closed form for every even N <= max_steps, then the summation
/// identity for n <= identity_max_n. Returns an exit code.
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

/// Full command-line entry point; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sojourn::cli
