#include "sojourn/cli.hpp"

#include <bit>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sojourn/closed_form.hpp"
#include "sojourn/enumerate.hpp"
#include "sojourn/errors.hpp"
#include "sojourn/limit_laws.hpp"
#include "sojourn/monte_carlo.hpp"
#include "sojourn/records.hpp"

namespace sojourn::cli {

namespace {

// Thrown by command bodies to report a bad argument combination that CLI11
// cannot express; mapped to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int half_steps_of(int steps) {
  if (steps < 2 || steps % 2 != 0) {
    throw UsageError("--steps must be an even number >= 2, got " + std::to_string(steps));
  }
  return steps / 2;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct TableOutput {
  records::Format format = records::Format::Csv;
  std::string path;

  void emit(std::ostream& out, const std::vector<records::OutputRecord>& rows,
            const std::string& index_name = "k") const {
    if (path.empty()) {
      records::write(out, format, rows, index_name);
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw UsageError("cannot open '" + path + "' for writing");
    }
    records::write(file, format, rows, index_name);
  }
};

void add_output_options(CLI::App& cmd, std::string& format, std::string& path) {
  cmd.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd.add_option("--out", path, "Write to this file instead of stdout");
}

const CLI::Validator& class_names() {
  static const CLI::Validator v = CLI::IsMember({"all", "bridge", "positive-end"});
  return v;
}

const CLI::Validator& law_names() {
  static const CLI::Validator v = CLI::IsMember({"arcsine", "mp-positive", "mp-negative"});
  return v;
}

records::OutputRecord count_row(int k, const ExactCount& count,
                                const std::optional<ExactCount>& total, PathClass c,
                                const char* source) {
  records::OutputRecord row;
  row.index = std::to_string(k);
  row.count = to_decimal_string(count);
  if (total && *total > 0) {
    row.probability = format_decimal(count, *total);
  }
  row.path_class = std::string(to_string(c));
  row.source = source;
  return row;
}

// closed ---------------------------------------------------------------------

int cmd_closed(int steps, PathClass c, const TableOutput& output, std::ostream& out) {
  const int n = half_steps_of(steps);
  const ExactCount total = closed_form::class_total(n, c);
  std::vector<records::OutputRecord> rows;
  for (int k = 0; k <= n; ++k) {
    rows.push_back(count_row(k, closed_form::count_by_class(n, k, c), total, c, "closed"));
  }
  output.emit(out, rows);
  return kExitOk;
}

// enumerate ------------------------------------------------------------------

std::uint64_t auto_partitions(int steps, unsigned threads) {
  std::uint64_t p = std::bit_ceil(std::uint64_t{threads} * 4);
  while (p > 1 && std::bit_width(p) - 1 > static_cast<unsigned>(steps)) {
    p >>= 1;
  }
  return p;
}

int cmd_enumerate(int steps, PathClass c, int cap, std::uint64_t partitions, unsigned threads,
                  const TableOutput& output, std::ostream& out) {
  enumerate::EnumerationConfig config;
  config.steps = steps;
  config.cap = cap;
  config.threads = threads;
  config.partitions = partitions == 0 ? auto_partitions(steps, threads) : partitions;
  const SojournTable table = enumerate::enumerate_counts(config);
  const ExactCount total = table.total(c);
  const bool even = steps % 2 == 0;
  std::vector<records::OutputRecord> rows;
  for (int m = 0; m <= steps; m += even ? 2 : 1) {
    rows.push_back(count_row(even ? m / 2 : m, table.at(m, c), total, c, "enumerated"));
  }
  output.emit(out, rows);
  return kExitOk;
}

// condprob -------------------------------------------------------------------

int cmd_condprob(int steps, int sojourn, int digits, std::ostream& out) {
  const int n = half_steps_of(steps);
  if (sojourn < 0 || sojourn > steps || sojourn % 2 != 0) {
    throw UsageError("--sojourn must be an even number in [0, " + std::to_string(steps) +
                     "], got " + std::to_string(sojourn));
  }
  const ExactProbability p = closed_form::conditional_positive_probability(n, sojourn / 2);
  const std::string fraction = p.to_fraction_string();
  const std::string decimal = p.to_decimal(digits);
  out << fraction;
  if (fraction != decimal) {
    out << " = " << decimal;
  }
  out << '\n';
  return kExitOk;
}

// simulate -------------------------------------------------------------------

int cmd_simulate(int steps, std::uint64_t samples, std::uint64_t seed, PathClass c,
                 unsigned threads, const TableOutput& output, std::ostream& out) {
  if (samples < 1) {
    throw UsageError("--samples must be at least 1");
  }
  monte_carlo::SamplerConfig config;
  config.half_steps = half_steps_of(steps);
  config.samples = samples;
  config.seed = seed;
  config.conditioning = c;
  config.threads = threads;
  const auto hist = monte_carlo::simulate_sojourn(config);
  const ExactCount accepted = hist.accepted;
  std::vector<records::OutputRecord> rows;
  for (std::size_t k = 0; k < hist.counts.size(); ++k) {
    rows.push_back(
        count_row(static_cast<int>(k), ExactCount(hist.counts[k]), accepted, c, "simulated"));
  }
  output.emit(out, rows);
  return kExitOk;
}

// limit / ks -----------------------------------------------------------------

int cmd_limit(limits::Law law, int points, const TableOutput& output, std::ostream& out) {
  if (points < 2) {
    throw UsageError("--points must be at least 2");
  }
  const limits::DistributionSpec spec(law);
  std::vector<records::OutputRecord> rows;
  for (int i = 0; i < points; ++i) {
    records::OutputRecord row;
    row.index = format_decimal(ExactCount(i), ExactCount(points - 1));
    const double r = static_cast<double>(i) / (points - 1);
    row.probability = format_decimal(spec.cdf(r));
    row.path_class = std::string(spec.name());
    row.source = "limit";
    rows.push_back(std::move(row));
  }
  output.emit(out, rows, "r");
  return kExitOk;
}

std::vector<ExactCount> counts_from_records(const std::vector<records::OutputRecord>& rows) {
  std::vector<ExactCount> counts;
  for (const auto& row : rows) {
    if (!row.count) {
      throw UsageError("input row k=" + row.index + " has no count");
    }
    std::size_t k = 0;
    try {
      k = static_cast<std::size_t>(std::stoul(row.index));
    } catch (const std::exception&) {
      throw UsageError("input index '" + row.index + "' is not a sojourn cell k");
    }
    if (counts.size() <= k) {
      counts.resize(k + 1, ExactCount(0));
    }
    counts[k] += parse_exact_count(*row.count);
  }
  return counts;
}

int cmd_ks(limits::Law law, const std::string& input, std::optional<double> threshold,
           std::ostream& out, std::ostream& err) {
  std::vector<records::OutputRecord> rows;
  if (input == "-") {
    rows = records::read_any(std::cin);
  } else {
    std::ifstream file(input, std::ios::binary);
    if (!file) {
      throw UsageError("cannot open '" + input + "'");
    }
    rows = records::read_any(file);
  }
  const auto counts = counts_from_records(rows);
  const double d = limits::ks_distance(limits::empirical_cdf(counts), limits::DistributionSpec(law));
  out << format_decimal(d) << '\n';
  if (threshold && d > *threshold) {
    err << "KS distance " << format_decimal(d) << " exceeds " << format_decimal(*threshold)
        << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

Formulas Formulas::standard() {
  return Formulas{
      .by_sojourn = closed_form::count_by_sojourn,
      .bridges_by_sojourn = closed_form::count_bridges_by_sojourn,
      .positive_end_by_sojourn = closed_form::count_positive_end_by_sojourn,
      .positive_end_by_sojourn_sum = closed_form::count_positive_end_by_sojourn_sum,
  };
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  if (options.max_steps < 2) {
    err << "verify: --max-steps must be at least 2\n";
    return kExitUsage;
  }
  if (options.max_steps > options.cap) {
    err << "verify: --max-steps " << options.max_steps << " exceeds the enumeration cap "
        << options.cap << '\n';
    return kExitUsage;
  }

  std::size_t checked = 0;
  std::size_t failures = 0;
  auto compare = [&](int steps, int k, std::string_view what, const ExactCount& expected,
                     const std::function<ExactCount()>& actual) {
    ++checked;
    std::string got;
    try {
      const ExactCount value = actual();
      if (value == expected) {
        return;
      }
      got = to_decimal_string(value);
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
    }
    ++failures;
    out << "MISMATCH N=" << steps << " k=" << k << " class=" << what
        << " expected=" << to_decimal_string(expected) << " actual=" << got << '\n';
  };

  const Formulas& f = options.formulas;
  for (int steps = 2; steps <= options.max_steps; steps += 2) {
    enumerate::EnumerationConfig config;
    config.steps = steps;
    config.cap = options.cap;
    config.threads = options.threads;
    config.partitions = auto_partitions(steps, options.threads);
    const SojournTable table = enumerate::enumerate_counts(config);
    const int n = steps / 2;
    const std::size_t before = failures;
    for (int m = 1; m <= steps; m += 2) {
      for (PathClass c : kAllClasses) {
        compare(steps, m, "odd-sojourn-" + std::string(to_string(c)), 0,
                [&] { return table.at(m, c); });
      }
    }
    for (int k = 0; k <= n; ++k) {
      compare(steps, k, "all", table.at_half(k, PathClass::All), [&] { return f.by_sojourn(n, k); });
      compare(steps, k, "bridge", table.at_half(k, PathClass::Bridge),
              [&] { return f.bridges_by_sojourn(n, k); });
      compare(steps, k, "positive-end", table.at_half(k, PathClass::PositiveEnd),
              [&] { return f.positive_end_by_sojourn(n, k); });
      if (k >= 1) {
        compare(steps, k, "positive-end-sum", table.at_half(k, PathClass::PositiveEnd),
                [&] { return f.positive_end_by_sojourn_sum(n, k); });
      }
    }
    out << "N=" << steps << ": oracle vs closed forms " << (failures == before ? "ok" : "FAILED")
        << '\n';
  }

  const std::size_t before_identity = failures;
  std::size_t identity_cells = 0;
  for (int n = 2; n <= options.identity_max_n; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      ExactCount product;
      try {
        product = f.positive_end_by_sojourn(n, k);
      } catch (const std::exception& e) {
        ++failures;
        out << "MISMATCH n=" << n << " k=" << k << " product formula error: " << e.what() << '\n';
        continue;
      }
      ++identity_cells;
      compare(2 * n, k, "identity", product, [&] { return f.positive_end_by_sojourn_sum(n, k); });
    }
  }
  out << "summation identity, n <= " << options.identity_max_n << " (" << identity_cells
      << " cells): " << (failures == before_identity ? "ok" : "FAILED") << '\n';
  out << checked << " checks, " << failures << " mismatches\n";
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, limit laws and simulation for random-walk sojourn times"};
  app.name("sojourn");
  app.require_subcommand(1);

  int result = kExitOk;
  std::function<int()> action;

  unsigned threads = default_threads();
  int steps = 0;
  std::string class_name = "all";
  std::string format = "csv";
  std::string out_path;

  auto* closed = app.add_subcommand("closed", "Closed-form counts by sojourn time");
  closed->add_option("--steps", steps, "Number of steps N (even)")->required();
  closed->add_option("--class", class_name, "Path class")->check(class_names())->capture_default_str();
  add_output_options(*closed, format, out_path);
  closed->callback([&] {
    action = [&] {
      return cmd_closed(steps, parse_path_class(class_name),
                        {records::parse_format(format), out_path}, out);
    };
  });

  int cap = enumerate::cap_from_environment();
  std::uint64_t partitions = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Brute-force counts over all 2^N paths");
  enumerate_cmd->add_option("--steps", steps, "Number of steps N")->required();
  enumerate_cmd->add_option("--class", class_name, "Path class")->check(class_names())->capture_default_str();
  enumerate_cmd->add_option("--cap", cap, "Largest N allowed (default from SOJOURN_ENUM_CAP or 28)");
  enumerate_cmd->add_option("--partitions", partitions, "Prefix shards, a power of two (0 = auto)");
  enumerate_cmd->add_option("--threads", threads, "Worker threads");
  add_output_options(*enumerate_cmd, format, out_path);
  enumerate_cmd->callback([&] {
    action = [&] {
      return cmd_enumerate(steps, parse_path_class(class_name), cap, partitions, threads,
                           {records::parse_format(format), out_path}, out);
    };
  });

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Check every closed form against enumeration");
  verify->add_option("--max-steps", verify_options.max_steps, "Largest N to enumerate")->capture_default_str();
  verify->add_option("--identity-max-n", verify_options.identity_max_n,
                     "Largest n for the summation identity sweep")
      ->capture_default_str();
  verify->add_option("--cap", cap, "Largest N allowed (default from SOJOURN_ENUM_CAP or 28)");
  verify->add_option("--threads", threads, "Worker threads");
  verify->callback([&] {
    action = [&] {
      verify_options.cap = cap;
      verify_options.threads = threads;
      return run_verify(verify_options, out, err);
    };
  });

  int sojourn_value = 0;
  int digits = kDefaultSignificantDigits;
  auto* condprob = app.add_subcommand("condprob", "P(positive end | sojourn time), exactly");
  condprob->add_option("--steps", steps, "Number of steps N (even)")->required();
  condprob->add_option("--sojourn", sojourn_value, "Sojourn time T (even)")->required();
  condprob->add_option("--digits", digits, "Significant digits of the decimal form")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();
  condprob->callback([&] { action = [&] { return cmd_condprob(steps, sojourn_value, digits, out); }; });

  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo histogram of T/2");
  simulate->add_option("--steps", steps, "Number of steps N (even)")->required();
  simulate->add_option("--samples", samples, "Number of sampled paths (proposals)")->required();
  simulate->add_option("--seed", seed, "Generator seed")->required();
  simulate->add_option("--condition", class_name, "Conditioning class")->check(class_names())->capture_default_str();
  simulate->add_option("--threads", threads, "Worker threads");
  add_output_options(*simulate, format, out_path);
  simulate->callback([&] {
    action = [&] {
      if (samples < 1) {
        throw UsageError("--samples must be at least 1");
      }
      return cmd_simulate(steps, static_cast<std::uint64_t>(samples), seed,
                          parse_path_class(class_name), threads,
                          {records::parse_format(format), out_path}, out);
    };
  });

  std::string law_name;
  int points = 101;
  auto* limit = app.add_subcommand("limit", "Tabulate a limit-law CDF on [0, 1]");
  limit->add_option("--law", law_name, "Limit law")->check(law_names())->required();
  limit->add_option("--points", points, "Number of equally spaced points")->capture_default_str();
  add_output_options(*limit, format, out_path);
  limit->callback([&] {
    action = [&] {
      return cmd_limit(limits::parse_law(law_name), points,
                       {records::parse_format(format), out_path}, out);
    };
  });

  std::string input;
  std::optional<double> threshold;
  auto* ks = app.add_subcommand("ks", "KS distance between a count table and a limit law");
  ks->add_option("--law", law_name, "Limit law")->check(law_names())->required();
  ks->add_option("--input", input, "CSV or JSON table from closed/enumerate/simulate ('-' = stdin)")
      ->required();
  ks->add_option("--threshold", threshold, "Exit 1 if the distance exceeds this");
  ks->callback([&] {
    action = [&] { return cmd_ks(limits::parse_law(law_name), input, threshold, out, err); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    result = action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sojourn::cli
