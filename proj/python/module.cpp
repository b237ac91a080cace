#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sojourn/closed_form.hpp"
#include "sojourn/errors.hpp"
#include "sojourn/enumerate.hpp"
#include "sojourn/limit_laws.hpp"
#include "sojourn/monte_carlo.hpp"
#include "sojourn/path.hpp"

namespace py = pybind11;
using namespace sojourn;

namespace {

py::object to_py(const ExactCount& value) {
  const std::string text = value.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::object to_py(const ExactProbability& p) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(p.numerator()), to_py(p.denominator()));
}

StepSequence path_of(const std::vector<int>& steps) { return StepSequence::from_steps(steps); }

template <ExactCount (*F)(int, int)>
py::object counted(int n, int k) {
  return to_py(F(n, k));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sojourn times of the simple random walk: exact counts, limit laws, sampling";

  // Paths are plain lists of +1/-1 steps on the Python side.
  m.def("position", [](const std::vector<int>& s, int t) { return position(path_of(s), t); },
        py::arg("steps"), py::arg("t"));
  m.def("is_positive_side",
        [](const std::vector<int>& s, int t) { return is_positive_side(path_of(s), t); },
        py::arg("steps"), py::arg("t"));
  m.def("sojourn_time", [](const std::vector<int>& s) { return sojourn_time(path_of(s)); },
        py::arg("steps"));
  m.def(
      "classify",
      [](const std::vector<int>& s) {
        const ClassSet set = classify(path_of(s));
        std::vector<std::string> names;
        for (PathClass c : kAllClasses) {
          if (set.contains(c)) {
            names.emplace_back(to_string(c));
          }
        }
        return names;
      },
      py::arg("steps"));

  m.def(
      "enumerate_counts",
      [](int steps, std::uint64_t partitions, unsigned threads, int cap) {
        enumerate::EnumerationConfig config{steps, cap, partitions, threads};
        SojournTable table;
        {
          py::gil_scoped_release release;
          table = enumerate::enumerate_counts(config);
        }
        py::dict out;
        for (PathClass c : kAllClasses) {
          py::list column;
          for (int s = 0; s <= steps; ++s) {
            column.append(to_py(table.at(s, c)));
          }
          out[py::str(std::string(to_string(c)))] = column;
        }
        return out;
      },
      py::arg("steps"), py::arg("partitions") = 1, py::arg("threads") = 1,
      py::arg("cap") = enumerate::kDefaultCap,
      "Counts by raw sojourn value for every class, from exhaustive enumeration.");

  m.def("binomial", [](int a, int b) { return to_py(closed_form::binomial(a, b)); });
  m.def("count_all", [](int steps) { return to_py(closed_form::count_all(steps)); });
  m.def("count_bridges", [](int steps) { return to_py(closed_form::count_bridges(steps)); });
  m.def("count_by_sojourn", &counted<closed_form::count_by_sojourn>, py::arg("n"), py::arg("k"));
  m.def("count_bridges_by_sojourn", &counted<closed_form::count_bridges_by_sojourn>, py::arg("n"),
        py::arg("k"));
  m.def("count_positive_end_by_sojourn", &counted<closed_form::count_positive_end_by_sojourn>,
        py::arg("n"), py::arg("k"));
  m.def("count_positive_end_by_sojourn_sum",
        &counted<closed_form::count_positive_end_by_sojourn_sum>, py::arg("n"), py::arg("k"));
  m.def(
      "conditional_positive_probability",
      [](int n, int k) { return to_py(closed_form::conditional_positive_probability(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "sojourn_pmf",
      [](int n, const std::string& cls) {
        py::list out;
        for (const auto& p : closed_form::sojourn_pmf(n, parse_path_class(cls))) {
          out.append(to_py(p));
        }
        return out;
      },
      py::arg("n"), py::arg("path_class") = "all");

  m.def(
      "cdf", [](const std::string& law, double r) { return limits::DistributionSpec(limits::parse_law(law)).cdf(r); },
      py::arg("law"), py::arg("r"));
  m.def(
      "density",
      [](const std::string& law, double r) {
        return limits::DistributionSpec(limits::parse_law(law)).density(r);
      },
      py::arg("law"), py::arg("r"));
  m.def(
      "finite_n_ks_distance",
      [](int n, const std::string& cls, const std::string& law) {
        return limits::ks_distance(limits::finite_n_cdf(n, parse_path_class(cls)),
                                   limits::DistributionSpec(limits::parse_law(law)));
      },
      py::arg("n"), py::arg("path_class"), py::arg("law"));
  m.def(
      "ks_distance_counts",
      [](const std::vector<std::uint64_t>& counts, const std::string& law) {
        return limits::ks_distance(limits::empirical_cdf(counts),
                                   limits::DistributionSpec(limits::parse_law(law)));
      },
      py::arg("counts"), py::arg("law"));

  m.def(
      "simulate_sojourn",
      [](int n, std::uint64_t samples, std::uint64_t seed, const std::string& condition,
         unsigned threads) {
        monte_carlo::SamplerConfig config;
        config.half_steps = n;
        config.samples = samples;
        config.seed = seed;
        config.conditioning = parse_path_class(condition);
        config.threads = threads;
        monte_carlo::EmpiricalHistogram h;
        {
          py::gil_scoped_release release;
          h = monte_carlo::simulate_sojourn(config);
        }
        py::dict out;
        out["counts"] = h.counts;
        out["accepted"] = h.accepted;
        out["proposals"] = h.proposals;
        return out;
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("condition") = "all",
      py::arg("threads") = 1);
  m.def(
      "estimate_conditional_positive",
      [](int n, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
        std::map<int, monte_carlo::ConditionalEstimate> est;
        {
          py::gil_scoped_release release;
          est = monte_carlo::estimate_conditional_positive(n, samples, seed, threads);
        }
        py::dict out;
        for (const auto& [k, e] : est) {
          out[py::int_(k)] = py::make_tuple(e.estimate, e.standard_error, e.observations);
        }
        return out;
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1,
      "k -> (estimate, standard error, observations) for every observed k.");

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<DegenerateOutputError>(m, "DegenerateOutputError", PyExc_RuntimeError);
}
