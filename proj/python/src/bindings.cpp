#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley/experiments.hpp"
#include "cayley/fluid.hpp"
#include "cayley/greedy.hpp"
#include "cayley/io.hpp"
#include "cayley/peeling.hpp"
#include "cayley/trees.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

// Trees cross the boundary as parent lists of vertices 1..n-1.
CayleyTree to_tree(const std::vector<Vertex>& parents) { return CayleyTree(parents.size() + 1, parents); }

std::vector<Vertex> from_tree(const CayleyTree& t) { return {t.parents().begin(), t.parents().end()}; }

py::dict outcome_dict(const GreedyOutcome& o) {
  py::dict d;
  d["G"] = o.G;
  d["theta"] = o.theta;
  d["E"] = o.E;
  d["active_set"] = o.active_set;
  return d;
}

py::dict law_dict(const std::map<std::size_t, mpq_class>& law) {
  py::dict d;
  for (const auto& [value, p] : law) d[py::int_(value)] = io::format_rational(p);
  return d;
}

py::dict report_dict(const stats::ExperimentReport& r) {
  py::dict d;
  d["statistic"] = r.statistic;
  d["n"] = r.n;
  d["replicates"] = r.replicates;
  d["seed"] = r.seed;
  d["observed"] = r.observed;
  d["target"] = r.target;
  d["lower"] = r.lower;
  d["upper"] = r.upper;
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Greedy independent sets on uniform Cayley trees";
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

  m.def(
      "sample_tree",
      [](std::size_t n, const std::string& method, std::uint64_t seed) {
        RandomSource rng(seed);
        if (method == "prufer") return from_tree(sample_uniform(n, rng));
        if (method == "pitman") return from_tree(pitman_sample(n, rng).relabeled_to_root_n());
        if (method == "aldous-broder") return from_tree(aldous_broder_sample(n, rng));
        throw std::invalid_argument("unknown method '" + method + "'");
      },
      py::arg("n"), py::arg("method") = "prufer", py::arg("seed") = kDefaultSeed,
      "Uniform Cayley tree as the parent list of vertices 1..n-1 (rooted at n).");

  m.def(
      "prufer_encode", [](const std::vector<Vertex>& parents) { return prufer_encode(to_tree(parents)).symbols; },
      py::arg("parents"));
  m.def(
      "prufer_decode",
      [](std::size_t n, const std::vector<Vertex>& symbols) { return from_tree(prufer_decode({n, symbols})); },
      py::arg("n"), py::arg("symbols"));

  m.def(
      "greedy_peeling", [](const std::vector<Vertex>& parents) { return outcome_dict(greedy_peeling(to_tree(parents))); },
      py::arg("parents"), "Greedy independent set built along the peeling exploration.");
  m.def(
      "greedy_reference",
      [](const std::vector<Vertex>& parents, const std::vector<Vertex>& order) {
        return greedy_reference(to_tree(parents), order);
      },
      py::arg("parents"), py::arg("order"));
  m.def(
      "simulate_chain",
      [](std::size_t n, std::uint64_t seed) {
        RandomSource rng(seed);
        return outcome_dict(simulate_status_chain(n, rng));
      },
      py::arg("n"), py::arg("seed") = kDefaultSeed);
  m.def(
      "max_independent_set", [](const std::vector<Vertex>& parents) { return max_independent_set(to_tree(parents)); },
      py::arg("parents"));
  m.def(
      "count_containing_trees",
      [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& attaches) {
        ForestState f(n);
        for (const auto& [v, w] : attaches) f.attach(v, w);
        return count_containing_trees(f).get_str();
      },
      py::arg("n"), py::arg("attaches"), "Number of trees containing the forest, as a decimal string.");

  m.def(
      "exact_law",
      [](std::size_t n) {
        const auto law = exact_chain_law(n);
        py::dict d;
        d["n"] = n;
        d["law"] = law_dict(law.law_of_G());
        d["complement"] = law_dict(law.law_of_complement());
        d["prob_E"] = io::format_rational(law.prob_E());
        return d;
      },
      py::arg("n"), "Exact laws of G and (n-G)+E as 'p/q' strings.");
  m.def(
      "verify_symmetry_exact",
      [](std::size_t n) {
        const auto check = verify_symmetry_exact(n);
        py::dict d;
        d["tv"] = io::format_rational(check.tv);
        d["prob_E"] = io::format_rational(check.prob_E);
        d["cross_checked"] = check.cross_checked;
        return d;
      },
      py::arg("n"));

  m.def("fluid_constants", [] {
    const auto c = fluid::clt_constants();
    py::dict d;
    d["t_star"] = fluid::t_star();
    d["M"] = fluid::covariance_m();
    d["varG"] = c.var_G;
    d["varTheta"] = c.var_theta;
    d["covAB"] = c.cov_AB;
    return d;
  });
  m.def("centered_covariance", [] { return fluid::centered_covariance_m(); });

  m.def(
      "clt_experiment",
      [](std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned jobs) {
        std::vector<stats::ExperimentReport> reports;
        {
          py::gil_scoped_release release;
          reports = stats::clt_experiment(n, replicates, seed, jobs);
        }
        py::list out;
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("n"), py::arg("replicates"), py::arg("seed") = kDefaultSeed, py::arg("jobs") = 1);
}
