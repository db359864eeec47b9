#include "cayley/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <stdexcept>

#include <CLI11.hpp>

#include "cayley/experiments.hpp"
#include "cayley/fluid.hpp"
#include "cayley/greedy.hpp"
#include "cayley/io.hpp"
#include "cayley/parallel.hpp"
#include "cayley/peeling.hpp"
#include "cayley/trees.hpp"

namespace cayley::cli {

namespace {

struct Extras {
  std::string method = "prufer";
  std::string alg = "ab";
  std::string fixed_tree;
  std::string tree_file;
  bool markov = false;
  bool prufer = false;
  bool control = false;
  std::size_t bootstrap = 200;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::vector<CayleyTree> load_trees(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tree file " + path);
  auto trees = io::read_trees(in);
  if (trees.empty()) throw std::invalid_argument("no tree in " + path);
  return trees;
}

void require_n(const RunConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("--n must be >= 1");
}

int emit_reports(const std::vector<stats::ExperimentReport>& reports, const RunConfig& cfg, std::ostream& out) {
  bool all_pass = true;
  if (cfg.format == "csv") io::write_report_csv_header(out);
  for (const auto& r : reports) {
    if (cfg.format == "csv") {
      io::write_report_csv_row(out, r);
    } else {
      out << io::report_json(r).dump() << '\n';
    }
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitFailedCheck;
}

int sample_tree(const RunConfig& cfg, const Extras& x, std::ostream& out) {
  require_n(cfg);
  const RandomSource master(cfg.seed);
  for (std::size_t i = 0; i < cfg.replicates; ++i) {
    RandomSource rng = master.child(i);
    if (x.method == "prufer") {
      out << io::format_tree(sample_uniform(cfg.n, rng)) << '\n';
    } else if (x.method == "pitman") {
      out << io::format_tree(pitman_sample(cfg.n, rng).relabeled_to_root_n()) << '\n';
    } else {
      out << io::format_tree(cfg.n == 1 ? CayleyTree() : aldous_broder_sample(cfg.n, rng)) << '\n';
    }
  }
  return kExitOk;
}

PeelingAlgorithm make_algorithm(const std::string& name, const RandomSource& master) {
  if (name == "unif") return unif_algorithm(master.child(0));
  if (name == "greedy") return greedy_algorithm();
  return ab_algorithm();
}

int peel(const RunConfig& cfg, const Extras& x, std::ostream& out) {
  const RandomSource master(cfg.seed);
  const auto alg = make_algorithm(x.alg, master);
  if (x.markov) {
    require_n(cfg);
    RandomSource rng = master.child(1);
    const auto run = peel_markov(cfg.n, alg, rng);
    io::write_step_trace(out, run.steps);
  } else {
    const auto trees = load_trees(x.fixed_tree);
    io::write_step_trace(out, peel_fixed_tree(trees.front(), alg));
  }
  return kExitOk;
}

int greedy(const RunConfig& cfg, const Extras& x, std::ostream& out) {
  std::vector<CayleyTree> trees;
  if (!x.tree_file.empty()) {
    trees = load_trees(x.tree_file);
  } else {
    require_n(cfg);
    trees = run_replicates<CayleyTree>(cfg.replicates, cfg.seed, cfg.jobs,
                                       [&](std::size_t, RandomSource& rng) { return sample_uniform(cfg.n, rng); });
  }
  if (cfg.format == "csv") io::write_outcome_header(out);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const auto o = greedy_peeling(trees[i]);
    if (cfg.format == "csv") {
      io::write_outcome_row(out, {trees[i].size(), i, o.G, o.theta, o.E, std::nullopt, std::nullopt});
    } else {
      nlohmann::ordered_json row;
      row["n"] = trees[i].size();
      row["replicate"] = i;
      row["G"] = o.G;
      row["theta"] = o.theta;
      row["E"] = o.E ? 1 : 0;
      row["active_set"] = o.active_set;
      out << row.dump() << '\n';
    }
  }
  return kExitOk;
}

int chain(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg);
  const auto outcomes = run_replicates<GreedyOutcome>(
      cfg.replicates, cfg.seed, cfg.jobs,
      [&](std::size_t, RandomSource& rng) { return simulate_status_chain(cfg.n, rng); });
  if (cfg.format == "csv") io::write_outcome_header(out);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (cfg.format == "csv") {
      io::write_outcome_row(out, {cfg.n, i, o.G, o.theta, o.E, std::nullopt, std::nullopt});
    } else {
      nlohmann::ordered_json row{{"n", cfg.n}, {"replicate", i}, {"G", o.G}, {"theta", o.theta}, {"E", o.E ? 1 : 0}};
      out << row.dump() << '\n';
    }
  }
  return kExitOk;
}

int exact_law(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg);
  out << io::chain_law_json(exact_chain_law(cfg.n)).dump(2) << '\n';
  return kExitOk;
}

int verify_symmetry(const RunConfig& cfg, const Extras& x, std::ostream& out) {
  require_n(cfg);
  if (cfg.mc) {
    stats::SymmetryMcOptions options;
    options.bootstrap_rounds = x.bootstrap;
    options.control = x.control;
    return emit_reports({stats::symmetry_experiment_mc(cfg.n, cfg.replicates, cfg.seed, cfg.jobs, options)}, cfg, out);
  }
  const auto check = verify_symmetry_exact(cfg.n);
  const bool pass = check.tv == 0;
  if (cfg.format == "csv") {
    out << "n,tv,prob_E,cross_checked,pass\n"
        << cfg.n << ',' << io::format_rational(check.tv) << ',' << io::format_rational(check.prob_E) << ','
        << (check.cross_checked ? 1 : 0) << ',' << (pass ? 1 : 0) << '\n';
  } else {
    nlohmann::ordered_json j;
    j["n"] = cfg.n;
    j["tv"] = io::format_rational(check.tv);
    j["prob_E"] = io::format_rational(check.prob_E);
    j["prob_E_value"] = check.prob_E.get_d();
    j["cross_checked"] = check.cross_checked;
    j["pass"] = pass;
    out << j.dump() << '\n';
  }
  return pass ? kExitOk : kExitFailedCheck;
}

int clt(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg);
  return emit_reports(stats::clt_experiment(cfg.n, cfg.replicates, cfg.seed, cfg.jobs), cfg, out);
}

int fluid_cmd(std::ostream& out) {
  out << io::fluid_json().dump(2) << '\n';
  return kExitOk;
}

// Shared by `matching` and `max-is`: per-tree CSV rows or a summary report.
int tree_statistic(const RunConfig& cfg, bool matching, std::ostream& out) {
  require_n(cfg);
  if (cfg.n < 2) throw std::invalid_argument("--n must be >= 2");
  if (cfg.format == "json") {
    const auto reports = stats::tree_ratio_experiment(cfg.n, cfg.replicates, cfg.seed, cfg.jobs);
    return emit_reports({reports[matching ? 1 : 2]}, cfg, out);
  }
  const auto values = run_replicates<std::size_t>(cfg.replicates, cfg.seed, cfg.jobs,
                                                  [&](std::size_t, RandomSource& rng) {
                                                    const auto tree = sample_uniform(cfg.n, rng);
                                                    const auto order = random_order(cfg.n - 1, rng);
                                                    return matching ? greedy_matching(tree, order)
                                                                    : max_independent_set(tree);
                                                  });
  io::write_outcome_header(out);
  for (std::size_t i = 0; i < values.size(); ++i) {
    io::OutcomeRow row{cfg.n, i, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    (matching ? row.M : row.max_is) = values[i];
    io::write_outcome_row(out, row);
  }
  return kExitOk;
}

int enumerate(const RunConfig& cfg, const Extras& x, std::ostream& out) {
  require_n(cfg);
  for_each_cayley_tree(cfg.n, [&](const CayleyTree& t) {
    if (x.prufer && t.size() >= 2) {
      out << io::format_prufer(prufer_encode(t)) << '\n';
    } else {
      out << io::format_tree(t) << '\n';
    }
  });
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Extras x;
  CLI::App app{"Greedy independent sets and peeling explorations of uniform Cayley trees", "cayley"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool randomized) {
    sub->add_option("--n", cfg.n, "Number of vertices");
    sub->add_option("-o,--output", cfg.output, "Write results to this file instead of stdout");
    if (randomized) {
      sub->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
      sub->add_option("--replicates", cfg.replicates, "Number of replicates")->check(CLI::PositiveNumber);
      sub->add_option("--jobs", cfg.jobs, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
    }
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* sample = app.add_subcommand("sample-tree", "Sample uniform Cayley trees");
  add_common(sample, true);
  sample->add_option("--count", cfg.replicates, "Number of trees")->check(CLI::PositiveNumber);
  sample->add_option("--method", x.method)->check(CLI::IsMember({"prufer", "pitman", "aldous-broder"}));

  auto* peel_cmd = app.add_subcommand("peel", "Peeling exploration step trace (CSV)");
  add_common(peel_cmd, true);
  peel_cmd->add_option("--alg", x.alg)->check(CLI::IsMember({"unif", "ab", "greedy"}));
  auto* fixed = peel_cmd->add_option("--fixed-tree", x.fixed_tree, "File with a tree line")->check(CLI::ExistingFile);
  auto* markov = peel_cmd->add_flag("--markov", x.markov, "Sample the exploration of a uniform tree");
  fixed->excludes(markov);
  markov->excludes(fixed);

  auto* greedy_cmd = app.add_subcommand("greedy", "Greedy independent set outcome per tree");
  add_common(greedy_cmd, true);
  add_format(greedy_cmd);
  greedy_cmd->add_option("--tree-file", x.tree_file, "Run on these trees instead of sampling")->check(CLI::ExistingFile);

  auto* chain_cmd = app.add_subcommand("chain", "Status chain simulation (no tree is built)");
  add_common(chain_cmd, true);
  add_format(chain_cmd);

  auto* law_cmd = app.add_subcommand("exact-law", "Exact law of G and E (JSON)");
  add_common(law_cmd, false);

  auto* verify = app.add_subcommand("verify-symmetry", "Check law(G) = law((n-G)+E)");
  add_common(verify, true);
  add_format(verify);
  auto* exact_flag = verify->add_flag("--exact", cfg.exact, "Exact dynamic programming");
  auto* mc_flag = verify->add_flag("--mc", cfg.mc, "Monte Carlo with a bootstrap threshold");
  exact_flag->excludes(mc_flag);
  verify->add_option("--bootstrap", x.bootstrap, "Bootstrap rounds")->check(CLI::PositiveNumber);
  verify->add_flag("--control", x.control, "Compare two samples of G (null calibration)");

  auto* clt_cmd = app.add_subcommand("clt", "Central limit theorem check on the status chain");
  add_common(clt_cmd, true);
  add_format(clt_cmd);

  auto* fluid_sub = app.add_subcommand("fluid", "Fluid limit constants (JSON)");
  fluid_sub->add_option("-o,--output", cfg.output);

  auto* matching_cmd = app.add_subcommand("matching", "Greedy matching size on uniform trees");
  add_common(matching_cmd, true);
  add_format(matching_cmd);

  auto* maxis_cmd = app.add_subcommand("max-is", "Maximum independent set size on uniform trees");
  add_common(maxis_cmd, true);
  add_format(maxis_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "All Cayley trees on n vertices");
  add_common(enum_cmd, false);
  enum_cmd->add_flag("--prufer", x.prufer, "Print Prüfer sequences instead of parent lists");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitBadUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  if (cfg.format.empty()) {
    cfg.format = (cfg.subcommand == "clt" || cfg.subcommand == "verify-symmetry") ? "json" : "csv";
  }

  try {
    if (cfg.subcommand == "peel" && !x.markov && x.fixed_tree.empty()) {
      throw std::invalid_argument("peel needs --fixed-tree FILE or --markov");
    }
    if (cfg.subcommand == "verify-symmetry" && !cfg.exact && !cfg.mc) {
      throw std::invalid_argument("verify-symmetry needs --exact or --mc");
    }
    static const std::vector<std::string> randomized{"sample-tree", "peel",   "greedy",   "chain",
                                                     "clt",         "matching", "max-is", "verify-symmetry"};
    const bool deterministic = cfg.subcommand == "verify-symmetry" && cfg.exact;
    if (!deterministic && std::find(randomized.begin(), randomized.end(), cfg.subcommand) != randomized.end()) {
      err << "seed: " << cfg.seed << '\n';
    }

    Output output(cfg.output, out);
    std::ostream& os = output.get();
    const std::string& s = cfg.subcommand;
    if (s == "sample-tree") return sample_tree(cfg, x, os);
    if (s == "peel") return peel(cfg, x, os);
    if (s == "greedy") return greedy(cfg, x, os);
    if (s == "chain") return chain(cfg, os);
    if (s == "exact-law") return exact_law(cfg, os);
    if (s == "verify-symmetry") return verify_symmetry(cfg, x, os);
    if (s == "clt") return clt(cfg, os);
    if (s == "fluid") return fluid_cmd(os);
    if (s == "matching") return tree_statistic(cfg, true, os);
    if (s == "max-is") return tree_statistic(cfg, false, os);
    if (s == "enumerate") return enumerate(cfg, x, os);
    throw std::invalid_argument("unknown subcommand " + s);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailedCheck;
  }
}

}  // namespace cayley::cli
