#include "cayley/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace cayley::io {

namespace {

std::size_t parse_size(std::string_view text, const char* what) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<Vertex> parse_list(std::string_view text) {
  std::vector<Vertex> out;
  if (text.empty() || text.find_first_not_of(" \t\r") == std::string_view::npos) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(static_cast<Vertex>(parse_size(text.substr(0, comma), "label")));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(std::span<const Vertex> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string format_tree(const CayleyTree& tree) {
  return std::to_string(tree.size()) + ";" + join(tree.parents());
}

CayleyTree parse_tree(std::string_view line) {
  const auto semicolon = line.find(';');
  if (semicolon == std::string_view::npos) throw std::invalid_argument("tree line needs 'n;parents'");
  const std::size_t n = parse_size(line.substr(0, semicolon), "vertex count");
  return CayleyTree(n, parse_list(line.substr(semicolon + 1)));
}

std::vector<CayleyTree> read_trees(std::istream& in) {
  std::vector<CayleyTree> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_tree(line));
  }
  return out;
}

std::string format_prufer(const PruferSequence& seq) { return join(seq.symbols); }

PruferSequence parse_prufer(std::size_t n, std::string_view text) {
  PruferSequence seq{n, parse_list(text)};
  if (n < 2 || seq.symbols.size() != n - 2) throw std::invalid_argument("Prüfer sequence must have n-2 symbols");
  for (const Vertex s : seq.symbols) {
    if (s < 1 || s > n) throw std::invalid_argument("Prüfer symbol out of range");
  }
  return seq;
}

void write_step_trace(std::ostream& out, std::span<const PeelStep> steps) {
  out << "step,peeled,parent,recolored\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << (i + 1) << ',' << steps[i].peeled << ',' << steps[i].parent << ',' << (steps[i].recolored_to_blue ? 1 : 0)
        << '\n';
  }
}

void write_outcome_header(std::ostream& out) { out << "n,replicate,G,theta,E,M,maxIS\n"; }

void write_outcome_row(std::ostream& out, const OutcomeRow& row) {
  auto field = [&](const auto& value) {
    out << ',';
    if (value) out << static_cast<std::size_t>(*value);
  };
  out << row.n << ',' << row.replicate;
  field(row.G);
  field(row.theta);
  field(row.E);
  field(row.M);
  field(row.max_is);
  out << '\n';
}

std::string format_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

namespace {

nlohmann::ordered_json law_json(const std::map<std::size_t, mpq_class>& law) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [value, p] : law) {
    out[std::to_string(value)] = {{"exact", format_rational(p)}, {"value", p.get_d()}};
  }
  return out;
}

}  // namespace

nlohmann::ordered_json chain_law_json(const ChainLaw& law) {
  const auto of_g = law.law_of_G();
  const auto complement = law.law_of_complement();
  const mpq_class tv = total_variation_exact(of_g, complement);
  const mpq_class pe = law.prob_E();
  nlohmann::ordered_json out;
  out["n"] = law.n;
  out["law"] = law_json(of_g);
  out["complement"] = law_json(complement);
  out["prob_E"] = {{"exact", format_rational(pe)}, {"value", pe.get_d()}};
  out["tv"] = {{"exact", format_rational(tv)}, {"value", tv.get_d()}};
  return out;
}

double round_significant(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

nlohmann::ordered_json fluid_json() {
  const auto m = fluid::covariance_m();
  const auto constants = fluid::clt_constants(m);
  nlohmann::ordered_json matrix = nlohmann::ordered_json::array();
  for (const auto& row : m) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const double x : row) r.push_back(round_significant(x));
    matrix.push_back(r);
  }
  nlohmann::ordered_json out;
  out["t_star"] = round_significant(fluid::t_star());
  out["M"] = matrix;
  out["varG"] = round_significant(constants.var_G);
  out["varTheta"] = round_significant(constants.var_theta);
  out["covAB"] = round_significant(constants.cov_AB);
  return out;
}

nlohmann::ordered_json report_json(const stats::ExperimentReport& r) {
  nlohmann::ordered_json out;
  out["statistic"] = r.statistic;
  out["n"] = r.n;
  out["replicates"] = r.replicates;
  out["seed"] = r.seed;
  out["observed"] = r.observed;
  out["target"] = r.target;
  out["tolerance"] = r.tolerance;
  out["lower"] = r.lower;
  out["upper"] = r.upper;
  out["pass"] = r.pass;
  return out;
}

void write_report_csv_header(std::ostream& out) {
  out << "statistic,n,replicates,seed,observed,target,tolerance,lower,upper,pass\n";
}

void write_report_csv_row(std::ostream& out, const stats::ExperimentReport& r) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, "%s,%zu,%zu,%llu,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", r.statistic.c_str(), r.n,
                r.replicates, static_cast<unsigned long long>(r.seed), r.observed, r.target, r.tolerance, r.lower,
                r.upper, r.pass ? 1 : 0);
  out << buffer;
}

}  // namespace cayley::io
