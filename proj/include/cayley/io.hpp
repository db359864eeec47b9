#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "cayley/experiments.hpp"
#include "cayley/fluid.hpp"
#include "cayley/greedy.hpp"
#include "cayley/peeling.hpp"
#include "cayley/trees.hpp"

namespace cayley::io {

/// `n;p(1),p(2),...,p(n-1)`
std::string format_tree(const CayleyTree& tree);
CayleyTree parse_tree(std::string_view line);
/// Every non-empty line of the stream.
std::vector<CayleyTree> read_trees(std::istream& in);

/// Comma-separated symbols.
std::string format_prufer(const PruferSequence& seq);
PruferSequence parse_prufer(std::size_t n, std::string_view text);

/// CSV with header step,peeled,parent,recolored.
void write_step_trace(std::ostream& out, std::span<const PeelStep> steps);

/// One row of the outcome CSV; absent fields print empty.
struct OutcomeRow {
  std::size_t n = 0;
  std::size_t replicate = 0;
  std::optional<std::size_t> G;
  std::optional<std::size_t> theta;
  std::optional<bool> E;
  std::optional<std::size_t> M;
  std::optional<std::size_t> max_is;
};

void write_outcome_header(std::ostream& out);
void write_outcome_row(std::ostream& out, const OutcomeRow& row);

/// "p/q" (or "p" for integers).
std::string format_rational(const mpq_class& q);

/// {"n", "law": {G: {"exact", "value"}}, "complement", "prob_E", "tv"}
nlohmann::ordered_json chain_law_json(const ChainLaw& law);

/// Rounded to 15 significant digits.
double round_significant(double value, int digits = 15);

nlohmann::ordered_json fluid_json();

nlohmann::ordered_json report_json(const stats::ExperimentReport& report);
void write_report_csv_header(std::ostream& out);
void write_report_csv_row(std::ostream& out, const stats::ExperimentReport& report);

}  // namespace cayley::io
