#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "cayley/random.hpp"

namespace cayley::cli {

struct RunConfig {
  std::string subcommand;
  std::size_t n = 0;
  std::size_t replicates = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string output;  // empty: standard output
  std::string format;  // csv | json; empty picks the subcommand default
  bool exact = false;
  bool mc = false;
  unsigned jobs = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitBadUsage = 2;

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
