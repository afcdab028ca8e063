#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace diracsym::cli {

struct CliConfig {
  std::string subcommand;  // datum, hd, index, pairing, kl, transfer, verify
  std::string mode;        // second word: findim, aq, ds, hw, ell, t81, table, parabolic, factor
  std::string datumPath;
  std::string type;
  std::string grading;     // "1,0"
  std::string lambda;      // doubled coordinates, "2,-4"
  std::string lambdaPrime;
  std::string defining;    // theta-stable parabolic, one entry per simple root
  std::string levi;        // simple-root indices
  std::string sub;         // subsystem name from the datum file
  std::string subRoots;    // or positive-root indices inline
  std::string source;      // index source: findim, aq, ds
  std::string suite;
  std::optional<int> bound;
};

/// Executes a parsed command; JSON goes to `out`. Returns the exit status:
/// 0 success, 1 identity failure (with counterexample), 2 input error.
int run(const CliConfig& config, std::ostream& out);

/// Parses argv with CLI11 and runs; parse errors are input errors.
int main(int argc, char** argv, std::ostream& out);

}  // namespace diracsym::cli
