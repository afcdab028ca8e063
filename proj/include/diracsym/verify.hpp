#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diracsym/serialize.hpp"

namespace diracsym::verify {

struct SuiteInfo {
  std::string name;
  int criterion = 0;
  std::vector<std::string> types;  // default sweep
  int bound = 0;                   // default height bound
  std::string summary;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo& suiteInfo(const std::string& name);

struct Options {
  std::optional<std::string> type;
  std::optional<std::vector<int>> grading;  // needs type
  std::optional<int> bound;
};

struct Result {
  std::string suite;
  bool ok = true;
  long long checks = 0;
  io::json counterexample;  // first failure; null when ok

  io::json toJson() const;
};

/// Runs one suite; InputError for unknown names or bad options. Identity
/// failures (including InternalError raised by the library) end the run and
/// are reported in the result.
Result run(const std::string& name, const Options& options = {});

}  // namespace diracsym::verify
