#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beltca_cli/report.hpp"
#include "beltca_cli/system.hpp"

namespace beltca::cli {

/// Command-line overrides of the config's verify block.
struct SuiteOptions {
  std::optional<std::size_t> period, ball, k;
  std::optional<std::uint64_t> seed;
};

const std::vector<std::string>& suite_names();

/// Appends the suite's records. Throws ParseError for an unknown suite.
void run_suite(const std::string& suite, const System& s, const SuiteOptions& opt, Report& out);

}  // namespace beltca::cli
