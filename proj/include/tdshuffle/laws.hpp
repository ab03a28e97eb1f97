#ifndef TDSHUFFLE_LAWS_HPP
#define TDSHUFFLE_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tdshuffle {

struct SuiteOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  unsigned trials = 200;
  unsigned max_degree = 5;
  unsigned max_length = 4;
  std::size_t vars = 2;
};

struct LawOutcome {
  std::string name;
  std::size_t checked = 0;
  bool holds = true;
  std::string counterexample;      // empty when the law held
  std::vector<std::string> notes;  // witnesses and informational lines
};

struct SuiteResult {
  SuiteOptions options;
  std::vector<LawOutcome> outcomes;

  bool ok() const;
  // Byte-deterministic text report: same options, same bytes.
  std::string str() const;
};

// The registered suite names, in report order ("all" not included).
std::vector<std::string> suite_names();

// Runs the named suite (or every suite for "all"). Each suite draws from its
// own seed stream derived from (seed, stable suite index), so results do not
// depend on which other suites run. Throws std::invalid_argument for an
// unknown suite name.
SuiteResult run_laws(const SuiteOptions& options);

}  // namespace tdshuffle

#endif
