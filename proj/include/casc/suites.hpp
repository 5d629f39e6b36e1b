#ifndef CASC_SUITES_HPP
#define CASC_SUITES_HPP

#include <set>
#include <string>
#include <vector>

#include "casc/coadjoint.hpp"

namespace casc {

struct SuiteConfig {
  /// Subset of {cascade, w0, isotropy, codim, shift, fixed, transitivity};
  /// "all" expands to every selector.
  std::set<std::string> suites{"all"};
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  std::size_t oracle_rank_limit = 4;
};

bool valid_suite_selector(const std::string& s);

/// Runs the selected verifier suites for one simple type. Reports come back
/// in a fixed order; an oracle whose budget is exceeded is marked skipped.
std::vector<TheoremReport> run_suites(const SimpleType& type,
                                      const SuiteConfig& cfg);

}  // namespace casc

#endif
