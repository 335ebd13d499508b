#ifndef WALKALG_SUITES_HPP
#define WALKALG_SUITES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "walkalg/generate.hpp"

namespace walkalg {

// Randomized identity suites shared by the command line tool and the
// acceptance tests. A suite runs one family of identities over a seeded
// sample and reports every violating input with both sides of the first
// equation that broke, so a failure is reproducible from (seed, index).

struct CheckFailure {
  std::size_t index = 0;  // position of the instance in the sample
  std::string input;      // rendering of the offending walk or forest
  std::string identity;   // which equation failed
  std::string lhs;        // serialized left-hand side
  std::string rhs;        // serialized right-hand side
};

struct CheckReport {
  std::string suite;
  std::size_t checked = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Known suites: "copreLie", "coassoc", "antipode", "dendriform", "brace",
// "morphism", "cuts". Throws std::invalid_argument on an unknown name.
CheckReport run_suite(const std::string& name, const GenConfig& cfg);

std::vector<std::string> suite_names();

}  // namespace walkalg

#endif  // WALKALG_SUITES_HPP
