#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "choquet/capacity.hpp"

namespace choquet {

struct Witness {
  int trial = -1;
  double lhs = 0.0;
  double rhs = 0.0;
  std::vector<double> f;
  std::vector<double> g;
};

struct CheckOutcome {
  std::string name;
  bool applicable = true;
  std::string note;  // reason when not applicable
  int trials = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::optional<Witness> first_failure;
};

struct PropertyReport {
  std::string subject;  // capacity description
  std::uint64_t seed = 0;
  int trials = 0;
  double tolerance = 0.0;
  std::vector<CheckOutcome> checks;

  int total_failures() const;
  const CheckOutcome* Find(const std::string& name) const;
};

struct PropertyOptions {
  double discrete_tolerance = 1e-9;
  double sampled_tolerance = 1e-6;
  std::size_t sample_cells = 128;
  // Worker threads for trials; 0 picks the default worker count.
  unsigned workers = 0;
};

// Randomized checks of the structural identities and inequalities of the
// Choquet integral: positivity, monotonicity, positive homogeneity,
// calibration, comonotone additivity, translation invariance, the duality
// identity, monotonicity in the capacity (nonnegative f), and, only when
// the capacity is submodular, subadditivity, the two modulus inequalities
// and the sup/inf submodularity of the functional. Additive capacities also
// get an unrestricted additivity check.
//
// Per-trial randomness derives from (seed, trial index), so the report does
// not depend on how trials are scheduled.
PropertyReport RunIntegralProperties(const IntervalCapacity& cap, int trials,
                                     std::uint64_t seed,
                                     const PropertyOptions& options = {});
PropertyReport RunIntegralProperties(const DiscreteCapacity& cap, int trials,
                                     std::uint64_t seed,
                                     const PropertyOptions& options = {});

// Interval capacities are submodular when their distortion passes the
// midpoint concavity scan.
bool IsSubmodular(const IntervalCapacity& cap);

}  // namespace choquet
