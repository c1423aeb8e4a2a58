#pragma once

#include <span>
#include <vector>

#include "choquet/capacity.hpp"
#include "choquet/sampled_function.hpp"

namespace choquet {

struct Region {
  double lo;
  double hi;
};

struct QuadratureConfig {
  int level_grid = 4096;
  double tolerance = 1e-8;
  int refinement_factor = 2;

  void Validate() const;
};

struct IntegralResult {
  double value = 0.0;
  // The requested region was moved to the nearest grid nodes.
  bool snapped = false;
  Region region{0.0, 0.0};
};

// Choquet integral of a sampled function over `region`.
//
// The samples are treated as atoms: node i carries Lebesgue weight h, except
// the two nodes bounding the region which carry h/2. A level set's capacity
// is u(weight / (b - a)) with [a,b] the capacity's interval. For the identity
// distortion this is the trapezoid rule; for any distortion it is an exact
// Choquet integral on the node set, so every structural identity of the
// integral holds on the samples without discretization error.
IntegralResult ChoquetIntegral(const SampledFunction& f,
                               const IntervalCapacity& cap, Region region);

// Region = whole capacity interval.
double ChoquetIntegral(const SampledFunction& f, const IntervalCapacity& cap);

// Survival-function quadrature of the same integral: the trapezoid rule on
// t -> nu({f >= t}) over [min(0, min f), 0] (integrand shifted by -nu(region))
// and [0, max(0, max f)].
double ChoquetOracle(const SampledFunction& f, const IntervalCapacity& cap,
                     Region region, const QuadratureConfig& config = {});

// Sort formula on a finite ground set; ties broken by ascending index.
double ChoquetDiscrete(std::span<const double> values,
                       const DiscreteCapacity& cap);

// Exact sum of the piecewise-constant survival function over its
// breakpoints, with both branches of the definition.
double ChoquetDiscreteOracle(std::span<const double> values,
                             const DiscreteCapacity& cap);

std::vector<double> VectorChoquet(std::span<const double> values,
                                  const VectorCapacity& cap);

}  // namespace choquet
