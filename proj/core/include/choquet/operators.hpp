#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "choquet/capacity.hpp"
#include "choquet/sampled_function.hpp"

namespace choquet {

enum class Family { kBernstein, kSzasz, kBaskakov };

Family ParseFamily(std::string_view name);
std::string_view FamilyName(Family family);

struct Truncation {
  double tail_tolerance = 1e-12;
  std::size_t max_extra_terms = 1'000'000;

  void Validate() const;
};

struct OperatorSpec {
  Family family = Family::kBernstein;
  int degree = 1;
  Distortion distortion = Distortion::Identity();
  Truncation truncation{};
  std::size_t samples_per_cell = 32;
  // Right end of the window f may be sampled on; unset means unrestricted.
  std::optional<double> domain_max;
  unsigned workers = 1;

  void Validate() const;
};

// Basis weights w_k(x), k = 0..size-1.
//
// Bernstein: C(n,k) x^k (1-x)^(n-k).  Szasz: e^{-nx} (nx)^k / k!.
// Baskakov:  C(n+k-1,k) x^k / (1+x)^(n+k).
// Evaluated from the mode outward with ratio recurrences, the mode term in
// log space, so degrees up to 1e4 neither overflow nor underflow at the
// bulk. Infinite families stop at the first K >= mean + 10 sd with
// remaining mass below the tail tolerance.
struct BasisWeights {
  std::vector<double> weights;
  double retained_mass = 0.0;
  double tail_bound = 0.0;  // bound on the mass beyond the last term
  bool converged = true;    // false if max_extra_terms stopped the sum first
};

BasisWeights ComputeWeights(Family family, int degree, double x,
                            const Truncation& truncation = {});

// Cell [lo,hi] of the family at degree n: k/(n+1) for Bernstein, k/n else.
std::pair<double, double> CellBounds(Family family, int degree, std::size_t k);

// (C) integral of f over [lo,hi] against u(L(. n cell) / L(cell)), divided
// by the capacity of the cell (1 by normalization). f is sampled at
// `samples` cells inside [lo,hi].
double CellMean(const RealFunction& f, const Distortion& u, double lo, double hi,
                std::size_t samples = 32);
// Same on an existing sample grid; [lo,hi] must be grid aligned with at
// least 32 cells inside.
double CellMean(const SampledFunction& f, const Distortion& u, double lo,
                double hi);

struct OperatorValue {
  double value = 0.0;
  std::size_t terms = 0;
  double retained_mass = 1.0;
  double tail_bound = 0.0;
};

OperatorValue BernsteinKC(const RealFunction& f, int n, const Distortion& u,
                          double x, std::size_t samples_per_cell = 32);
OperatorValue SzaszKC(const RealFunction& f, int n, const Distortion& u,
                      double x, const Truncation& truncation = {},
                      std::size_t samples_per_cell = 32,
                      std::optional<double> domain_max = std::nullopt);
OperatorValue BaskakovKC(const RealFunction& f, int n, const Distortion& u,
                         double x, const Truncation& truncation = {},
                         std::size_t samples_per_cell = 32,
                         std::optional<double> domain_max = std::nullopt);

// An operator bound to one function: cell means are computed once per cell
// and shared by every evaluation point.
class KantorovichChoquetOperator {
 public:
  KantorovichChoquetOperator(OperatorSpec spec, RealFunction f);

  const OperatorSpec& spec() const { return spec_; }
  OperatorValue Evaluate(double x);
  // Order-preserving; errors are rethrown naming the failing index.
  std::vector<OperatorValue> EvaluateGrid(std::span<const double> xs);

  // Largest x-independent cell index needed so far.
  std::size_t cached_cells() const { return means_.size(); }

 private:
  void EnsureCells(std::size_t count);
  void CheckWindow(std::size_t cells) const;
  OperatorValue Combine(const BasisWeights& w) const;

  OperatorSpec spec_;
  RealFunction f_;
  std::vector<double> means_;
};

std::vector<double> EvalGrid(const OperatorSpec& spec, const RealFunction& f,
                             std::span<const double> xs);

}  // namespace choquet
