#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "choquet/capacity.hpp"
#include "choquet/operators.hpp"
#include "choquet/sampled_function.hpp"

namespace choquet {

// omega_1(f; delta) on the sample grid. delta is rounded up to k whole cells
// and the result is the largest max - min over k+1 consecutive nodes,
// computed with two monotone deques in O(M). Zero for delta == 0.
double ModulusOfContinuity(const SampledFunction& f, double delta);

// Same quantity by scanning all node pairs; O(M^2), for testing.
double ModulusOfContinuityBruteForce(const SampledFunction& f, double delta);

struct DeltaTerms {
  double k_neg_t = 0.0;   // K(-t)(x)
  double k_t2 = 0.0;      // K(t^2)(x)
  double radicand = 0.0;  // x^2 + 2x K(-t)(x) + K(t^2)(x)
  double delta = 0.0;     // sqrt(max(0, radicand))
  // |K(-|t - x|)(x)|; diagnostics only, filled when requested.
  double proof_delta = 0.0;
};

// The OperatorSpec supplies family, degree, distortion and window; f is ignored.
DeltaTerms Theorem4DeltaTerms(const OperatorSpec& spec, double x,
                              bool with_proof_delta = false);
// Bernstein family.
double Theorem4Delta(const Distortion& u, int n, double x);

struct KorovkinRow {
  int n = 0;
  double x = 0.0;
  double fx = 0.0;
  double knfx = 0.0;
  double abs_error = 0.0;
  double delta = 0.0;
  double radicand = 0.0;
  double omega = 0.0;
  double bound = 0.0;  // (c + 1) omega
  bool holds = true;   // abs_error <= bound + 1e-8
};

struct KorovkinReport {
  Family family = Family::kBernstein;
  std::string distortion;
  std::string function;
  double c = 1.0;
  double window = 1.0;
  std::size_t omega_cells = 0;
  std::vector<KorovkinRow> rows;

  int violations() const;
  bool all_hold() const { return violations() == 0; }
  // max abs_error / bound; rows with a zero bound count only if they err.
  double max_slack_utilization() const;
};

struct KorovkinConfig {
  Family family = Family::kBernstein;
  Distortion distortion = Distortion::Identity();
  double c = 1.0;
  std::vector<int> ns;
  std::vector<double> xs;
  // Right end B of the sampling window; must be 1 for Bernstein.
  double window = 1.0;
  std::size_t omega_cells = 1000;
  std::size_t samples_per_cell = 32;
  unsigned workers = 1;
  std::string function_name;
};

inline constexpr double kBoundTolerance = 1e-8;

// Rows in (n, x) order. Throws PreconditionError if f takes a negative value
// on the sampling grid and ArgumentError for c < 1.
KorovkinReport Theorem4BoundCheck(const RealFunction& f,
                                  const KorovkinConfig& config);

struct ConvergenceRow {
  int n = 0;
  double sup_error = 0.0;
  double argmax = 0.0;
};

struct ConvergenceTable {
  Family family = Family::kBernstein;
  std::string distortion;
  std::string function;
  std::vector<ConvergenceRow> rows;  // ascending n
  bool improves = false;             // error at max n < error at min n
  bool strictly_decreasing = false;

  double SupError(int n) const;
};

// Sup over xs of |K_n f(x) - f(x)| for each n. The OperatorSpec supplies family,
// distortion and window; its degree is ignored.
ConvergenceTable MakeConvergenceTable(const RealFunction& f,
                                      const OperatorSpec& spec,
                                      std::vector<int> ns,
                                      const std::vector<double>& xs,
                                      std::string function_name = {});

// n = 1, 2, 4, ..., up to max_n.
std::vector<int> PowersOfTwo(int max_n);
// count points from lo to hi inclusive.
std::vector<double> UniformGrid(double lo, double hi, std::size_t count);

}  // namespace choquet
