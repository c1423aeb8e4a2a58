#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace choquet {

// A nondecreasing map u of [0,1] onto itself with u(0)=0 and u(1)=1.
//
// Composite kinds (Dual, Raised) keep a handle to the distortion they were
// built from, so Dual().Dual() gives back the original exactly.
class Distortion {
 public:
  enum class Kind { kIdentity, kPower, kMoebius, kTabulated, kDual, kRaised };

  static Distortion Identity();
  // u(t) = t^alpha, alpha > 0.
  static Distortion Power(double alpha);
  // u(t) = 2t / (t + 1).
  static Distortion Moebius();
  // Piecewise-linear through (ts[i], us[i]); ts strictly increasing from 0 to
  // 1, us nondecreasing with us.front() ~ 0 and us.back() ~ 1 (1e-12).
  static Distortion Tabulated(std::vector<double> ts, std::vector<double> us);
  // Two-column CSV "t,u" without or with a header line.
  static Distortion FromCsv(const std::filesystem::path& path);
  // `identity`, `power:<alpha>`, `moebius`, `table:<path>`.
  static Distortion Parse(std::string_view spec);

  // x -> 1 - u(1 - x), the distortion generating the dual capacity.
  Distortion Dual() const;
  // x -> u(x)^gamma. For 0 < gamma < 1 this dominates u pointwise.
  Distortion Raised(double gamma) const;

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  std::string Name() const;

 private:
  Distortion(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_ = Kind::kIdentity;
  double param_ = 1.0;
  std::shared_ptr<const std::vector<double>> ts_;
  std::shared_ptr<const std::vector<double>> us_;
  std::shared_ptr<const Distortion> base_;
};

// A finite union of closed intervals; components are given as (lo, hi).
using IntervalSet = std::vector<std::pair<double, double>>;

// nu(A) = u(L(A n [a,b]) / (b - a)), the distorted Lebesgue capacity.
class IntervalCapacity {
 public:
  IntervalCapacity(double a, double b, Distortion distortion);

  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  const Distortion& distortion() const { return distortion_; }

  // Throws DomainError for components outside [a,b] or overlapping ones.
  double Measure(const IntervalSet& set) const;
  // Capacity of any set with total Lebesgue length `len` inside [a,b].
  double MeasureOfLength(double len) const;

  IntervalCapacity Dual() const;

 private:
  double a_;
  double b_;
  Distortion distortion_;
};

// Subsets of {1..n} are bit patterns; element i sits in bit i-1.
using Subset = std::uint32_t;

class DiscreteCapacity {
 public:
  static constexpr int kMaxGroundSize = 16;

  // `table` holds one value per subset, indexed by bit pattern. Rejects
  // sizes outside [1,16], value(empty) != 0, negative or non-monotone tables.
  DiscreteCapacity(int ground_size, std::vector<double> table);

  // mu(A) = sum of weights over A.
  static DiscreteCapacity Additive(const std::vector<double>& weights);
  // mu(A) = g(|A|); g must be nondecreasing with g(0) = 0.
  static DiscreteCapacity FromCardinality(int ground_size,
                                          const std::vector<double>& by_size);
  // mu(A) = u(|A| / n).
  static DiscreteCapacity FromDistortion(int ground_size, const Distortion& u);

  int ground_size() const { return n_; }
  Subset full_set() const { return static_cast<Subset>((1u << n_) - 1u); }
  double Measure(Subset s) const;
  double total() const { return table_.back(); }
  bool normalized(double tol = 1e-12) const;
  bool IsAdditive(double tol = 1e-12) const;
  const std::vector<double>& table() const { return table_; }

  // mu_bar(A) = mu(X) - mu(X \ A).
  DiscreteCapacity Dual() const;

 private:
  int n_;
  std::vector<double> table_;
};

class VectorCapacity {
 public:
  explicit VectorCapacity(std::vector<DiscreteCapacity> components);

  int ground_size() const { return components_.front().ground_size(); }
  std::size_t dimension() const { return components_.size(); }
  const std::vector<DiscreteCapacity>& components() const {
    return components_;
  }
  std::vector<double> Measure(Subset s) const;

 private:
  std::vector<DiscreteCapacity> components_;
};

struct SubmodularVerdict {
  bool submodular = true;
  // First violating pair in scan order.
  std::optional<std::pair<Subset, Subset>> witness;
  double excess = 0.0;  // mu(AuB) + mu(AnB) - mu(A) - mu(B) at the witness
};

// Exhaustive over all pairs for n <= 12; for larger n the equivalent local
// condition mu(A+i) + mu(A+j) >= mu(A+i+j) + mu(A) is scanned.
SubmodularVerdict CheckSubmodular(const DiscreteCapacity& cap,
                                  double tol = 1e-12);

struct ConcavityVerdict {
  bool concave = true;
  std::optional<std::pair<double, double>> witness;  // (s, t)
};

// Midpoint concavity of u on all pairs of a uniform grid with `grid_size`
// points; sufficient for submodularity of u o L.
ConcavityVerdict CheckSubmodularDistortion(const Distortion& u,
                                           int grid_size = 101,
                                           double tol = 1e-12);

struct CEstimate {
  bool bounded = true;
  double c = 1.0;        // sup of the grid ratio, rounded up to 1e-6, >= 1
  double raw_sup = 0.0;  // largest observed ratio (grid or probe)
  double argmax = 0.0;
};

struct CEstimateOptions {
  double cap = 1e6;
  // Smallest x probed (geometrically) when testing for divergence near 0.
  double probe_floor = 1e-12;
};

// Smallest c >= 1 with u(x) <= c (1 - u(1 - x)) on x = k/grid_size.
CEstimate EstimateC(const Distortion& u, int grid_size = 10000,
                    const CEstimateOptions& options = {});

struct NullComplementVerdict {
  enum class Status { kPassed, kFailed, kSkipped };
  Status status = Status::kPassed;
  std::string reason;
  std::vector<Subset> witnesses;  // null sets whose complement is not full
};

NullComplementVerdict NullComplementCheck(const DiscreteCapacity& cap,
                                          double tol = 1e-12);

std::string FormatSubset(Subset s);

}  // namespace choquet
