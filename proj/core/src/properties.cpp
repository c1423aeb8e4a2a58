#include "choquet/properties.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <random>

#include "choquet/errors.hpp"
#include "choquet/integral.hpp"
#include "choquet/parallel.hpp"
#include "choquet/sampled_function.hpp"

namespace choquet {

namespace {

using Values = std::vector<double>;
using Rng = std::mt19937_64;

enum class Which { kPrimary, kDual, kDominating };

// The same checks run against both capacity kinds through this interface.
struct Backend {
  std::function<Values(Rng&)> random_function;
  std::function<Values(Rng&, const Values&)> monotone_transform;
  std::function<double(const Values&, Which)> integrate;
  double total = 1.0;
  double tolerance = 1e-9;
  bool submodular = false;
  bool additive = false;
};

double Uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// A random nondecreasing map applied pointwise: comonotone with its input.
Values MonotoneTransform(Rng& rng, const Values& base) {
  const double slope = Uniform(rng, 0.0, 2.0);
  const double bend = Uniform(rng, 0.0, 3.0);
  const double steep = Uniform(rng, 0.2, 4.0);
  const double center = Uniform(rng, -3.0, 3.0);
  const double kink = Uniform(rng, 0.0, 2.0);
  const double knot = Uniform(rng, -3.0, 3.0);
  const double offset = Uniform(rng, -2.0, 2.0);
  Values out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    double s = base[i];
    out[i] = offset + slope * s + bend * std::tanh(steep * (s - center)) +
             kink * std::max(s - knot, 0.0);
  }
  return out;
}

Values Pointwise(const Values& f, const Values& g,
                 const std::function<double(double, double)>& op) {
  Values out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = op(f[i], g[i]);
  return out;
}

Values Scaled(const Values& f, double a, double c = 0.0) {
  Values out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = a * f[i] + c;
  return out;
}

Values Absolute(const Values& f) {
  Values out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

struct CheckResult {
  bool applicable = true;
  bool passed = true;
  Witness witness;
};

enum CheckId {
  kPositivity,
  kMonotonicity,
  kHomogeneity,
  kCalibration,
  kComonotoneAdditivity,
  kTranslation,
  kDuality,
  kCapacityMonotonicity,
  kAdditivity,
  kSubadditivity,
  kModulusAbs,
  kModulusDifference,
  kSubmodularFunctional,
  kCheckCount
};

constexpr const char* kCheckNames[kCheckCount] = {
    "positivity",
    "monotonicity",
    "positive_homogeneity",
    "calibration",
    "comonotone_additivity",
    "translation_invariance",
    "duality",
    "capacity_monotonicity",
    "additivity",
    "subadditivity",
    "modulus_abs",
    "modulus_difference",
    "submodular_functional",
};

using TrialResult = std::array<CheckResult, kCheckCount>;

TrialResult RunTrial(const Backend& be, Rng& rng, int trial) {
  TrialResult out;
  const double tol = be.tolerance;
  auto integral = [&](const Values& v) { return be.integrate(v, Which::kPrimary); };
  auto record_le = [&](CheckId id, double lhs, double rhs, const Values& f,
                       const Values& g) {
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    CheckResult& r = out[id];
    r.passed = lhs <= rhs + tol * scale;
    r.witness = Witness{trial, lhs, rhs, f, g};
  };
  auto record_eq = [&](CheckId id, double lhs, double rhs, const Values& f,
                       const Values& g) {
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    CheckResult& r = out[id];
    r.passed = std::abs(lhs - rhs) <= tol * scale;
    r.witness = Witness{trial, lhs, rhs, f, g};
  };

  const Values f = be.random_function(rng);
  const Values g = be.random_function(rng);
  const Values bump = Absolute(be.random_function(rng));
  const Values base = be.random_function(rng);
  const Values co_f = be.monotone_transform(rng, base);
  const Values co_g = be.monotone_transform(rng, base);
  const double a = Uniform(rng, 0.0, 5.0);
  const double c = Uniform(rng, -5.0, 5.0);

  const double int_f = integral(f);
  const double int_g = integral(g);
  const Values abs_f = Absolute(f);
  const double int_abs_f = integral(abs_f);

  record_le(kPositivity, 0.0, int_abs_f, abs_f, {});
  const Values above = Pointwise(f, bump, std::plus<>());
  record_le(kMonotonicity, int_f, integral(above), f, above);
  record_eq(kHomogeneity, integral(Scaled(f, a)), a * int_f, f, {a});
  const Values constant(f.size(), c);
  record_eq(kCalibration, integral(constant), c * be.total, constant, {});
  record_eq(kComonotoneAdditivity,
            integral(Pointwise(co_f, co_g, std::plus<>())),
            integral(co_f) + integral(co_g), co_f, co_g);
  record_eq(kTranslation, integral(Scaled(f, 1.0, c)), int_f + c * be.total,
            f, {c});
  record_eq(kDuality, integral(Scaled(f, -1.0)),
            -be.integrate(f, Which::kDual), f, {});
  record_le(kCapacityMonotonicity, int_abs_f,
            be.integrate(abs_f, Which::kDominating), abs_f, {});

  if (be.additive) {
    record_eq(kAdditivity, integral(Pointwise(f, g, std::plus<>())),
              int_f + int_g, f, g);
  } else {
    out[kAdditivity].applicable = false;
  }

  if (be.submodular) {
    record_le(kSubadditivity, integral(Pointwise(f, g, std::plus<>())),
              int_f + int_g, f, g);
    record_le(kModulusAbs, std::abs(int_f), int_abs_f, f, {});
    const Values diff = Absolute(Pointwise(f, g, std::minus<>()));
    record_le(kModulusDifference, std::abs(int_f - int_g), integral(diff), f,
              g);
    const Values hi = Pointwise(f, g, [](double x, double y) { return std::max(x, y); });
    const Values lo = Pointwise(f, g, [](double x, double y) { return std::min(x, y); });
    record_le(kSubmodularFunctional, integral(hi) + integral(lo),
              int_f + int_g, f, g);
  } else {
    for (CheckId id : {kSubadditivity, kModulusAbs, kModulusDifference,
                       kSubmodularFunctional}) {
      out[id].applicable = false;
    }
  }
  return out;
}

PropertyReport Run(const Backend& be, std::string subject, int trials,
                   std::uint64_t seed, unsigned workers) {
  if (trials < 1) throw ArgumentError("trials must be >= 1");
  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  ParallelFor(results.size(), workers, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Rng rng(seq);
    results[i] = RunTrial(be, rng, static_cast<int>(i));
  });

  PropertyReport report;
  report.subject = std::move(subject);
  report.seed = seed;
  report.trials = trials;
  report.tolerance = be.tolerance;
  for (int id = 0; id < kCheckCount; ++id) {
    CheckOutcome outcome;
    outcome.name = kCheckNames[id];
    for (const auto& trial : results) {
      const CheckResult& r = trial[id];
      ++outcome.trials;
      if (!r.applicable) {
        ++outcome.skipped;
      } else if (r.passed) {
        ++outcome.passed;
      } else {
        ++outcome.failed;
        if (!outcome.first_failure) outcome.first_failure = r.witness;
      }
    }
    if (outcome.skipped == outcome.trials) {
      outcome.applicable = false;
      outcome.note = id == kAdditivity ? "not applicable: capacity not additive"
                                       : "not applicable: capacity not submodular";
    }
    report.checks.push_back(std::move(outcome));
  }
  return report;
}

Values RandomPiecewiseLinear(Rng& rng, std::size_t cells) {
  const int knots = std::uniform_int_distribution<int>(1, 6)(rng);
  std::vector<std::pair<double, double>> pts{{0.0, Uniform(rng, -5.0, 5.0)},
                                             {1.0, Uniform(rng, -5.0, 5.0)}};
  for (int k = 0; k < knots; ++k) {
    pts.emplace_back(Uniform(rng, 0.0, 1.0), Uniform(rng, -5.0, 5.0));
  }
  std::sort(pts.begin(), pts.end());
  Values out(cells + 1);
  std::size_t seg = 0;
  for (std::size_t i = 0; i <= cells; ++i) {
    double s = static_cast<double>(i) / static_cast<double>(cells);
    while (seg + 2 < pts.size() && pts[seg + 1].first < s) ++seg;
    const auto& [s0, v0] = pts[seg];
    const auto& [s1, v1] = pts[seg + 1];
    double w = s1 > s0 ? std::clamp((s - s0) / (s1 - s0), 0.0, 1.0) : 0.0;
    out[i] = v0 + w * (v1 - v0);
  }
  return out;
}

Values RandomPolynomial(Rng& rng, std::size_t cells) {
  const int degree = std::uniform_int_distribution<int>(0, 5)(rng);
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1);
  for (double& c : coeffs) c = Uniform(rng, -3.0, 3.0);
  Values out(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    double s = static_cast<double>(i) / static_cast<double>(cells);
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
    out[i] = acc;
  }
  return out;
}

}  // namespace

int PropertyReport::total_failures() const {
  int sum = 0;
  for (const auto& c : checks) sum += c.failed;
  return sum;
}

const CheckOutcome* PropertyReport::Find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool IsSubmodular(const IntervalCapacity& cap) {
  return CheckSubmodularDistortion(cap.distortion(), 257).concave;
}

PropertyReport RunIntegralProperties(const IntervalCapacity& cap, int trials,
                                     std::uint64_t seed,
                                     const PropertyOptions& options) {
  const std::size_t cells = options.sample_cells;
  const IntervalCapacity dual = cap.Dual();
  const IntervalCapacity dominating(cap.a(), cap.b(),
                                    cap.distortion().Raised(0.5));
  Backend be;
  be.random_function = [cells](Rng& rng) {
    return std::bernoulli_distribution(0.5)(rng) ? RandomPiecewiseLinear(rng, cells)
                                                 : RandomPolynomial(rng, cells);
  };
  be.monotone_transform = MonotoneTransform;
  be.integrate = [&](const Values& v, Which which) {
    SampledFunction f(cap.a(), cap.b(), v);
    switch (which) {
      case Which::kDual:
        return ChoquetIntegral(f, dual);
      case Which::kDominating:
        return ChoquetIntegral(f, dominating);
      default:
        return ChoquetIntegral(f, cap);
    }
  };
  be.total = cap.MeasureOfLength(cap.length());
  be.tolerance = options.sampled_tolerance;
  be.submodular = IsSubmodular(cap);
  be.additive = cap.distortion().kind() == Distortion::Kind::kIdentity;
  return Run(be, "interval:" + cap.distortion().Name(), trials, seed,
             options.workers);
}

PropertyReport RunIntegralProperties(const DiscreteCapacity& cap, int trials,
                                     std::uint64_t seed,
                                     const PropertyOptions& options) {
  const int n = cap.ground_size();
  const DiscreteCapacity dual = cap.Dual();
  std::vector<double> bigger(cap.table());
  for (Subset s = 0; s < bigger.size(); ++s) {
    bigger[s] += 0.5 * std::popcount(s) / static_cast<double>(n);
  }
  const DiscreteCapacity dominating(n, std::move(bigger));
  Backend be;
  be.random_function = [n](Rng& rng) {
    Values v(static_cast<std::size_t>(n));
    const bool ties = std::bernoulli_distribution(0.3)(rng);
    for (double& x : v) {
      x = Uniform(rng, -10.0, 10.0);
      if (ties) x = std::round(x / 4.0) * 4.0;
    }
    return v;
  };
  be.monotone_transform = MonotoneTransform;
  be.integrate = [&](const Values& v, Which which) {
    switch (which) {
      case Which::kDual:
        return ChoquetDiscrete(v, dual);
      case Which::kDominating:
        return ChoquetDiscrete(v, dominating);
      default:
        return ChoquetDiscrete(v, cap);
    }
  };
  be.total = cap.total();
  be.tolerance = options.discrete_tolerance;
  be.submodular = CheckSubmodular(cap).submodular;
  be.additive = cap.IsAdditive();
  return Run(be, "discrete:n=" + std::to_string(n), trials, seed,
             options.workers);
}

}  // namespace choquet
