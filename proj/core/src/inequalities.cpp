#include "choquet/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "choquet/errors.hpp"
#include "choquet/integral.hpp"
#include "choquet/parallel.hpp"

namespace choquet {

namespace {

double T(const IntervalCapacity& cap, const SampledFunction& f) {
  return ChoquetIntegral(f, cap);
}

double TOne(const IntervalCapacity& cap) {
  return cap.MeasureOfLength(cap.length());
}

void RequireSubmodular(const IntervalCapacity& cap) {
  if (!IsSubmodular(cap)) {
    throw PreconditionError("capacity " + cap.distortion().Name() +
                            " is not submodular; T is not sublinear");
  }
}

// D_T^2(h) = T(1) T(h^2) - T(h)^2.
double Variance(const IntervalCapacity& cap, const SampledFunction& h) {
  return TOne(cap) * T(cap, h * h) - std::pow(T(cap, h), 2);
}

}  // namespace

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kHeld:
      return "held";
    case Verdict::kFailed:
      return "failed";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "?";
}

ComonotoneVerdict IsComonotone(const SampledFunction& f, const SampledFunction& g,
                               std::size_t max_pairs) {
  if (!f.SameGrid(g)) throw ArgumentError("comonotonicity needs a shared grid");
  ComonotoneVerdict verdict;
  const std::size_t n = f.values().size();
  if (n * n <= max_pairs) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = s + 1; t < n; ++t) {
        if ((f[s] - f[t]) * (g[s] - g[t]) < 0.0) {
          verdict.comonotone = false;
          verdict.witness = {f.node(s), f.node(t)};
          return verdict;
        }
      }
    }
    return verdict;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return f[i] < f[j]; });
  // Running max of g over strictly lower f levels.
  bool have_lower = false;
  std::size_t lower_arg = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && f[order[j]] == f[order[i]]) ++j;
    std::size_t group_arg = order[i];
    for (std::size_t k = i; k < j; ++k) {
      const std::size_t idx = order[k];
      if (have_lower && g[idx] < g[lower_arg]) {
        verdict.comonotone = false;
        verdict.witness = {f.node(std::min(idx, lower_arg)),
                           f.node(std::max(idx, lower_arg))};
        return verdict;
      }
      if (g[idx] > g[group_arg]) group_arg = idx;
    }
    if (!have_lower || g[group_arg] > g[lower_arg]) lower_arg = group_arg;
    have_lower = true;
    i = j;
  }
  return verdict;
}

HolderReport HolderCheck(const IntervalCapacity& cap, const SampledFunction& f,
                         const SampledFunction& g, double p, double tolerance) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ArgumentError("Hoelder needs p > 1");
  RequireSubmodular(cap);
  HolderReport r;
  r.p = p;
  r.q = p / (p - 1.0);
  r.lhs = T(cap, (f * g).Abs());
  r.rhs = std::pow(T(cap, f.Abs().Pow(r.p)), 1.0 / r.p) *
          std::pow(T(cap, g.Abs().Pow(r.q)), 1.0 / r.q);
  r.slack = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs + tolerance;
  return r;
}

EndpointHolderReport P1QInfCheck(const IntervalCapacity& cap,
                                 const SampledFunction& f,
                                 const SampledFunction& g, double tolerance) {
  RequireSubmodular(cap);
  EndpointHolderReport r;
  const SampledFunction fg = f * g;
  r.abs_t_fg = std::abs(T(cap, fg));
  r.t_abs_fg = T(cap, fg.Abs());
  r.t_abs_f_sup_g = T(cap, f.Abs()) * g.SupAbs();
  r.modulus_lhs = std::abs(T(cap, f) - T(cap, g));
  r.modulus_rhs = T(cap, (f - g).Abs());
  r.holds = r.abs_t_fg <= r.t_abs_fg + tolerance &&
            r.t_abs_fg <= r.t_abs_f_sup_g + tolerance &&
            r.modulus_lhs <= r.modulus_rhs + tolerance;
  return r;
}

double TVariance(const IntervalCapacity& cap, const SampledFunction& f) {
  return Variance(cap, f);
}

double TCovariance(const IntervalCapacity& cap, const SampledFunction& f,
                   const SampledFunction& g) {
  return TOne(cap) * T(cap, f * g) - T(cap, f) * T(cap, g);
}

Lemma1Report Lemma1Check(const IntervalCapacity& cap, const SampledFunction& f,
                         double tolerance) {
  Lemma1Report r;
  r.value = TOne(cap) * T(cap, f * f) - std::pow(T(cap, -f.Abs()), 2);
  r.holds = r.value >= -tolerance;
  return r;
}

Lemma2Report Lemma2Check(const IntervalCapacity& cap, const SampledFunction& f,
                         const SampledFunction& g, double tolerance) {
  Lemma2Report r;
  const SampledFunction abs_f = f.Abs();
  const SampledFunction abs_g = g.Abs();
  if (!IsSubmodular(cap)) {
    r.verdict = Verdict::kSkipped;
    r.reason = "precondition: capacity is not submodular";
    return r;
  }
  if (!IsComonotone(abs_f, abs_g).comonotone) {
    r.verdict = Verdict::kSkipped;
    r.reason = "precondition: |f| and |g| are not comonotone";
    return r;
  }
  const double t_neg_f = T(cap, -abs_f);
  const double t_neg_g = T(cap, -abs_g);
  const double one = TOne(cap);
  r.signed_covariance = one * T(cap, abs_f * abs_g) - t_neg_f * t_neg_g;
  r.covariance = std::abs(r.signed_covariance);
  const double var_f = one * T(cap, f * f) - t_neg_f * t_neg_f;
  const double var_g = one * T(cap, g * g) - t_neg_g * t_neg_g;
  r.bound = std::sqrt(std::max(0.0, var_f)) * std::sqrt(std::max(0.0, var_g));
  r.slack = r.bound - r.covariance;
  r.unsigned_variance_bound = std::sqrt(std::max(0.0, Variance(cap, abs_f))) *
                              std::sqrt(std::max(0.0, Variance(cap, abs_g)));
  r.verdict = r.covariance <= r.bound + tolerance ? Verdict::kHeld : Verdict::kFailed;
  r.lower_side_holds = r.signed_covariance >= -r.bound - tolerance;
  return r;
}

namespace {

using Rng = std::mt19937_64;

double Uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<double> RandomShape(Rng& rng, std::size_t cells) {
  std::vector<double> out(cells + 1);
  if (std::bernoulli_distribution(0.5)(rng)) {
    const int degree = std::uniform_int_distribution<int>(0, 5)(rng);
    std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1);
    for (double& c : coeffs) c = Uniform(rng, -3.0, 3.0);
    for (std::size_t i = 0; i <= cells; ++i) {
      double s = static_cast<double>(i) / static_cast<double>(cells);
      double acc = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
      out[i] = acc;
    }
    return out;
  }
  const int knots = std::uniform_int_distribution<int>(2, 7)(rng);
  std::vector<double> xs{0.0, 1.0};
  for (int k = 0; k < knots - 1; ++k) xs.push_back(Uniform(rng, 0.0, 1.0));
  std::sort(xs.begin(), xs.end());
  std::vector<double> ys(xs.size());
  for (double& y : ys) y = Uniform(rng, -4.0, 4.0);
  std::size_t seg = 0;
  for (std::size_t i = 0; i <= cells; ++i) {
    double s = static_cast<double>(i) / static_cast<double>(cells);
    while (seg + 2 < xs.size() && xs[seg + 1] < s) ++seg;
    double span = xs[seg + 1] - xs[seg];
    double w = span > 0.0 ? std::clamp((s - xs[seg]) / span, 0.0, 1.0) : 0.0;
    out[i] = ys[seg] + w * (ys[seg + 1] - ys[seg]);
  }
  return out;
}

// Nondecreasing nonnegative transform of a shared base.
std::vector<double> MonotoneOf(Rng& rng, const std::vector<double>& base) {
  const double slope = Uniform(rng, 0.1, 2.0);
  const double bend = Uniform(rng, 0.0, 2.0);
  const double center = Uniform(rng, -2.0, 2.0);
  std::vector<double> out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    out[i] = slope * base[i] + bend * std::tanh(2.0 * (base[i] - center));
  }
  const double low = *std::min_element(out.begin(), out.end());
  const double lift = Uniform(rng, 0.0, 1.0);
  for (double& v : out) v = v - low + lift;
  return out;
}

enum SuiteCheck {
  kHolder,
  kHolderDiagonal,
  kHolderPower,
  kEndpointHolder,
  kModulusAbs,
  kLemma1,
  kLemma2Comonotone,
  kLemma2LowerSide,
  kLemma2Diagonal,
  kLemma2Arbitrary,
  kSuiteCount
};

constexpr std::array<const char*, kSuiteCount> kSuiteNames{
    "holder",           "holder_equality_diagonal", "holder_equality_power",
    "endpoint_holder",  "modulus_abs",              "lemma1",
    "lemma2_comonotone", "lemma2_lower_side",        "lemma2_diagonal",
    "lemma2_arbitrary_pairs",
};

constexpr std::array<double, 4> kExponents{1.5, 2.0, 3.0, 10.0};

struct SuiteResult {
  Verdict verdict = Verdict::kHeld;
  Witness witness;
};

}  // namespace

PropertyReport RunInequalitySuite(const IntervalCapacity& cap, int trials,
                                  std::uint64_t seed,
                                  const InequalityOptions& options) {
  if (trials < 1) throw ArgumentError("trials must be >= 1");
  const bool submodular = IsSubmodular(cap);
  const std::size_t cells = options.sample_cells;
  std::vector<std::array<SuiteResult, kSuiteCount>> results(
      static_cast<std::size_t>(trials));

  ParallelFor(results.size(), options.workers, [&](std::size_t trial) {
    auto& out = results[trial];
    if (!submodular) {
      for (auto& r : out) r.verdict = Verdict::kSkipped;
      return;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), 0x1e9u};
    Rng rng(seq);
    const int t = static_cast<int>(trial);
    auto sample = [&](std::vector<double> v) {
      return SampledFunction(cap.a(), cap.b(), std::move(v));
    };
    auto set = [&](SuiteCheck id, bool ok, double lhs, double rhs,
                   const SampledFunction& f, const SampledFunction& g) {
      out[id].verdict = ok ? Verdict::kHeld : Verdict::kFailed;
      out[id].witness =
          Witness{t, lhs, rhs, {f.values().begin(), f.values().end()},
                  {g.values().begin(), g.values().end()}};
    };

    const SampledFunction f = sample(RandomShape(rng, cells));
    const SampledFunction g = sample(RandomShape(rng, cells));
    const double p = kExponents[trial % kExponents.size()];

    HolderReport h = HolderCheck(cap, f, g, p, options.holder_tolerance);
    set(kHolder, h.slack >= -options.holder_tolerance, h.lhs, h.rhs, f, g);

    HolderReport diag = HolderCheck(cap, f, f, 2.0);
    set(kHolderDiagonal, std::abs(diag.slack) <= 1e-6, diag.lhs, diag.rhs, f, f);

    const SampledFunction f_pos = f.Abs();
    const double q = p / (p - 1.0);
    const double scale = Uniform(rng, 0.5, 2.0);
    const SampledFunction g_pow = scale * f_pos.Pow(p / q);
    HolderReport eq = HolderCheck(cap, f_pos, g_pow, p);
    set(kHolderPower, std::abs(eq.slack) <= 1e-6, eq.lhs, eq.rhs, f_pos, g_pow);

    EndpointHolderReport e = P1QInfCheck(cap, f, g, options.holder_tolerance);
    set(kEndpointHolder, e.holds, e.t_abs_fg, e.t_abs_f_sup_g, f, g);

    const double t_f = T(cap, f);
    const double t_abs = T(cap, f.Abs());
    set(kModulusAbs, std::abs(t_f) <= t_abs + options.modulus_tolerance,
        std::abs(t_f), t_abs, f, f);

    Lemma1Report l1 = Lemma1Check(cap, f, options.lemma1_tolerance);
    set(kLemma1, l1.holds, l1.value, 0.0, f, f);

    const std::vector<double> base = RandomShape(rng, cells);
    const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
    const SampledFunction co_f = sign * sample(MonotoneOf(rng, base));
    const SampledFunction co_g = sign * sample(MonotoneOf(rng, base));
    Lemma2Report l2 = Lemma2Check(cap, co_f, co_g, options.lemma2_tolerance);
    set(kLemma2Comonotone, l2.verdict == Verdict::kHeld, l2.covariance, l2.bound,
        co_f, co_g);
    set(kLemma2LowerSide, l2.lower_side_holds, -l2.signed_covariance, l2.bound,
        co_f, co_g);

    Lemma2Report l2d = Lemma2Check(cap, f, f, options.lemma2_tolerance);
    set(kLemma2Diagonal,
        l2d.verdict == Verdict::kHeld &&
            std::abs(l2d.covariance - l2d.bound) <= options.lemma2_tolerance,
        l2d.covariance, l2d.bound, f, f);

    Lemma2Report l2a = Lemma2Check(cap, f, g, options.lemma2_tolerance);
    set(kLemma2Arbitrary, l2a.verdict != Verdict::kFailed, l2a.covariance,
        l2a.bound, f, g);
    if (l2a.verdict == Verdict::kSkipped) out[kLemma2Arbitrary].verdict = Verdict::kSkipped;
  });

  PropertyReport report;
  report.subject = "inequalities:" + cap.distortion().Name();
  report.seed = seed;
  report.trials = trials;
  report.tolerance = options.holder_tolerance;
  for (int id = 0; id < kSuiteCount; ++id) {
    CheckOutcome outcome;
    outcome.name = kSuiteNames[id];
    for (const auto& trial : results) {
      ++outcome.trials;
      switch (trial[id].verdict) {
        case Verdict::kHeld:
          ++outcome.passed;
          break;
        case Verdict::kSkipped:
          ++outcome.skipped;
          break;
        case Verdict::kFailed:
          ++outcome.failed;
          if (!outcome.first_failure) outcome.first_failure = trial[id].witness;
          break;
      }
    }
    if (!submodular) {
      outcome.applicable = false;
      outcome.note = "not applicable: capacity not submodular";
    }
    report.checks.push_back(std::move(outcome));
  }
  return report;
}

}  // namespace choquet
