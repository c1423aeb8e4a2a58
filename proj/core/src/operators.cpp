#include "choquet/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "choquet/errors.hpp"
#include "choquet/integral.hpp"
#include "choquet/parallel.hpp"

namespace choquet {

namespace {

// Fills weights[0..last] given the log of the mode term and the forward
// ratio r(k) = w_{k+1} / w_k.
template <typename Ratio>
void FillFromMode(std::vector<double>& weights, std::size_t mode,
                  double log_mode, Ratio ratio) {
  weights[mode] = std::exp(log_mode);
  for (std::size_t k = mode; k > 0; --k) {
    double r = ratio(k - 1);
    weights[k - 1] = r > 0.0 ? weights[k] / r : 0.0;
  }
  for (std::size_t k = mode + 1; k < weights.size(); ++k) {
    weights[k] = weights[k - 1] * ratio(k - 1);
  }
}

BasisWeights BernsteinWeights(int n, double x) {
  BasisWeights out;
  out.weights.assign(static_cast<std::size_t>(n) + 1, 0.0);
  if (x <= 0.0) {
    out.weights.front() = 1.0;
  } else if (x >= 1.0) {
    out.weights.back() = 1.0;
  } else {
    const auto mode = static_cast<std::size_t>(
        std::clamp(std::floor((n + 1) * x), 0.0, static_cast<double>(n)));
    const double m = static_cast<double>(mode);
    const double log_mode = std::lgamma(n + 1.0) - std::lgamma(m + 1.0) -
                            std::lgamma(n - m + 1.0) + m * std::log(x) +
                            (n - m) * std::log1p(-x);
    const double odds = x / (1.0 - x);
    FillFromMode(out.weights, mode, log_mode, [&](std::size_t k) {
      return static_cast<double>(n - static_cast<int>(k)) / (k + 1.0) * odds;
    });
  }
  for (double w : out.weights) out.retained_mass += w;
  out.tail_bound = 0.0;
  return out;
}

// Shared truncation loop for the two infinite families.
template <typename Ratio>
BasisWeights InfiniteWeights(double mean, double variance, std::size_t mode,
                             double log_mode, Ratio ratio,
                             const Truncation& truncation) {
  BasisWeights out;
  const auto min_terms = static_cast<std::size_t>(
      std::ceil(mean + 10.0 * std::sqrt(variance + 1.0))) + 1;
  out.weights.assign(std::max(min_terms, mode + 1), 0.0);
  FillFromMode(out.weights, mode, log_mode, ratio);
  double sum = 0.0;
  for (double w : out.weights) sum += w;
  // Past the mode the ratios decrease, so the remaining mass is at most
  // w_last r / (1 - r) with r the next ratio. Using 1 - sum instead would
  // stall on the rounding error of the log-space mode term.
  auto tail = [&] {
    const double r = ratio(out.weights.size() - 1);
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return out.weights.back() * r / (1.0 - r);
  };
  double bound = tail();
  std::size_t extra = 0;
  while (bound >= truncation.tail_tolerance) {
    if (extra++ >= truncation.max_extra_terms) {
      out.converged = false;
      break;
    }
    double next = out.weights.back() * ratio(out.weights.size() - 1);
    if (next == 0.0) {
      bound = 0.0;
      break;
    }
    out.weights.push_back(next);
    sum += next;
    bound = tail();
  }
  out.retained_mass = sum;
  out.tail_bound = bound;
  return out;
}

BasisWeights PoissonWeights(int n, double x, const Truncation& truncation) {
  if (x == 0.0) {
    BasisWeights out;
    out.weights = {1.0};
    out.retained_mass = 1.0;
    return out;
  }
  const double lambda = n * x;
  const auto mode = static_cast<std::size_t>(std::floor(lambda));
  const double m = static_cast<double>(mode);
  const double log_mode = -lambda + m * std::log(lambda) - std::lgamma(m + 1.0);
  return InfiniteWeights(lambda, lambda, mode, log_mode,
                         [lambda](std::size_t k) { return lambda / (k + 1.0); },
                         truncation);
}

BasisWeights NegativeBinomialWeights(int n, double x,
                                     const Truncation& truncation) {
  if (x == 0.0) {
    BasisWeights out;
    out.weights = {1.0};
    out.retained_mass = 1.0;
    return out;
  }
  const double p = x / (1.0 + x);
  const auto mode = static_cast<std::size_t>(std::floor((n - 1) * x));
  const double m = static_cast<double>(mode);
  const double log_mode = std::lgamma(n + m) - std::lgamma(m + 1.0) -
                          std::lgamma(static_cast<double>(n)) + m * std::log(p) -
                          n * std::log1p(x);
  return InfiniteWeights(
      n * x, n * x * (1.0 + x), mode, log_mode,
      [n, p](std::size_t k) { return (n + static_cast<double>(k)) / (k + 1.0) * p; },
      truncation);
}

std::string FormatDouble(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

Family ParseFamily(std::string_view name) {
  if (name == "bernstein") return Family::kBernstein;
  if (name == "szasz") return Family::kSzasz;
  if (name == "baskakov") return Family::kBaskakov;
  throw ArgumentError("unknown operator family '" + std::string(name) +
                      "' (expected bernstein, szasz or baskakov)");
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kBernstein:
      return "bernstein";
    case Family::kSzasz:
      return "szasz";
    case Family::kBaskakov:
      return "baskakov";
  }
  return "?";
}

void Truncation::Validate() const {
  if (!(tail_tolerance > 0.0 && tail_tolerance <= 1e-3)) {
    throw ArgumentError("tail tolerance must lie in (0, 1e-3]");
  }
}

void OperatorSpec::Validate() const {
  if (degree < 1) throw ArgumentError("operator degree must be >= 1");
  if (samples_per_cell < 1) throw ArgumentError("samples_per_cell must be >= 1");
  truncation.Validate();
}

BasisWeights ComputeWeights(Family family, int degree, double x,
                            const Truncation& truncation) {
  if (degree < 1) throw ArgumentError("operator degree must be >= 1");
  if (!std::isfinite(x)) throw DomainError("evaluation point must be finite");
  switch (family) {
    case Family::kBernstein:
      if (x < 0.0 || x > 1.0) {
        throw DomainError("bernstein operators are defined on [0,1], got x=" +
                          FormatDouble(x));
      }
      return BernsteinWeights(degree, x);
    case Family::kSzasz:
      if (x < 0.0) throw DomainError("szasz operators need x >= 0");
      return PoissonWeights(degree, x, truncation);
    case Family::kBaskakov:
      if (x < 0.0) throw DomainError("baskakov operators need x >= 0");
      return NegativeBinomialWeights(degree, x, truncation);
  }
  return {};
}

std::pair<double, double> CellBounds(Family family, int degree, std::size_t k) {
  const double denom = family == Family::kBernstein ? degree + 1.0 : degree;
  return {static_cast<double>(k) / denom, static_cast<double>(k + 1) / denom};
}

double CellMean(const RealFunction& f, const Distortion& u, double lo, double hi,
                std::size_t samples) {
  const SampledFunction sampled = SampledFunction::FromFunction(f, lo, hi, samples);
  const IntervalCapacity cap(lo, hi, u);
  return ChoquetIntegral(sampled, cap) / cap.MeasureOfLength(cap.length());
}

double CellMean(const SampledFunction& f, const Distortion& u, double lo,
                double hi) {
  const double h = f.step();
  if (lo < f.a() - 1e-9 * h || hi > f.b() + 1e-9 * h || !(lo < hi)) {
    throw ArgumentError("cell outside the sampled function's domain");
  }
  if ((hi - lo) / h < 32.0 - 1e-9) {
    throw ArgumentError("cell needs at least 32 samples");
  }
  const IntervalCapacity cap(lo, hi, u);
  const IntegralResult r = ChoquetIntegral(f, cap, Region{lo, hi});
  if (r.snapped) throw ArgumentError("cell is not aligned with the sample grid");
  return r.value / cap.MeasureOfLength(cap.length());
}

KantorovichChoquetOperator::KantorovichChoquetOperator(OperatorSpec spec,
                                                       RealFunction f)
    : spec_(std::move(spec)), f_(std::move(f)) {
  spec_.Validate();
}

void KantorovichChoquetOperator::CheckWindow(std::size_t cells) const {
  if (!spec_.domain_max || cells == 0) return;
  const double required = CellBounds(spec_.family, spec_.degree, cells - 1).second;
  if (required > *spec_.domain_max * (1.0 + 1e-12)) {
    throw WindowError("sampling window [0," + FormatDouble(*spec_.domain_max) +
                          "] too small: " + std::to_string(cells) +
                          " cells need B >= " + FormatDouble(required),
                      required);
  }
}

void KantorovichChoquetOperator::EnsureCells(std::size_t count) {
  const std::size_t have = means_.size();
  if (count <= have) return;
  means_.resize(count);
  ParallelFor(count - have, spec_.workers, [&](std::size_t i) {
    const std::size_t k = have + i;
    auto [lo, hi] = CellBounds(spec_.family, spec_.degree, k);
    means_[k] = CellMean(f_, spec_.distortion, lo, hi, spec_.samples_per_cell);
  });
}

OperatorValue KantorovichChoquetOperator::Combine(const BasisWeights& w) const {
  OperatorValue out;
  for (std::size_t k = 0; k < w.weights.size(); ++k) {
    if (w.weights[k] != 0.0) out.value += w.weights[k] * means_[k];
  }
  out.terms = w.weights.size();
  out.retained_mass = w.retained_mass;
  out.tail_bound = w.tail_bound;
  return out;
}

OperatorValue KantorovichChoquetOperator::Evaluate(double x) {
  BasisWeights w = ComputeWeights(spec_.family, spec_.degree, x, spec_.truncation);
  CheckWindow(w.weights.size());
  EnsureCells(w.weights.size());
  return Combine(w);
}

std::vector<OperatorValue> KantorovichChoquetOperator::EvaluateGrid(
    std::span<const double> xs) {
  std::vector<BasisWeights> weights(xs.size());
  std::size_t widest = 0;
  std::size_t widest_index = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      weights[i] = ComputeWeights(spec_.family, spec_.degree, xs[i], spec_.truncation);
    } catch (const DomainError& e) {
      throw DomainError("grid index " + std::to_string(i) + ": " + e.what());
    }
    if (weights[i].weights.size() > widest) {
      widest = weights[i].weights.size();
      widest_index = i;
    }
  }
  try {
    CheckWindow(widest);
  } catch (const WindowError& e) {
    throw WindowError("grid index " + std::to_string(widest_index) + ": " + e.what(),
                      e.required_bound());
  }
  EnsureCells(widest);
  std::vector<OperatorValue> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = Combine(weights[i]);
  return out;
}

OperatorValue BernsteinKC(const RealFunction& f, int n, const Distortion& u,
                          double x, std::size_t samples_per_cell) {
  OperatorSpec spec;
  spec.family = Family::kBernstein;
  spec.degree = n;
  spec.distortion = u;
  spec.samples_per_cell = samples_per_cell;
  return KantorovichChoquetOperator(spec, f).Evaluate(x);
}

OperatorValue SzaszKC(const RealFunction& f, int n, const Distortion& u,
                      double x, const Truncation& truncation,
                      std::size_t samples_per_cell,
                      std::optional<double> domain_max) {
  OperatorSpec spec;
  spec.family = Family::kSzasz;
  spec.degree = n;
  spec.distortion = u;
  spec.truncation = truncation;
  spec.samples_per_cell = samples_per_cell;
  spec.domain_max = domain_max;
  return KantorovichChoquetOperator(spec, f).Evaluate(x);
}

OperatorValue BaskakovKC(const RealFunction& f, int n, const Distortion& u,
                         double x, const Truncation& truncation,
                         std::size_t samples_per_cell,
                         std::optional<double> domain_max) {
  OperatorSpec spec;
  spec.family = Family::kBaskakov;
  spec.degree = n;
  spec.distortion = u;
  spec.truncation = truncation;
  spec.samples_per_cell = samples_per_cell;
  spec.domain_max = domain_max;
  return KantorovichChoquetOperator(spec, f).Evaluate(x);
}

std::vector<double> EvalGrid(const OperatorSpec& spec, const RealFunction& f,
                             std::span<const double> xs) {
  KantorovichChoquetOperator op(spec, f);
  std::vector<double> out;
  out.reserve(xs.size());
  for (const auto& v : op.EvaluateGrid(xs)) out.push_back(v.value);
  return out;
}

}  // namespace choquet
