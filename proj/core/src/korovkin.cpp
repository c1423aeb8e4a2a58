#include "choquet/korovkin.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "choquet/errors.hpp"

namespace choquet {

namespace {

std::size_t WindowCells(const SampledFunction& f, double delta) {
  if (!(delta >= 0.0)) throw ArgumentError("omega_1 needs delta >= 0");
  if (delta == 0.0) return 0;
  const double cells = std::ceil(delta / f.step() - 1e-9);
  if (cells >= static_cast<double>(f.cells())) return f.cells();
  return static_cast<std::size_t>(std::max(1.0, cells));
}

OperatorSpec WithDegree(OperatorSpec spec, int n) {
  spec.degree = n;
  return spec;
}

}  // namespace

double ModulusOfContinuity(const SampledFunction& f, double delta) {
  const std::size_t k = WindowCells(f, delta);
  if (k == 0) return 0.0;
  if (k >= f.cells()) return f.Max() - f.Min();
  // Deques of indices with monotone values over the window [i-k, i].
  std::deque<std::size_t> lows;
  std::deque<std::size_t> highs;
  double best = 0.0;
  const std::size_t count = f.values().size();
  for (std::size_t i = 0; i < count; ++i) {
    while (!lows.empty() && f[lows.back()] >= f[i]) lows.pop_back();
    while (!highs.empty() && f[highs.back()] <= f[i]) highs.pop_back();
    lows.push_back(i);
    highs.push_back(i);
    if (lows.front() + k < i) lows.pop_front();
    if (highs.front() + k < i) highs.pop_front();
    best = std::max(best, f[highs.front()] - f[lows.front()]);
  }
  return best;
}

double ModulusOfContinuityBruteForce(const SampledFunction& f, double delta) {
  const std::size_t k = WindowCells(f, delta);
  double best = 0.0;
  const std::size_t count = f.values().size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count && j <= i + k; ++j) {
      best = std::max(best, std::abs(f[i] - f[j]));
    }
  }
  return best;
}

DeltaTerms Theorem4DeltaTerms(const OperatorSpec& spec, double x,
                              bool with_proof_delta) {
  DeltaTerms d;
  d.k_neg_t = KantorovichChoquetOperator(spec, [](double t) { return -t; })
                  .Evaluate(x)
                  .value;
  d.k_t2 = KantorovichChoquetOperator(spec, [](double t) { return t * t; })
               .Evaluate(x)
               .value;
  d.radicand = x * x + 2.0 * x * d.k_neg_t + d.k_t2;
  d.delta = std::sqrt(std::max(0.0, d.radicand));
  if (with_proof_delta) {
    d.proof_delta =
        std::abs(KantorovichChoquetOperator(
                     spec, [x](double t) { return -std::abs(t - x); })
                     .Evaluate(x)
                     .value);
  }
  return d;
}

double Theorem4Delta(const Distortion& u, int n, double x) {
  OperatorSpec spec;
  spec.family = Family::kBernstein;
  spec.degree = n;
  spec.distortion = u;
  return Theorem4DeltaTerms(spec, x).delta;
}

int KorovkinReport::violations() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const KorovkinRow& r) { return !r.holds; }));
}

double KorovkinReport::max_slack_utilization() const {
  double worst = 0.0;
  for (const auto& r : rows) {
    if (r.bound > 0.0) {
      worst = std::max(worst, r.abs_error / r.bound);
    } else if (r.abs_error > kBoundTolerance) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return worst;
}

KorovkinReport Theorem4BoundCheck(const RealFunction& f,
                                  const KorovkinConfig& config) {
  if (!(config.c >= 1.0)) throw ArgumentError("Theorem 4 needs c >= 1");
  if (config.ns.empty() || config.xs.empty()) {
    throw ArgumentError("Theorem 4 check needs nonempty n and x lists");
  }
  if (config.family == Family::kBernstein && config.window != 1.0) {
    throw ArgumentError("the Bernstein family lives on [0,1]; window must be 1");
  }
  if (!(config.window > 0.0)) throw ArgumentError("window must be positive");
  if (config.omega_cells < 2) throw ArgumentError("omega_cells must be >= 2");

  const SampledFunction sampled =
      SampledFunction::FromFunction(f, 0.0, config.window, config.omega_cells);
  for (std::size_t i = 0; i < sampled.values().size(); ++i) {
    if (sampled[i] < 0.0) {
      std::ostringstream os;
      os << "Theorem 4 applies to nonnegative functions only; f("
         << sampled.node(i) << ") = " << sampled[i] << " < 0";
      throw PreconditionError(os.str());
    }
  }

  OperatorSpec base;
  base.family = config.family;
  base.distortion = config.distortion;
  base.samples_per_cell = config.samples_per_cell;
  base.workers = config.workers;
  if (config.family != Family::kBernstein) base.domain_max = config.window;

  KorovkinReport report;
  report.family = config.family;
  report.distortion = config.distortion.Name();
  report.function = config.function_name;
  report.c = config.c;
  report.window = config.window;
  report.omega_cells = config.omega_cells;

  for (int n : config.ns) {
    const OperatorSpec spec = WithDegree(base, n);
    KantorovichChoquetOperator kf(spec, f);
    KantorovichChoquetOperator k_neg_t(spec, [](double t) { return -t; });
    KantorovichChoquetOperator k_t2(spec, [](double t) { return t * t; });
    const auto values = kf.EvaluateGrid(config.xs);
    const auto neg_t = k_neg_t.EvaluateGrid(config.xs);
    const auto t2 = k_t2.EvaluateGrid(config.xs);
    for (std::size_t i = 0; i < config.xs.size(); ++i) {
      KorovkinRow row;
      row.n = n;
      row.x = config.xs[i];
      row.fx = f(row.x);
      row.knfx = values[i].value;
      row.abs_error = std::abs(row.knfx - row.fx);
      row.radicand = row.x * row.x + 2.0 * row.x * neg_t[i].value + t2[i].value;
      row.delta = std::sqrt(std::max(0.0, row.radicand));
      row.omega = ModulusOfContinuity(sampled, row.delta);
      row.bound = (config.c + 1.0) * row.omega;
      row.holds = row.abs_error <= row.bound + kBoundTolerance;
      report.rows.push_back(row);
    }
  }
  return report;
}

double ConvergenceTable::SupError(int n) const {
  for (const auto& r : rows) {
    if (r.n == n) return r.sup_error;
  }
  throw ArgumentError("degree " + std::to_string(n) + " not in the table");
}

ConvergenceTable MakeConvergenceTable(const RealFunction& f,
                                      const OperatorSpec& spec,
                                      std::vector<int> ns,
                                      const std::vector<double>& xs,
                                      std::string function_name) {
  if (ns.empty() || xs.empty()) {
    throw ArgumentError("convergence table needs nonempty n and x lists");
  }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  ConvergenceTable table;
  table.family = spec.family;
  table.distortion = spec.distortion.Name();
  table.function = std::move(function_name);
  for (int n : ns) {
    KantorovichChoquetOperator op(WithDegree(spec, n), f);
    const auto values = op.EvaluateGrid(xs);
    ConvergenceRow row;
    row.n = n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double err = std::abs(values[i].value - f(xs[i]));
      if (err > row.sup_error) {
        row.sup_error = err;
        row.argmax = xs[i];
      }
    }
    table.rows.push_back(row);
  }
  table.improves = table.rows.back().sup_error < table.rows.front().sup_error;
  table.strictly_decreasing = table.rows.size() > 1;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (!(table.rows[i].sup_error < table.rows[i - 1].sup_error)) {
      table.strictly_decreasing = false;
    }
  }
  return table;
}

std::vector<int> PowersOfTwo(int max_n) {
  std::vector<int> out;
  for (int n = 1; n <= max_n; n *= 2) out.push_back(n);
  return out;
}

std::vector<double> UniformGrid(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  out.back() = hi;
  return out;
}

}  // namespace choquet
