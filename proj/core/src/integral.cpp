#include "choquet/integral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "choquet/errors.hpp"

namespace choquet {

namespace {

struct NodeRange {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
  bool snapped = false;
  bool empty() const { return last <= first; }
};

NodeRange ResolveRegion(const SampledFunction& f, const IntervalCapacity& cap,
                        Region region) {
  const double cap_slack = 1e-12 * cap.length();
  if (region.lo < cap.a() - cap_slack || region.hi > cap.b() + cap_slack) {
    throw DomainError("integration region outside capacity interval");
  }
  const double h = f.step();
  const double f_slack = 1e-9 * h;
  if (region.lo < f.a() - f_slack || region.hi > f.b() + f_slack) {
    throw DomainError("integration region outside sampled function domain");
  }
  NodeRange r;
  if (!(region.lo < region.hi)) return r;
  const double lo_pos = (region.lo - f.a()) / h;
  const double hi_pos = (region.hi - f.a()) / h;
  const auto max_index = static_cast<double>(f.cells());
  r.first = static_cast<std::size_t>(std::clamp(std::round(lo_pos), 0.0, max_index));
  r.last = static_cast<std::size_t>(std::clamp(std::round(hi_pos), 0.0, max_index));
  r.snapped = std::abs(lo_pos - std::round(lo_pos)) > 1e-9 ||
              std::abs(hi_pos - std::round(hi_pos)) > 1e-9;
  return r;
}

// Weight of node i in the region: h inside, h/2 on the boundary.
double NodeWeight(const NodeRange& r, std::size_t i, double h) {
  return (i == r.first || i == r.last) ? 0.5 * h : h;
}

}  // namespace

void QuadratureConfig::Validate() const {
  if (level_grid < 16) throw ArgumentError("level_grid must be >= 16");
  if (!(tolerance > 0.0)) throw ArgumentError("tolerance must be > 0");
  if (refinement_factor < 2) throw ArgumentError("refinement_factor must be >= 2");
}

IntegralResult ChoquetIntegral(const SampledFunction& f,
                               const IntervalCapacity& cap, Region region) {
  const NodeRange r = ResolveRegion(f, cap, region);
  IntegralResult result;
  result.snapped = r.snapped;
  result.region = {f.node(r.first), f.node(r.last)};
  if (r.empty()) return result;

  const double h = f.step();
  std::vector<std::size_t> order(r.last - r.first + 1);
  std::iota(order.begin(), order.end(), r.first);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return f[i] > f[j];
  });
  double shift = f[order.back()];
  double weight = 0.0;
  double previous = 0.0;
  double sum = 0.0;
  for (std::size_t i : order) {
    weight += NodeWeight(r, i, h);
    double current = cap.MeasureOfLength(weight);
    sum += (f[i] - shift) * (current - previous);
    previous = current;
  }
  result.value = sum + shift * previous;
  return result;
}

double ChoquetIntegral(const SampledFunction& f, const IntervalCapacity& cap) {
  return ChoquetIntegral(f, cap, Region{cap.a(), cap.b()}).value;
}

double ChoquetOracle(const SampledFunction& f, const IntervalCapacity& cap,
                     Region region, const QuadratureConfig& config) {
  config.Validate();
  const NodeRange r = ResolveRegion(f, cap, region);
  if (r.empty()) return 0.0;
  const double h = f.step();

  // Node values ascending with suffix weights: weight{f >= t} by bisection.
  std::vector<std::pair<double, double>> nodes;
  nodes.reserve(r.last - r.first + 1);
  for (std::size_t i = r.first; i <= r.last; ++i) {
    nodes.emplace_back(f[i], NodeWeight(r, i, h));
  }
  std::sort(nodes.begin(), nodes.end());
  std::vector<double> suffix(nodes.size() + 1, 0.0);
  for (std::size_t k = nodes.size(); k-- > 0;) {
    suffix[k] = suffix[k + 1] + nodes[k].second;
  }
  const double region_capacity = cap.MeasureOfLength(suffix.front());
  auto survival = [&](double t) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), t,
                               [](const auto& node, double level) {
                                 return node.first < level;
                               });
    return cap.MeasureOfLength(suffix[static_cast<std::size_t>(it - nodes.begin())]);
  };
  auto trapezoid = [&](double from, double to, int pieces, double offset) {
    if (!(to > from) || pieces < 1) return 0.0;
    const double dt = (to - from) / pieces;
    double acc = 0.5 * ((survival(from) - offset) + (survival(to) - offset));
    for (int k = 1; k < pieces; ++k) acc += survival(from + k * dt) - offset;
    return acc * dt;
  };

  const double lower = std::min(0.0, nodes.front().first);
  const double upper = std::max(0.0, nodes.back().first);
  if (!(upper > lower)) return 0.0;
  int negative_pieces = 0;
  if (lower < 0.0) {
    negative_pieces = std::max(
        1, static_cast<int>(std::lround(config.level_grid * (-lower) / (upper - lower))));
  }
  int positive_pieces = upper > 0.0 ? std::max(1, config.level_grid - negative_pieces) : 0;
  return trapezoid(0.0, upper, positive_pieces, 0.0) +
         trapezoid(lower, 0.0, negative_pieces, region_capacity);
}

double ChoquetDiscrete(std::span<const double> values,
                       const DiscreteCapacity& cap) {
  if (values.size() != static_cast<std::size_t>(cap.ground_size())) {
    throw ArgumentError("value vector length does not match ground size");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return values[i] > values[j];
  });
  const double shift = values[order.back()];
  Subset top = 0;
  double previous = 0.0;
  double sum = 0.0;
  for (std::size_t i : order) {
    top |= Subset{1} << i;
    double current = cap.Measure(top);
    sum += (values[i] - shift) * (current - previous);
    previous = current;
  }
  return sum + shift * previous;
}

double ChoquetDiscreteOracle(std::span<const double> values,
                             const DiscreteCapacity& cap) {
  if (values.size() != static_cast<std::size_t>(cap.ground_size())) {
    throw ArgumentError("value vector length does not match ground size");
  }
  std::vector<double> breaks(values.begin(), values.end());
  breaks.push_back(0.0);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  auto upper_set = [&](double t) {
    Subset s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] >= t) s |= Subset{1} << i;
    }
    return s;
  };
  // On (breaks[j], breaks[j+1]] the level set {f >= t} is constant.
  const double total = cap.total();
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    double width = breaks[j + 1] - breaks[j];
    double level = cap.Measure(upper_set(breaks[j + 1]));
    if (breaks[j + 1] <= 0.0) {
      sum += width * (level - total);
    } else {
      sum += width * level;
    }
  }
  return sum;
}

std::vector<double> VectorChoquet(std::span<const double> values,
                                  const VectorCapacity& cap) {
  if (values.size() != static_cast<std::size_t>(cap.ground_size())) {
    throw ArgumentError("value vector length does not match ground size");
  }
  std::vector<double> out;
  out.reserve(cap.dimension());
  for (const auto& component : cap.components()) {
    out.push_back(ChoquetDiscrete(values, component));
  }
  return out;
}

}  // namespace choquet
