#include "choquet/sampled_function.hpp"

#include <algorithm>
#include <cmath>

#include "choquet/errors.hpp"

namespace choquet {

namespace {

SampledFunction Combine(const SampledFunction& f, const SampledFunction& g,
                        const std::function<double(double, double)>& op) {
  if (!f.SameGrid(g)) throw ArgumentError("sampled functions differ in grid");
  std::vector<double> out(f.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f[i], g[i]);
  return SampledFunction(f.a(), f.b(), std::move(out));
}

}  // namespace

SampledFunction::SampledFunction(double a, double b, std::vector<double> values)
    : a_(a), b_(b), values_(std::move(values)) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ArgumentError("sampled function needs finite a < b");
  }
  if (values_.size() < 2) {
    throw ArgumentError("sampled function needs at least one cell");
  }
  nonnegative_ = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ArgumentError("non-finite sample at node " + std::to_string(i));
    }
    if (values_[i] < 0.0) nonnegative_ = false;
  }
}

SampledFunction SampledFunction::FromFunction(const RealFunction& f, double a,
                                              double b, std::size_t cells) {
  if (cells < 1) throw ArgumentError("sampling needs at least one cell");
  std::vector<double> values(cells + 1);
  const double h = (b - a) / static_cast<double>(cells);
  for (std::size_t i = 0; i <= cells; ++i) {
    double t = i == cells ? b : a + static_cast<double>(i) * h;
    values[i] = f(t);
  }
  return SampledFunction(a, b, std::move(values));
}

SampledFunction SampledFunction::Constant(double value, double a, double b,
                                          std::size_t cells) {
  return SampledFunction(a, b, std::vector<double>(cells + 1, value));
}

double SampledFunction::node(std::size_t i) const {
  if (i == cells()) return b_;
  return a_ + static_cast<double>(i) * step();
}

double SampledFunction::Min() const {
  return *std::min_element(values_.begin(), values_.end());
}

double SampledFunction::Max() const {
  return *std::max_element(values_.begin(), values_.end());
}

double SampledFunction::SupAbs() const {
  return std::max(std::abs(Min()), std::abs(Max()));
}

SampledFunction SampledFunction::Map(
    const std::function<double(double)>& op) const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), op);
  return SampledFunction(a_, b_, std::move(out));
}

SampledFunction SampledFunction::Abs() const {
  return Map([](double v) { return std::abs(v); });
}

SampledFunction SampledFunction::Pow(double p) const {
  return Map([p](double v) { return std::pow(v, p); });
}

SampledFunction operator+(const SampledFunction& f, const SampledFunction& g) {
  return Combine(f, g, std::plus<>());
}

SampledFunction operator-(const SampledFunction& f, const SampledFunction& g) {
  return Combine(f, g, std::minus<>());
}

SampledFunction operator*(const SampledFunction& f, const SampledFunction& g) {
  return Combine(f, g, std::multiplies<>());
}

SampledFunction operator*(double s, const SampledFunction& f) {
  return f.Map([s](double v) { return s * v; });
}

SampledFunction operator+(const SampledFunction& f, double c) {
  return f.Map([c](double v) { return v + c; });
}

SampledFunction operator-(const SampledFunction& f) {
  return f.Map([](double v) { return -v; });
}

SampledFunction Max(const SampledFunction& f, const SampledFunction& g) {
  return Combine(f, g, [](double x, double y) { return std::max(x, y); });
}

SampledFunction Min(const SampledFunction& f, const SampledFunction& g) {
  return Combine(f, g, [](double x, double y) { return std::min(x, y); });
}

bool SampledFunction::SameGrid(const SampledFunction& other) const {
  return a_ == other.a_ && b_ == other.b_ &&
         values_.size() == other.values_.size();
}

}  // namespace choquet
