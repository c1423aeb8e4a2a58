#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace choquet {

using RealFunction = std::function<double(double)>;

// A real function on [a,b] held at M+1 uniform nodes a + i(b-a)/M.
class SampledFunction {
 public:
  SampledFunction(double a, double b, std::vector<double> values);

  static SampledFunction FromFunction(const RealFunction& f, double a,
                                      double b, std::size_t cells);
  static SampledFunction Constant(double value, double a, double b,
                                  std::size_t cells);

  double a() const { return a_; }
  double b() const { return b_; }
  std::size_t cells() const { return values_.size() - 1; }
  double step() const { return (b_ - a_) / static_cast<double>(cells()); }
  double node(std::size_t i) const;
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  bool nonnegative() const { return nonnegative_; }
  std::optional<double> lipschitz() const { return lipschitz_; }
  void set_lipschitz(double l) { lipschitz_ = l; }

  double Min() const;
  double Max() const;
  double SupAbs() const;

  SampledFunction Map(const std::function<double(double)>& op) const;
  SampledFunction Abs() const;
  SampledFunction Pow(double p) const;

  // Pointwise combinations; both operands must share the same grid.
  friend SampledFunction operator+(const SampledFunction& f,
                                   const SampledFunction& g);
  friend SampledFunction operator-(const SampledFunction& f,
                                   const SampledFunction& g);
  friend SampledFunction operator*(const SampledFunction& f,
                                   const SampledFunction& g);
  friend SampledFunction operator*(double s, const SampledFunction& f);
  friend SampledFunction operator+(const SampledFunction& f, double c);
  friend SampledFunction operator-(const SampledFunction& f);
  friend SampledFunction Max(const SampledFunction& f,
                             const SampledFunction& g);
  friend SampledFunction Min(const SampledFunction& f,
                             const SampledFunction& g);

  bool SameGrid(const SampledFunction& other) const;

 private:
  double a_;
  double b_;
  std::vector<double> values_;
  bool nonnegative_ = false;
  std::optional<double> lipschitz_;
};

}  // namespace choquet
