#include "choquet/capacity.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "choquet/errors.hpp"

namespace choquet {

namespace {

constexpr double kEndpointTol = 1e-12;

double ParseReal(std::string_view text, std::string_view what) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ArgumentError("invalid " + std::string(what) + ": '" +
                        std::string(text) + "'");
  }
  return value;
}

}  // namespace

Distortion Distortion::Identity() { return Distortion(Kind::kIdentity, 1.0); }

Distortion Distortion::Power(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ArgumentError("power distortion needs alpha > 0");
  }
  if (alpha == 1.0) return Identity();
  return Distortion(Kind::kPower, alpha);
}

Distortion Distortion::Moebius() { return Distortion(Kind::kMoebius, 0.0); }

Distortion Distortion::Tabulated(std::vector<double> ts,
                                 std::vector<double> us) {
  if (ts.size() != us.size() || ts.size() < 2) {
    throw ArgumentError("tabulated distortion needs >= 2 matching samples");
  }
  if (std::abs(ts.front()) > kEndpointTol ||
      std::abs(ts.back() - 1.0) > kEndpointTol) {
    throw ArgumentError("tabulated distortion must span t in [0,1]");
  }
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (!(ts[i] > ts[i - 1])) {
      throw ArgumentError("tabulated distortion t column must be strictly "
                          "increasing (row " + std::to_string(i) + ")");
    }
    if (us[i] < us[i - 1]) {
      throw ArgumentError("tabulated distortion must be nondecreasing (row " +
                          std::to_string(i) + ")");
    }
  }
  if (std::abs(us.front()) > kEndpointTol ||
      std::abs(us.back() - 1.0) > kEndpointTol) {
    throw ArgumentError("tabulated distortion needs u(0)=0 and u(1)=1");
  }
  ts.front() = 0.0;
  ts.back() = 1.0;
  Distortion d(Kind::kTabulated, 0.0);
  d.ts_ = std::make_shared<const std::vector<double>>(std::move(ts));
  d.us_ = std::make_shared<const std::vector<double>>(std::move(us));
  return d;
}

Distortion Distortion::FromCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open distortion table " + path.string());
  std::vector<double> ts;
  std::vector<double> us;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ArgumentError(path.string() + ":" + std::to_string(line_no) +
                          ": expected two columns");
    }
    std::string_view row(line);
    double t = 0.0;
    try {
      t = ParseReal(row.substr(0, comma), "t value");
    } catch (const ArgumentError&) {
      if (ts.empty()) continue;  // header line
      throw;
    }
    ts.push_back(t);
    us.push_back(ParseReal(row.substr(comma + 1), "u value"));
  }
  return Tabulated(std::move(ts), std::move(us));
}

Distortion Distortion::Parse(std::string_view spec) {
  if (spec == "identity") return Identity();
  if (spec == "moebius") return Moebius();
  if (spec.starts_with("power:")) {
    return Power(ParseReal(spec.substr(6), "power exponent"));
  }
  if (spec.starts_with("table:")) {
    return FromCsv(std::filesystem::path(std::string(spec.substr(6))));
  }
  throw ArgumentError("unknown distortion '" + std::string(spec) +
                      "' (expected identity, power:<alpha>, moebius or "
                      "table:<path>)");
}

Distortion Distortion::Dual() const {
  switch (kind_) {
    case Kind::kIdentity:
      return *this;
    case Kind::kDual:
      return *base_;
    default: {
      Distortion d(Kind::kDual, 0.0);
      d.base_ = std::make_shared<const Distortion>(*this);
      return d;
    }
  }
}

Distortion Distortion::Raised(double gamma) const {
  if (!(gamma > 0.0)) throw ArgumentError("raised distortion needs gamma > 0");
  Distortion d(Kind::kRaised, gamma);
  d.base_ = std::make_shared<const Distortion>(*this);
  return d;
}

double Distortion::operator()(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  switch (kind_) {
    case Kind::kIdentity:
      return t;
    case Kind::kPower:
      return std::pow(t, param_);
    case Kind::kMoebius:
      return 2.0 * t / (t + 1.0);
    case Kind::kTabulated: {
      const auto& ts = *ts_;
      const auto& us = *us_;
      auto it = std::upper_bound(ts.begin(), ts.end(), t);
      if (it == ts.end()) return us.back();
      std::size_t hi = static_cast<std::size_t>(it - ts.begin());
      std::size_t lo = hi - 1;
      double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
      return us[lo] + w * (us[hi] - us[lo]);
    }
    case Kind::kDual:
      return 1.0 - (*base_)(1.0 - t);
    case Kind::kRaised:
      return std::pow((*base_)(t), param_);
  }
  return t;
}

std::string Distortion::Name() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kPower:
      os << "power:" << param_;
      return os.str();
    case Kind::kMoebius:
      return "moebius";
    case Kind::kTabulated:
      return "table";
    case Kind::kDual:
      return "dual(" + base_->Name() + ")";
    case Kind::kRaised:
      os << "raised(" << base_->Name() << "," << param_ << ")";
      return os.str();
  }
  return "?";
}

IntervalCapacity::IntervalCapacity(double a, double b, Distortion distortion)
    : a_(a), b_(b), distortion_(std::move(distortion)) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ArgumentError("interval capacity needs finite a < b");
  }
}

double IntervalCapacity::MeasureOfLength(double len) const {
  if (len <= 0.0) return 0.0;
  return distortion_(len / length());
}

double IntervalCapacity::Measure(const IntervalSet& set) const {
  const double slack = 1e-12 * length();
  IntervalSet parts;
  parts.reserve(set.size());
  for (auto [lo, hi] : set) {
    if (!(lo <= hi)) throw DomainError("interval component with lo > hi");
    if (lo < a_ - slack || hi > b_ + slack) {
      throw DomainError("interval component outside capacity domain");
    }
    if (hi > lo) parts.emplace_back(std::max(lo, a_), std::min(hi, b_));
  }
  std::sort(parts.begin(), parts.end());
  double total = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i].first < parts[i - 1].second - slack) {
      throw DomainError("interval components overlap");
    }
    total += parts[i].second - parts[i].first;
  }
  return MeasureOfLength(total);
}

IntervalCapacity IntervalCapacity::Dual() const {
  return IntervalCapacity(a_, b_, distortion_.Dual());
}

DiscreteCapacity::DiscreteCapacity(int ground_size, std::vector<double> table)
    : n_(ground_size), table_(std::move(table)) {
  if (n_ < 1 || n_ > kMaxGroundSize) {
    throw ArgumentError("discrete capacity ground size must be in [1,16]");
  }
  if (table_.size() != (std::size_t{1} << n_)) {
    throw ArgumentError("discrete capacity table needs 2^n entries");
  }
  if (table_[0] != 0.0) throw ArgumentError("capacity of empty set must be 0");
  for (Subset s = 0; s < table_.size(); ++s) {
    if (!std::isfinite(table_[s]) || table_[s] < 0.0) {
      throw ArgumentError("capacity values must be finite and nonnegative");
    }
    for (int i = 0; i < n_; ++i) {
      Subset bigger = s | (Subset{1} << i);
      if (bigger != s && table_[bigger] < table_[s]) {
        throw ArgumentError("capacity is not monotone: mu(" + FormatSubset(s) +
                            ") > mu(" + FormatSubset(bigger) + ")");
      }
    }
  }
}

DiscreteCapacity DiscreteCapacity::Additive(const std::vector<double>& weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 1 || n > kMaxGroundSize) {
    throw ArgumentError("discrete capacity ground size must be in [1,16]");
  }
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (Subset s = 1; s < table.size(); ++s) {
    int low = std::countr_zero(s);
    table[s] = table[s & (s - 1)] + weights[low];
  }
  return DiscreteCapacity(n, std::move(table));
}

DiscreteCapacity DiscreteCapacity::FromCardinality(
    int ground_size, const std::vector<double>& by_size) {
  if (ground_size < 1 || ground_size > kMaxGroundSize) {
    throw ArgumentError("discrete capacity ground size must be in [1,16]");
  }
  if (by_size.size() != static_cast<std::size_t>(ground_size) + 1) {
    throw ArgumentError("cardinality table needs n+1 entries");
  }
  std::vector<double> table(std::size_t{1} << ground_size);
  for (Subset s = 0; s < table.size(); ++s) table[s] = by_size[std::popcount(s)];
  return DiscreteCapacity(ground_size, std::move(table));
}

DiscreteCapacity DiscreteCapacity::FromDistortion(int ground_size,
                                                  const Distortion& u) {
  std::vector<double> by_size(static_cast<std::size_t>(ground_size) + 1);
  for (int k = 0; k <= ground_size; ++k) {
    by_size[k] = u(static_cast<double>(k) / ground_size);
  }
  by_size[0] = 0.0;
  return FromCardinality(ground_size, by_size);
}

double DiscreteCapacity::Measure(Subset s) const {
  if (s > full_set()) {
    throw DomainError("subset " + FormatSubset(s) + " outside ground set");
  }
  return table_[s];
}

bool DiscreteCapacity::normalized(double tol) const {
  return std::abs(total() - 1.0) <= tol;
}

bool DiscreteCapacity::IsAdditive(double tol) const {
  for (Subset s = 1; s <= full_set(); ++s) {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i) {
      if (s & (Subset{1} << i)) sum += table_[Subset{1} << i];
    }
    if (std::abs(sum - table_[s]) > tol) return false;
  }
  return true;
}

DiscreteCapacity DiscreteCapacity::Dual() const {
  std::vector<double> table(table_.size());
  const Subset full = full_set();
  for (Subset s = 0; s <= full; ++s) {
    table[s] = std::max(0.0, total() - table_[full & ~s]);
  }
  table[0] = 0.0;
  return DiscreteCapacity(n_, std::move(table));
}

VectorCapacity::VectorCapacity(std::vector<DiscreteCapacity> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw ArgumentError("vector capacity needs at least one component");
  }
  for (const auto& c : components_) {
    if (c.ground_size() != components_.front().ground_size()) {
      throw ArgumentError("vector capacity components differ in ground size");
    }
  }
}

std::vector<double> VectorCapacity::Measure(Subset s) const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.Measure(s));
  return out;
}

SubmodularVerdict CheckSubmodular(const DiscreteCapacity& cap, double tol) {
  SubmodularVerdict verdict;
  const Subset full = cap.full_set();
  const auto& mu = cap.table();
  if (cap.ground_size() <= 12) {
    for (Subset a = 0; a <= full; ++a) {
      for (Subset b = a + 1; b <= full; ++b) {
        double excess = mu[a | b] + mu[a & b] - mu[a] - mu[b];
        if (excess > tol) {
          verdict.submodular = false;
          verdict.witness = {a, b};
          verdict.excess = excess;
          return verdict;
        }
      }
    }
    return verdict;
  }
  const int n = cap.ground_size();
  for (Subset a = 0; a <= full; ++a) {
    for (int i = 0; i < n; ++i) {
      Subset bi = Subset{1} << i;
      if (a & bi) continue;
      for (int j = i + 1; j < n; ++j) {
        Subset bj = Subset{1} << j;
        if (a & bj) continue;
        double excess = mu[a | bi | bj] + mu[a] - mu[a | bi] - mu[a | bj];
        if (excess > tol) {
          verdict.submodular = false;
          verdict.witness = {a | bi, a | bj};
          verdict.excess = excess;
          return verdict;
        }
      }
    }
  }
  return verdict;
}

ConcavityVerdict CheckSubmodularDistortion(const Distortion& u, int grid_size,
                                           double tol) {
  if (grid_size < 3) throw ArgumentError("grid_size must be >= 3");
  std::vector<double> grid(static_cast<std::size_t>(grid_size));
  std::vector<double> values(grid.size());
  for (int i = 0; i < grid_size; ++i) {
    grid[i] = static_cast<double>(i) / (grid_size - 1);
    values[i] = u(grid[i]);
  }
  ConcavityVerdict verdict;
  for (int i = 0; i < grid_size; ++i) {
    for (int j = i + 2; j < grid_size; ++j) {
      double mid = u(0.5 * (grid[i] + grid[j]));
      if (mid < 0.5 * (values[i] + values[j]) - tol) {
        verdict.concave = false;
        verdict.witness = {grid[i], grid[j]};
        return verdict;
      }
    }
  }
  return verdict;
}

CEstimate EstimateC(const Distortion& u, int grid_size,
                    const CEstimateOptions& options) {
  if (grid_size < 1) throw ArgumentError("grid_size must be >= 1");
  CEstimate est;
  auto ratio_at = [&](double x) {
    double num = u(x);
    double den = 1.0 - u(1.0 - x);
    if (num <= 0.0) return 0.0;
    if (den <= 0.0) return std::numeric_limits<double>::infinity();
    return num / den;
  };
  double sup = 0.0;
  for (int k = 1; k <= grid_size; ++k) {
    double x = static_cast<double>(k) / grid_size;
    double r = ratio_at(x);
    if (r > sup) {
      sup = r;
      est.argmax = x;
    }
  }
  est.raw_sup = sup;
  bool diverges = !(sup <= options.cap);
  // Probe geometrically toward 0 below the grid's first node.
  for (double x = 0.5 / grid_size; !diverges && x >= options.probe_floor;
       x *= 0.5) {
    double r = ratio_at(x);
    if (r > est.raw_sup) est.raw_sup = r;
    if (!(r <= options.cap)) diverges = true;
  }
  if (diverges) {
    est.bounded = false;
    est.c = std::numeric_limits<double>::infinity();
    return est;
  }
  est.c = std::max(1.0, std::ceil(sup * 1e6 - 1e-3) / 1e6);
  return est;
}

NullComplementVerdict NullComplementCheck(const DiscreteCapacity& cap,
                                          double tol) {
  NullComplementVerdict verdict;
  if (!cap.normalized(tol)) {
    verdict.status = NullComplementVerdict::Status::kSkipped;
    verdict.reason = "precondition: capacity is not normalized";
    return verdict;
  }
  if (!CheckSubmodular(cap, tol).submodular) {
    verdict.status = NullComplementVerdict::Status::kSkipped;
    verdict.reason = "precondition: capacity is not submodular";
    return verdict;
  }
  const Subset full = cap.full_set();
  for (Subset s = 0; s <= full; ++s) {
    if (cap.Measure(s) <= tol && cap.Measure(full & ~s) < 1.0 - tol) {
      verdict.witnesses.push_back(s);
    }
  }
  if (!verdict.witnesses.empty()) {
    verdict.status = NullComplementVerdict::Status::kFailed;
    verdict.reason = "null set with complement of capacity < 1";
  }
  return verdict;
}

std::string FormatSubset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1u) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace choquet
