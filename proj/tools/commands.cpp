#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>

#include "choquet/capacity.hpp"
#include "choquet/errors.hpp"
#include "choquet/expr.hpp"
#include "choquet/inequalities.hpp"
#include "choquet/integral.hpp"
#include "choquet/korovkin.hpp"
#include "choquet/operators.hpp"
#include "choquet/parallel.hpp"
#include "choquet/properties.hpp"
#include "choquet/report_json.hpp"

namespace choquet::cli {

using nlohmann::json;

namespace {

// Sends output to --output when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw ArgumentError("cannot open output file '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

unsigned Workers(const RunConfig& config) {
  return config.workers > 0 ? config.workers : DefaultWorkerCount();
}

std::string Format(const RunConfig& config, const char* fallback) {
  return config.format.empty() ? fallback : config.format;
}

void WriteJson(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

double ResolveC(const RunConfig& config, const Distortion& u, std::ostream& err) {
  if (config.c != "estimate") {
    std::size_t used = 0;
    double c = 0.0;
    try {
      c = std::stod(config.c, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != config.c.size()) {
      throw ArgumentError("-c expects a number or 'estimate', got '" + config.c + "'");
    }
    return c;
  }
  CEstimate est = EstimateC(u);
  if (!est.bounded) {
    throw ArgumentError("no finite c with nu <= c nu_bar for " + u.Name() +
                        "; pass -c explicitly");
  }
  err << "estimated c = " << FormatReal(est.c) << '\n';
  return est.c;
}

}  // namespace

int RunIntegrate(const RunConfig& config, std::ostream& out, std::ostream&) {
  const double a = config.interval[0];
  const double b = config.interval[1];
  const IntervalCapacity cap(a, b, Distortion::Parse(config.distortion));
  const expr::Expr e = expr::Expr::Parse(config.function);
  const SampledFunction f = e.Sample(a, b, config.cells);
  QuadratureConfig quad;
  quad.level_grid = config.level_grid;
  quad.Validate();
  const double value = ChoquetIntegral(f, cap);
  const double oracle = ChoquetOracle(f, cap, {a, b}, quad);
  Sink sink(config.output, out);
  if (Format(config, "text") == "json") {
    WriteJson(sink.get(), {{"schema_version", kReportSchemaVersion},
                           {"function", e.Print()},
                           {"distortion", cap.distortion().Name()},
                           {"interval", {a, b}},
                           {"cells", config.cells},
                           {"level_grid", config.level_grid},
                           {"value", value},
                           {"oracle", oracle},
                           {"difference", value - oracle}});
  } else {
    sink.get() << "value " << FormatReal(value) << '\n'
               << "oracle " << FormatReal(oracle) << '\n'
               << "difference " << FormatReal(value - oracle) << '\n';
  }
  return kOk;
}

int RunOperator(const RunConfig& config, std::ostream& out, std::ostream&) {
  OperatorSpec spec;
  spec.family = ParseFamily(config.family);
  spec.degree = config.degree;
  spec.distortion = Distortion::Parse(config.distortion);
  spec.domain_max = config.domain_max;
  spec.workers = Workers(config);
  const expr::Expr e = expr::Expr::Parse(config.function);
  const auto xs = UniformGrid(config.window[0], config.window[1], config.grid);
  KantorovichChoquetOperator op(spec, e.AsFunction());
  const auto values = op.EvaluateGrid(xs);

  Sink sink(config.output, out);
  if (Format(config, "csv") == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      rows.push_back({{"x", xs[i]},
                      {"value", values[i].value},
                      {"terms", values[i].terms},
                      {"tail_bound", values[i].tail_bound}});
    }
    WriteJson(sink.get(), {{"schema_version", kReportSchemaVersion},
                           {"family", std::string(FamilyName(spec.family))},
                           {"degree", spec.degree},
                           {"distortion", spec.distortion.Name()},
                           {"function", e.Print()},
                           {"rows", std::move(rows)}});
  } else {
    sink.get() << "x,value\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sink.get() << FormatReal(xs[i]) << ',' << FormatReal(values[i].value) << '\n';
    }
  }
  return kOk;
}

int RunKorovkin(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Distortion u = Distortion::Parse(config.distortion);
  const expr::Expr e = expr::Expr::Parse(config.function);
  const RealFunction f = e.AsFunction();

  KorovkinConfig kc;
  kc.family = ParseFamily(config.family);
  kc.distortion = u;
  kc.ns = config.ns.empty() ? PowersOfTwo(64) : config.ns;
  kc.xs = UniformGrid(config.window[0], config.window[1], config.grid);
  kc.workers = Workers(config);
  kc.function_name = e.Print();
  if (kc.family == Family::kBernstein) {
    if (config.domain_max && *config.domain_max != 1.0) {
      throw ArgumentError("bernstein operators live on [0,1]; drop --domain-max");
    }
  } else {
    if (!config.domain_max) {
      throw ArgumentError(std::string(FamilyName(kc.family)) +
                          " needs --domain-max B to fix the sampling window [0,B]");
    }
    kc.window = *config.domain_max;
  }
  kc.c = ResolveC(config, u, err);
  const KorovkinReport report = Theorem4BoundCheck(f, kc);

  std::optional<KorovkinReport> compare;
  if (config.compare_c) {
    KorovkinConfig alt = kc;
    alt.c = *config.compare_c;
    compare = Theorem4BoundCheck(f, alt);
  }

  OperatorSpec spec;
  spec.family = kc.family;
  spec.distortion = u;
  spec.workers = kc.workers;
  if (kc.family != Family::kBernstein) spec.domain_max = kc.window;
  const ConvergenceTable table =
      MakeConvergenceTable(f, spec, kc.ns, kc.xs, kc.function_name);

  json summary = KorovkinSummary(report);
  if (compare) summary["comparison"] = KorovkinSummary(*compare);
  summary["convergence"] = ToJson(table);

  Sink sink(config.output, out);
  if (Format(config, "csv") == "json") {
    json full = ToJson(report);
    if (compare) full["comparison"] = ToJson(*compare);
    full["convergence"] = ToJson(table);
    WriteJson(sink.get(), full);
  } else {
    WriteKorovkinCsv(sink.get(), report);
    if (compare) WriteKorovkinCsv(sink.get(), *compare, false);
    if (!config.summary.empty()) {
      std::ofstream file(config.summary);
      if (!file) throw ArgumentError("cannot open summary file '" + config.summary + "'");
      WriteJson(file, summary);
    } else {
      WriteJson(sink.to_file() ? out : err, summary);
    }
  }
  return report.all_hold() ? kOk : kCheckFailed;
}

int RunProperties(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const IntervalCapacity cap(0.0, 1.0, Distortion::Parse(config.distortion));
  PropertyOptions popts;
  popts.workers = Workers(config);
  InequalityOptions iopts;
  iopts.workers = popts.workers;
  const PropertyReport integral =
      RunIntegralProperties(cap, config.trials, config.seed, popts);
  const PropertyReport inequalities =
      RunInequalitySuite(cap, config.trials, config.seed, iopts);
  const int failures = integral.total_failures() + inequalities.total_failures();

  Sink sink(config.output, out);
  WriteJson(sink.get(), {{"schema_version", kReportSchemaVersion},
                         {"distortion", cap.distortion().Name()},
                         {"submodular", IsSubmodular(cap)},
                         {"seed", config.seed},
                         {"trials", config.trials},
                         {"failures", failures},
                         {"integral", ToJson(integral)},
                         {"inequalities", ToJson(inequalities)}});
  for (const auto* report : {&integral, &inequalities}) {
    for (const auto& check : report->checks) {
      if (check.failed > 0) {
        err << check.name << ": " << check.failed << " of " << check.trials
            << " trials failed\n";
      }
    }
  }
  return failures == 0 ? kOk : kCheckFailed;
}

int RunCapacity(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Distortion u = Distortion::Parse(config.distortion);
  const Distortion dual = u.Dual();
  const auto xs = UniformGrid(0.0, 1.0, std::max<std::size_t>(config.grid, 2));
  double asymmetry = 0.0;
  for (double x : xs) asymmetry = std::max(asymmetry, std::abs(u(x) - dual(x)));
  const ConcavityVerdict concave = CheckSubmodularDistortion(u);
  const CEstimate c = EstimateC(u);

  Sink sink(config.output, out);
  std::ostream& os = sink.get();
  const std::string format = Format(config, "text");
  if (format == "json") {
    json rows = json::array();
    for (double x : xs) rows.push_back({{"x", x}, {"nu", u(x)}, {"dual", dual(x)}});
    json j{{"schema_version", kReportSchemaVersion},
           {"distortion", u.Name()},
           {"submodular", concave.concave},
           {"self_dual", asymmetry <= 1e-12},
           {"c", ToJson(c)},
           {"rows", std::move(rows)}};
    if (concave.witness) j["witness"] = {concave.witness->first, concave.witness->second};
    WriteJson(os, j);
    return kOk;
  }
  os << "x,nu,dual\n";
  for (double x : xs) {
    os << FormatReal(x) << ',' << FormatReal(u(x)) << ',' << FormatReal(dual(x)) << '\n';
  }
  if (format == "csv") return kOk;
  os << "distortion " << u.Name() << '\n';
  os << "submodular " << (concave.concave ? "yes" : "no");
  if (concave.witness) {
    os << " (midpoint concavity fails on s=" << FormatReal(concave.witness->first)
       << ", t=" << FormatReal(concave.witness->second) << ')';
  }
  os << '\n' << "self_dual " << (asymmetry <= 1e-12 ? "yes" : "no") << '\n';
  if (c.bounded) {
    os << "c " << FormatReal(c.c) << '\n';
  } else {
    os << "c unbounded (ratio exceeds " << FormatReal(CEstimateOptions{}.cap)
       << " near 0)\n";
  }
  return kOk;
}

}  // namespace choquet::cli
