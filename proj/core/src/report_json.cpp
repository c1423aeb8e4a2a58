#include "choquet/report_json.hpp"

#include <charconv>
#include <cmath>

namespace choquet {

using nlohmann::json;

namespace {

// JSON has no infinities; they are written as strings.
json Real(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string FormatReal(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

json ToJson(const Witness& w) {
  return json{{"trial", w.trial}, {"lhs", Real(w.lhs)}, {"rhs", Real(w.rhs)},
              {"f", w.f}, {"g", w.g}};
}

json ToJson(const CheckOutcome& c) {
  json j{{"check", c.name},     {"applicable", c.applicable},
         {"trials", c.trials},  {"passed", c.passed},
         {"failed", c.failed},  {"skipped", c.skipped}};
  if (!c.note.empty()) j["note"] = c.note;
  j["first_failure"] = c.first_failure ? ToJson(*c.first_failure) : json(nullptr);
  return j;
}

json ToJson(const PropertyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(ToJson(c));
  return json{{"schema_version", kReportSchemaVersion},
              {"subject", r.subject},
              {"seed", r.seed},
              {"trials", r.trials},
              {"tolerance", r.tolerance},
              {"failures", r.total_failures()},
              {"checks", std::move(checks)}};
}

json ToJson(const HolderReport& r) {
  return json{{"check", "holder"}, {"p", r.p},         {"q", r.q},
              {"lhs", Real(r.lhs)}, {"rhs", Real(r.rhs)}, {"slack", Real(r.slack)},
              {"verdict", r.holds ? "held" : "failed"}};
}

json ToJson(const EndpointHolderReport& r) {
  return json{{"check", "endpoint_holder"},
              {"abs_t_fg", Real(r.abs_t_fg)},
              {"t_abs_fg", Real(r.t_abs_fg)},
              {"t_abs_f_sup_g", Real(r.t_abs_f_sup_g)},
              {"modulus_lhs", Real(r.modulus_lhs)},
              {"modulus_rhs", Real(r.modulus_rhs)},
              {"verdict", r.holds ? "held" : "failed"}};
}

json ToJson(const Lemma1Report& r) {
  return json{{"check", "lemma1"}, {"value", Real(r.value)},
              {"verdict", r.holds ? "held" : "failed"}};
}

json ToJson(const Lemma2Report& r) {
  json j{{"check", "lemma2"},
         {"covariance", Real(r.covariance)},
         {"signed_covariance", Real(r.signed_covariance)},
         {"lower_side_holds", r.lower_side_holds},
         {"bound", Real(r.bound)},
         {"slack", Real(r.slack)},
         {"unsigned_variance_bound", Real(r.unsigned_variance_bound)},
         {"verdict", std::string(VerdictName(r.verdict))}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

json ToJson(const CEstimate& c) {
  return json{{"bounded", c.bounded}, {"c", Real(c.c)},
              {"raw_sup", Real(c.raw_sup)}, {"argmax", c.argmax}};
}

json ToJson(const ConvergenceTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"n", r.n}, {"sup_error", Real(r.sup_error)}, {"argmax", r.argmax}});
  }
  return json{{"schema_version", kReportSchemaVersion},
              {"family", std::string(FamilyName(t.family))},
              {"distortion", t.distortion},
              {"function", t.function},
              {"improves", t.improves},
              {"strictly_decreasing", t.strictly_decreasing},
              {"rows", std::move(rows)}};
}

json KorovkinSummary(const KorovkinReport& r) {
  const int violations = r.violations();
  return json{{"schema_version", kReportSchemaVersion},
              {"family", std::string(FamilyName(r.family))},
              {"distortion", r.distortion},
              {"function", r.function},
              {"c", r.c},
              {"window", r.window},
              {"omega_cells", r.omega_cells},
              {"totals", r.rows.size()},
              {"held", static_cast<int>(r.rows.size()) - violations},
              {"violations", violations},
              {"max_slack_utilization", Real(r.max_slack_utilization())}};
}

json ToJson(const KorovkinReport& r) {
  json j = KorovkinSummary(r);
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"x", row.x},
                    {"fx", Real(row.fx)},
                    {"knfx", Real(row.knfx)},
                    {"abs_error", Real(row.abs_error)},
                    {"delta", Real(row.delta)},
                    {"radicand", Real(row.radicand)},
                    {"omega", Real(row.omega)},
                    {"bound", Real(row.bound)},
                    {"holds", row.holds}});
  }
  j["rows"] = std::move(rows);
  return j;
}

void WriteKorovkinCsv(std::ostream& out, const KorovkinReport& r, bool header) {
  if (header) out << "family,distortion,c,n,x,fx,knfx,abs_error,delta,bound,holds\n";
  const std::string family(FamilyName(r.family));
  for (const auto& row : r.rows) {
    out << family << ',' << r.distortion << ',' << FormatReal(r.c) << ',' << row.n
        << ',' << FormatReal(row.x) << ',' << FormatReal(row.fx) << ','
        << FormatReal(row.knfx) << ',' << FormatReal(row.abs_error) << ','
        << FormatReal(row.delta) << ',' << FormatReal(row.bound) << ','
        << (row.holds ? "true" : "false") << '\n';
  }
}

void WriteConvergenceCsv(std::ostream& out, const ConvergenceTable& t, bool header) {
  if (header) out << "family,distortion,function,n,sup_error,argmax\n";
  for (const auto& row : t.rows) {
    out << FamilyName(t.family) << ',' << t.distortion << ',' << CsvField(t.function) << ','
        << row.n << ',' << FormatReal(row.sup_error) << ',' << FormatReal(row.argmax)
        << '\n';
  }
}

}  // namespace choquet
