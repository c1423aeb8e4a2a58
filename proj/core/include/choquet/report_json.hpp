#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

#include "choquet/capacity.hpp"
#include "choquet/inequalities.hpp"
#include "choquet/korovkin.hpp"
#include "choquet/properties.hpp"

namespace choquet {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json ToJson(const Witness& w);
nlohmann::json ToJson(const CheckOutcome& c);
nlohmann::json ToJson(const PropertyReport& r);
nlohmann::json ToJson(const HolderReport& r);
nlohmann::json ToJson(const EndpointHolderReport& r);
nlohmann::json ToJson(const Lemma1Report& r);
nlohmann::json ToJson(const Lemma2Report& r);
nlohmann::json ToJson(const CEstimate& c);
nlohmann::json ToJson(const ConvergenceTable& t);

// Totals, violations and max slack utilization, without rows.
nlohmann::json KorovkinSummary(const KorovkinReport& r);
// Summary plus every row.
nlohmann::json ToJson(const KorovkinReport& r);

// family,distortion,c,n,x,fx,knfx,abs_error,delta,bound,holds
void WriteKorovkinCsv(std::ostream& out, const KorovkinReport& r,
                      bool header = true);
// family,distortion,function,n,sup_error,argmax
void WriteConvergenceCsv(std::ostream& out, const ConvergenceTable& t,
                         bool header = true);

// Shortest round-trip decimal form with '.' as separator.
std::string FormatReal(double v);

}  // namespace choquet
