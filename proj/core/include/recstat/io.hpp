#pragma once

#include "recstat/extremal.hpp"
#include "recstat/permutation.hpp"
#include "recstat/scaling.hpp"
#include "recstat/tables.hpp"
#include "recstat/temme.hpp"

#include <optional>
#include <span>
#include <string>

namespace recstat {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

// CSV documents use "\n" line endings and carry their header line.

std::string table_csv(const CountTable& table);                 // n,k,count
std::string table_json(const CountTable& table);
std::string record_profile_json(const RecordProfile& profile);  // {"positions":[..],"rec":..,"srec":..}
std::string extremal_csv(const ExtremalResult& result);         // n,k,m,witness
std::string extremal_json(const ExtremalResult& result);
std::string witness_string(const std::vector<int>& witness);   // "1+5+6"
std::string curve_csv(const ScaledCurve& curve);                // x,psi_n,target
std::string deviation_csv(std::span<const DeviationReport> reports);  // n,sup_dev,tau,argmax_x
std::string deviation_json(const DeviationReport& report);

/// n,m,u1,t1,B,g,log_estimate,log_exact,rel_error; the last two columns are
/// empty when no exact value is supplied.
std::string temme_csv_header();
std::string temme_csv_row(const TemmeEstimate& estimate, std::optional<double> log_exact);

}  // namespace recstat
