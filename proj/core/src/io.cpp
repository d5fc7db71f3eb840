#include "recstat/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <string>

namespace recstat {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string table_csv(const CountTable& table) {
  // rec rows skip k = 0, where c(n, 0) = 0; srec rows cover every k in
  // [1, n(n+1)/2] including the two structural zeros.
  std::string out = "n,k,count\n";
  const std::string n = std::to_string(table.n());
  for (std::int64_t k = std::max<std::int64_t>(table.min_k(), 1); k <= table.max_k(); ++k) {
    out += n + "," + std::to_string(k) + "," + to_decimal(table[k]) + "\n";
  }
  return out;
}

std::string table_json(const CountTable& table) {
  ordered_json coeffs = ordered_json::object();
  for (std::int64_t k = std::max<std::int64_t>(table.min_k(), 1); k <= table.max_k(); ++k) {
    coeffs[std::to_string(k)] = to_decimal(table[k]);
  }
  ordered_json doc;
  doc["n"] = table.n();
  doc["kind"] = std::string(to_string(table.kind()));
  doc["coeffs"] = std::move(coeffs);
  return doc.dump() + "\n";
}

std::string record_profile_json(const RecordProfile& profile) {
  ordered_json doc;
  doc["positions"] = profile.positions;
  doc["rec"] = profile.rec;
  doc["srec"] = profile.srec;
  return doc.dump() + "\n";
}

std::string witness_string(const std::vector<int>& witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(witness[i]);
  }
  return out;
}

std::string extremal_csv(const ExtremalResult& result) {
  return "n,k,m,witness\n" + std::to_string(result.n) + "," + std::to_string(result.k) + "," +
         to_decimal(result.m) + "," + witness_string(result.witness) + "\n";
}

std::string extremal_json(const ExtremalResult& result) {
  ordered_json doc;
  doc["n"] = result.n;
  doc["k"] = result.k;
  doc["m"] = to_decimal(result.m);
  doc["witness"] = result.witness;
  return doc.dump() + "\n";
}

std::string curve_csv(const ScaledCurve& curve) {
  std::string out = "x,psi_n,target\n";
  for (const auto& point : curve.samples) {
    out += format_double(point.x) + "," + format_double(point.psi) + "," +
           format_double(point.target) + "\n";
  }
  return out;
}

std::string deviation_csv(std::span<const DeviationReport> reports) {
  std::string out = "n,sup_dev,tau,argmax_x\n";
  for (const auto& r : reports) {
    out += std::to_string(r.n) + "," + format_double(r.sup_dev) + "," + format_double(r.tau) +
           "," + format_double(r.argmax_x) + "\n";
  }
  return out;
}

std::string deviation_json(const DeviationReport& report) {
  ordered_json doc;
  doc["n"] = report.n;
  doc["stat"] = std::string(to_string(report.stat));
  doc["sup_dev"] = report.sup_dev;
  doc["tau"] = report.tau;
  doc["argmax_x"] = report.argmax_x;
  return doc.dump() + "\n";
}

std::string temme_csv_header() { return "n,m,u1,t1,B,g,log_estimate,log_exact,rel_error\n"; }

std::string temme_csv_row(const TemmeEstimate& e, std::optional<double> log_exact) {
  std::string out = std::to_string(e.n) + "," + std::to_string(e.m) + "," + format_double(e.u1) +
                    "," + format_double(e.t1) + "," + format_double(e.B) + "," +
                    format_double(e.g) + "," + format_double(e.log_estimate) + ",";
  if (log_exact) {
    out += format_double(*log_exact) + "," + format_double(std::expm1(e.log_estimate - *log_exact));
  } else {
    out += ",";
  }
  return out + "\n";
}

}  // namespace recstat
