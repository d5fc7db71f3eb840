#include "recstat/io.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <limits>

namespace recstat {
namespace {

using nlohmann::json;

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.5), "-2.5");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  const double third = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_double(third)), third);
}

TEST(TableCsv, RecSizeOne) { EXPECT_EQ(table_csv(rec_table(1)), "n,k,count\n1,1,1\n"); }

TEST(TableCsv, SrecIncludesStructuralZeros) {
  EXPECT_EQ(table_csv(srec_table(3)), "n,k,count\n3,1,2\n3,2,0\n3,3,2\n3,4,1\n3,5,0\n3,6,1\n");
}

TEST(TableJson, BigIntegersAreStrings) {
  const json doc = json::parse(table_json(srec_table(50)));
  EXPECT_EQ(doc["n"], 50);
  EXPECT_EQ(doc["kind"], "srec");
  ASSERT_TRUE(doc["coeffs"]["1"].is_string());
  EXPECT_EQ(doc["coeffs"]["1"], "608281864034267560872252163321295376887552831379210240000000000");  // 49!
  EXPECT_EQ(doc["coeffs"].size(), 1275u);
  EXPECT_EQ(table_json(rec_table(3)), R"({"n":3,"kind":"rec","coeffs":{"1":"2","2":"3","3":"1"}})" "\n");
}

TEST(RecordProfileJson, WorkedExample) {
  EXPECT_EQ(record_profile_json(records(Permutation::parse("4,7,5,1,6,8,2,3"))),
            R"({"positions":[1,2,6],"rec":3,"srec":9})" "\n");
}

TEST(Extremal, CsvAndJson) {
  const ExtremalResult result = min_product(6, 12);
  EXPECT_EQ(witness_string(result.witness), "1+5+6");
  EXPECT_EQ(extremal_csv(result), "n,k,m,witness\n6,12,30,1+5+6\n");
  EXPECT_EQ(extremal_json(result), R"({"n":6,"k":12,"m":"30","witness":[1,5,6]})" "\n");
}

TEST(DeviationCsv, RowCountAndHeader) {
  const auto series = tau_series(Statistic::srec, 2, 50);
  const std::string csv = deviation_csv(series);
  EXPECT_EQ(csv.rfind("n,sup_dev,tau,argmax_x\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 50);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(DeviationJson, Fields) {
  const json doc = json::parse(deviation_json(sup_deviation(2, Statistic::rec)));
  EXPECT_EQ(doc["n"], 2);
  EXPECT_EQ(doc["stat"], "rec");
  EXPECT_DOUBLE_EQ(doc["sup_dev"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(doc["argmax_x"].get<double>(), 0.0);
}

TEST(CurveCsv, EndpointsForTen) {
  const std::string csv = curve_csv(curve_samples(rec_table(10), 0, Sampling::breakpoints));
  EXPECT_EQ(csv.rfind("x,psi_n,target\n0,", 0), 0u);
  EXPECT_NE(csv.find("\n1,0,0\n"), std::string::npos);
}

TEST(TemmeCsv, OptionalComparisonColumns) {
  const TemmeEstimate e = temme_estimate(2, 1);
  EXPECT_EQ(temme_csv_header(), "n,m,u1,t1,B,g,log_estimate,log_exact,rel_error\n");
  const std::string bare = temme_csv_row(e, std::nullopt);
  EXPECT_EQ(bare.rfind("2,1,", 0), 0u);
  EXPECT_EQ(bare.substr(bare.size() - 3), ",,\n");
  const std::string compared = temme_csv_row(e, std::log(3.0));
  EXPECT_EQ(std::count(compared.begin(), compared.end(), ','), 8);
  EXPECT_NE(compared.find(format_double(std::log(3.0))), std::string::npos);
}

}  // namespace
}  // namespace recstat
