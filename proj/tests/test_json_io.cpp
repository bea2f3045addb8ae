#include <doctest.h>

#include <sstream>

#include "twc/json_io.hpp"

using namespace twc;
using field::FieldConfig;

TEST_CASE("weight distribution serialization") {
  FieldConfig F = field::make_field(3, 3);
  auto dist = codes::weight_distribution(codes::make_code_spec(F, 1, 20));

  auto j = json_io::weight_distribution_json(dist);
  CHECK(j["length"] == 26);
  CHECK(j["dimension"] == 6);
  CHECK(j["counts"]["0"] == 1);
  CHECK(j["counts"]["15"] == 312);
  CHECK(j["counts"]["18"] == 260);
  CHECK(j["counts"]["21"] == 156);

  // parseable round trip
  auto back = json_io::Json::parse(j.dump());
  CHECK(back == j);

  auto csv = json_io::weight_distribution_csv(dist);
  CHECK(csv == "weight,count\n0,1\n15,312\n18,260\n21,156\n");

  auto text = json_io::weight_distribution_text(dist);
  CHECK(text.find("[26, 6]") != std::string::npos);
  CHECK(text.find("312") != std::string::npos);
}

TEST_CASE("construct serialization") {
  FieldConfig F = field::make_field(3, 3);
  auto P = families::family_v(1, 3);
  auto rep = families::validate_family(F, P);

  auto j = json_io::construct_json(F, P, rep);
  CHECK(j["family"] == 1);
  CHECK(j["m"] == 3);
  CHECK(j["v"] == 20);
  CHECK(j["v_raw"] == "20");
  CHECK(j["s"] == "4");
  CHECK(j["profile"] == "even-v");
  CHECK(j["length"] == 26);
  CHECK(j["dimension"] == 6);
  CHECK(j["parity_check"] == "2 1 2 2 0 0 1");
  CHECK(j["expected_weights"]["15"] == 312);
  CHECK(j["all_pass"] == true);
  CHECK(j["validation"].is_array());
  CHECK(j["validation"].size() == rep.items.size());

  auto text = json_io::construct_text(F, P, rep);
  CHECK(text.find("x^6 + 2x^3 + 2x^2 + x + 2") != std::string::npos);
  CHECK(text.find("all construction invariants hold") != std::string::npos);
}

TEST_CASE("dual report serialization") {
  FieldConfig F = field::make_field(3, 3);
  auto rep = dualcheck::dual_report(codes::make_code_spec(F, 1, 20));

  auto j = json_io::dual_report_json(rep);
  CHECK(j["length"] == 26);
  CHECK(j["dual_dimension"] == 20);
  CHECK(j["conditions"]["c1"] == true);
  CHECK(j["conditions"]["c2"] == true);
  CHECK(j["conditions"]["c3"] == true);
  CHECK(j["distance"]["d"] == 4);
  CHECK(j["sphere_packing_d"] == 4);

  auto odd = dualcheck::dual_report(codes::make_code_spec(F, 1, 7));
  auto jo = json_io::dual_report_json(odd);
  CHECK(jo["conditions"]["c1"] == false);
  CHECK(jo["distance"]["d"] == 2);

  auto csv = json_io::dual_report_csv(rep);
  CHECK(csv.find("d,4") != std::string::npos);
  auto text = json_io::dual_report_text(rep);
  CHECK(text.find("minimum distance 4") != std::string::npos);
}

TEST_CASE("null distance serializes as JSON null") {
  FieldConfig F = field::make_field(3, 3);
  auto spec = codes::make_code_spec(F, 1, 20);
  dualcheck::DualReport rep;
  rep.length = F.n;
  rep.distance = dualcheck::dual_min_distance(spec, 3);  // true distance is 4
  auto j = json_io::dual_report_json(rep);
  CHECK(j["distance"]["d"].is_null());
  CHECK(j["distance"]["limit"] == 3);
}

TEST_CASE("folded sum serialization") {
  FieldConfig F = field::make_field(3, 3);
  auto got = expsums::folded_r_sum_distribution(F, 1);
  auto want = expsums::expected_folded_distribution(F);

  auto j = json_io::sum_distribution_json(3, 1, got, want);
  CHECK(j["m"] == 3);
  CHECK(j["h"] == 1);
  CHECK(j["entries"]["108"] == 1);
  CHECK(j["entries"]["-18"] == 156);
  CHECK(j["matches"] == true);

  auto csv = json_io::sum_distribution_csv(got);
  CHECK(csv.rfind("value,count\n", 0) == 0);
  CHECK(csv.find("-18,156") != std::string::npos);
}

TEST_CASE("spectrum serialization") {
  FieldConfig F = field::make_field(3, 3);
  auto seq = sequences::m_sequence(F);
  auto spec = sequences::crosscorrelation(F, seq, 7);
  auto want = sequences::expected_crosscorrelation_values(F);

  auto j = json_io::spectrum_json(spec, want);
  CHECK(j["period"] == 26);
  CHECK(j["values"]["-10"] == 3);
  CHECK(j["values"]["-1"] == 17);
  CHECK(j["values"]["8"] == 6);
  CHECK(j["expected_values"] == json_io::Json({-10, -1, 8}));
  CHECK(j["matches"] == true);

  auto csv = json_io::spectrum_csv(spec);
  CHECK(csv == "value,count\n-10,3\n-1,17\n8,6\n");
}

TEST_CASE("suite serialization") {
  verify::SuiteOptions opt;
  opt.ms = {3};
  auto result = verify::run_suite(opt);

  auto j = json_io::suite_json(result);
  CHECK(j["all_pass"] == true);
  CHECK(j["failures"] == 0);
  CHECK(j["items"].is_array());
  CHECK(j["items"].size() == result.items.size());
  CHECK(j["items"][0].contains("id"));
  CHECK(j["items"][0].contains("status"));
  CHECK(j["items"][0].contains("elapsed"));

  auto text = json_io::suite_text(result);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("0 failed") != std::string::npos);

  auto csv = json_io::suite_csv(result);
  CHECK(csv.rfind("id,status,elapsed\n", 0) == 0);
}
