#include "twc/json_io.hpp"

#include <iomanip>
#include <sstream>

#include "twc/cosets.hpp"
#include "twc/poly.hpp"

namespace twc::json_io {

namespace {

template <typename Map>
Json counts_object(const Map& counts) {
  Json obj = Json::object();
  for (const auto& [key, value] : counts) obj[std::to_string(key)] = value;
  return obj;
}

const char* profile_name(codes::WeightProfile p) {
  return p == codes::WeightProfile::EvenV ? "even-v" : "odd-v";
}

std::string elapsed_str(double seconds) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << seconds;
  return os.str();
}

}  // namespace

Json weight_distribution_json(const codes::WeightDistribution& d) {
  Json j;
  j["length"] = d.length;
  j["dimension"] = d.dimension;
  j["counts"] = counts_object(d.counts);
  return j;
}

std::string weight_distribution_csv(const codes::WeightDistribution& d) {
  std::ostringstream os;
  os << "weight,count\n";
  for (const auto& [w, c] : d.counts) os << w << "," << c << "\n";
  return os.str();
}

std::string weight_distribution_text(const codes::WeightDistribution& d) {
  std::ostringstream os;
  os << "[" << d.length << ", " << d.dimension << "] code, "
     << d.total() << " codewords\n";
  for (const auto& [w, c] : d.counts) os << "  weight " << std::setw(5) << w << ": " << c << "\n";
  return os.str();
}

Json construct_json(const field::FieldConfig& F, const families::FamilyParams& params,
                    const families::ValidationReport& report) {
  Json j;
  j["family"] = params.family_id;
  j["m"] = params.m;
  j["h"] = params.h;
  j["v_raw"] = params.v_raw.str();
  j["v"] = params.v_u64();
  j["s"] = params.s.str();
  j["profile"] = profile_name(params.profile);
  auto spec = codes::make_code_spec(F, 1, params.v_u64());
  j["length"] = spec.length;
  j["dimension"] = spec.dimension;
  j["parity_check"] = poly_text(cosets::parity_check_polynomial(F, 1, params.v_u64() % F.n));
  j["expected_weights"] =
      counts_object(codes::expected_distribution(params.profile, F.p, F.m).counts);
  Json checks = Json::array();
  for (const auto& item : report.items) {
    Json c;
    c["name"] = item.name;
    c["pass"] = item.pass;
    if (!item.detail.empty()) c["detail"] = item.detail;
    checks.push_back(std::move(c));
  }
  j["validation"] = std::move(checks);
  j["all_pass"] = report.all_pass();
  return j;
}

std::string construct_text(const field::FieldConfig& F, const families::FamilyParams& params,
                           const families::ValidationReport& report) {
  std::ostringstream os;
  os << "family " << params.family_id << ", m = " << params.m << ", h = " << params.h << "\n";
  os << "  v = " << params.v_raw.str();
  if (params.v != params.v_raw) os << " = " << params.v.str() << " mod " << F.n;
  os << "  (s = " << params.s.str() << ", " << profile_name(params.profile) << " profile)\n";
  auto spec = codes::make_code_spec(F, 1, params.v_u64());
  os << "  code [" << spec.length << ", " << spec.dimension << "] over GF(" << F.p << ")\n";
  os << "  parity check h(x) = "
     << poly_pretty(cosets::parity_check_polynomial(F, 1, params.v_u64() % F.n)) << "\n";
  for (const auto& item : report.items)
    os << "  [" << (item.pass ? "ok" : "FAIL") << "] " << item.name
       << (item.detail.empty() ? "" : ": " + item.detail) << "\n";
  os << (report.all_pass() ? "all construction invariants hold\n"
                           : "construction invariants FAILED\n");
  return os.str();
}

Json dual_report_json(const dualcheck::DualReport& r) {
  Json j;
  j["length"] = r.length;
  j["dual_dimension"] = r.dual_dimension;
  Json cond;
  cond["c1"] = r.conditions.c1;
  cond["c2"] = r.conditions.c2;
  cond["c3"] = r.conditions.c3;
  cond["c2_witnesses"] = r.conditions.c2_witnesses;
  cond["c3_witnesses"] = r.conditions.c3_witnesses;
  j["conditions"] = std::move(cond);
  Json dist;
  if (r.distance.d)
    dist["d"] = *r.distance.d;
  else
    dist["d"] = nullptr;
  dist["limit"] = r.distance.limit;
  dist["positions"] = r.distance.positions;
  dist["coefficients"] = r.distance.coefficients;
  j["distance"] = std::move(dist);
  j["sphere_packing_d"] = r.sphere_packing_d;
  return j;
}

std::string dual_report_csv(const dualcheck::DualReport& r) {
  std::ostringstream os;
  os << "key,value\n";
  os << "length," << r.length << "\n";
  os << "dual_dimension," << r.dual_dimension << "\n";
  os << "c1," << (r.conditions.c1 ? "true" : "false") << "\n";
  os << "c2," << (r.conditions.c2 ? "true" : "false") << "\n";
  os << "c3," << (r.conditions.c3 ? "true" : "false") << "\n";
  os << "d," << (r.distance.d ? std::to_string(*r.distance.d) : "") << "\n";
  os << "limit," << r.distance.limit << "\n";
  os << "sphere_packing_d," << r.sphere_packing_d << "\n";
  return os.str();
}

std::string dual_report_text(const dualcheck::DualReport& r) {
  std::ostringstream os;
  os << "dual code of length " << r.length << ", dimension " << r.dual_dimension << "\n";
  os << "  conditions: c1 " << (r.conditions.c1 ? "holds" : "fails") << ", c2 "
     << (r.conditions.c2 ? "holds" : "fails") << ", c3 "
     << (r.conditions.c3 ? "holds" : "fails") << "\n";
  if (!r.conditions.c2_witnesses.empty()) {
    os << "  extra c2 solutions:";
    for (auto x : r.conditions.c2_witnesses) os << " " << x;
    os << "\n";
  }
  if (!r.conditions.c3_witnesses.empty()) {
    os << "  extra c3 solutions:";
    for (auto x : r.conditions.c3_witnesses) os << " " << x;
    os << "\n";
  }
  if (r.distance.d) {
    os << "  minimum distance " << *r.distance.d << ", witness positions";
    for (auto i : r.distance.positions) os << " " << i;
    os << " with coefficients";
    for (auto c : r.distance.coefficients) os << " " << c;
    os << "\n";
  } else {
    os << "  no word of weight <= " << r.distance.limit << "\n";
  }
  os << "  sphere-packing cap: d <= " << r.sphere_packing_d << "\n";
  return os.str();
}

Json sum_distribution_json(int m, int h, const expsums::SumValueDistribution& got,
                           const expsums::SumValueDistribution& expected) {
  Json j;
  j["m"] = m;
  j["h"] = h;
  j["entries"] = counts_object(got.entries);
  j["expected"] = counts_object(expected.entries);
  j["matches"] = got.entries == expected.entries;
  return j;
}

std::string sum_distribution_csv(const expsums::SumValueDistribution& got) {
  std::ostringstream os;
  os << "value,count\n";
  for (const auto& [value, count] : got.entries) os << value << "," << count << "\n";
  return os.str();
}

std::string sum_distribution_text(int m, int h, const expsums::SumValueDistribution& got,
                                  const expsums::SumValueDistribution& expected) {
  std::ostringstream os;
  os << "folded sums at m = " << m << ", h = " << h << " (" << got.total() << " pairs)\n";
  for (const auto& [value, count] : got.entries)
    os << "  value " << std::setw(6) << value << ": " << count << "\n";
  os << (got.entries == expected.entries ? "matches the closed form\n"
                                         : "DOES NOT match the closed form\n");
  return os.str();
}

Json spectrum_json(const sequences::CorrelationSpectrum& s,
                   const std::set<long long>& expected_values) {
  Json j;
  j["period"] = s.shifts();
  j["values"] = counts_object(s.values);
  j["expected_values"] = expected_values;
  std::set<long long> got;
  for (const auto& [value, count] : s.values) got.insert(value);
  j["matches"] = got == expected_values;
  return j;
}

std::string spectrum_csv(const sequences::CorrelationSpectrum& s) {
  std::ostringstream os;
  os << "value,count\n";
  for (const auto& [value, count] : s.values) os << value << "," << count << "\n";
  return os.str();
}

std::string spectrum_text(const sequences::CorrelationSpectrum& s,
                          const std::set<long long>& expected_values) {
  std::ostringstream os;
  os << "crosscorrelation over " << s.shifts() << " shifts\n";
  for (const auto& [value, count] : s.values)
    os << "  value " << std::setw(5) << value << ": " << count << " shifts\n";
  std::set<long long> got;
  for (const auto& [value, count] : s.values) got.insert(value);
  os << (got == expected_values ? "exactly the three predicted values\n"
                                : "values differ from the prediction\n");
  return os.str();
}

Json suite_json(const verify::SuiteResult& r) {
  Json j;
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json c;
    c["id"] = item.id;
    c["subject"] = item.subject;
    c["status"] = item.status;
    c["expected"] = item.expected;
    c["actual"] = item.actual;
    c["elapsed"] = item.elapsed;
    items.push_back(std::move(c));
  }
  j["items"] = std::move(items);
  j["passes"] = r.passes();
  j["failures"] = r.failures();
  j["skipped"] = r.skipped();
  j["all_pass"] = r.all_pass();
  return j;
}

std::string suite_csv(const verify::SuiteResult& r) {
  std::ostringstream os;
  os << "id,status,elapsed\n";
  for (const auto& item : r.items)
    os << item.id << "," << item.status << "," << elapsed_str(item.elapsed) << "\n";
  return os.str();
}

std::string suite_text(const verify::SuiteResult& r) {
  std::ostringstream os;
  for (const auto& item : r.items) {
    os << std::left << std::setw(7) << item.status << " " << std::setw(28) << item.id << " ("
       << elapsed_str(item.elapsed) << "s)";
    if (item.status == "FAIL")
      os << "\n        expected: " << item.expected << "\n        actual: " << item.actual;
    os << "\n";
  }
  os << r.passes() << " passed, " << r.failures() << " failed, " << r.skipped() << " skipped\n";
  return os.str();
}

}  // namespace twc::json_io
