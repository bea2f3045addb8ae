#pragma once

#include <json.hpp>

#include <set>
#include <string>

#include "twc/codes.hpp"
#include "twc/dualcheck.hpp"
#include "twc/expsums.hpp"
#include "twc/families.hpp"
#include "twc/sequences.hpp"
#include "twc/verify.hpp"

// Stable serialized forms of every result type the command-line tool can
// emit.  JSON schemas are documented in docs/formats.md; the csv/text
// variants cover the tabular outputs.  Count maps keep ascending key order.

namespace twc::json_io {

using Json = nlohmann::ordered_json;

Json weight_distribution_json(const codes::WeightDistribution& d);
std::string weight_distribution_csv(const codes::WeightDistribution& d);
std::string weight_distribution_text(const codes::WeightDistribution& d);

// Construction record: parameters, code dimensions, parity-check polynomial
// (constant term first), the predicted weight table, and the invariant audit.
Json construct_json(const field::FieldConfig& F, const families::FamilyParams& params,
                    const families::ValidationReport& report);
std::string construct_text(const field::FieldConfig& F, const families::FamilyParams& params,
                           const families::ValidationReport& report);

Json dual_report_json(const dualcheck::DualReport& r);
std::string dual_report_csv(const dualcheck::DualReport& r);
std::string dual_report_text(const dualcheck::DualReport& r);

Json sum_distribution_json(int m, int h, const expsums::SumValueDistribution& got,
                           const expsums::SumValueDistribution& expected);
std::string sum_distribution_csv(const expsums::SumValueDistribution& got);
std::string sum_distribution_text(int m, int h, const expsums::SumValueDistribution& got,
                                  const expsums::SumValueDistribution& expected);

Json spectrum_json(const sequences::CorrelationSpectrum& s,
                   const std::set<long long>& expected_values);
std::string spectrum_csv(const sequences::CorrelationSpectrum& s);
std::string spectrum_text(const sequences::CorrelationSpectrum& s,
                          const std::set<long long>& expected_values);

Json suite_json(const verify::SuiteResult& r);
std::string suite_csv(const verify::SuiteResult& r);
std::string suite_text(const verify::SuiteResult& r);

}  // namespace twc::json_io
