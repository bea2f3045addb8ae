// Command-line front end: constructs the exponent families, enumerates
// weight distributions, analyzes dual codes, tabulates folded character
// sums and crosscorrelation spectra, and reruns the verification suite.
//
// Exit codes: 0 all requested checks pass, 1 a verification mismatch,
// 2 usage or parameter errors.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twc/codes.hpp"
#include "twc/cosets.hpp"
#include "twc/dualcheck.hpp"
#include "twc/errors.hpp"
#include "twc/expsums.hpp"
#include "twc/families.hpp"
#include "twc/field.hpp"
#include "twc/json_io.hpp"
#include "twc/sequences.hpp"
#include "twc/verify.hpp"

namespace {

using twc::field::FieldConfig;
namespace json_io = twc::json_io;

struct Args {
  int m = 0;
  int family = 0;
  std::optional<int> h;
  std::uint64_t u = 1;
  std::optional<std::uint64_t> v;
  std::string modulus;
  std::string format = "text";
  std::uint64_t seed = twc::verify::kDefaultSeed;
  bool heavy = false;
  int threads = 0;
  std::vector<int> verify_ms;
};

FieldConfig build_field(const Args& a) {
  if (a.modulus.empty()) return twc::field::make_field(3, a.m);
  return twc::field::make_field(3, a.m, twc::poly_parse(3, a.modulus));
}

// Resolves the exponent v: from an explicit --v, or from --family/--h.
std::uint64_t resolve_v(const Args& a) {
  if (a.v) return *a.v;
  if (a.family == 0)
    throw twc::BadParameters("need either --v or --family to pick an exponent");
  return twc::families::family_v(a.family, a.m, a.h).v_u64();
}

int cmd_construct(const Args& a) {
  auto P = twc::families::family_v(a.family, a.m, a.h);
  FieldConfig F = build_field(a);
  auto report = twc::families::validate_family(F, P);
  if (a.format == "json") {
    std::cout << json_io::construct_json(F, P, report).dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "check,pass\n";
    for (const auto& item : report.items)
      std::cout << item.name << "," << (item.pass ? "true" : "false") << "\n";
  } else {
    std::cout << json_io::construct_text(F, P, report);
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_weights(const Args& a) {
  FieldConfig F = build_field(a);
  std::uint64_t v = resolve_v(a);
  auto spec = twc::codes::make_code_spec(F, a.u, v);
  auto dist = twc::codes::weight_distribution(spec, a.threads);
  if (a.format == "json")
    std::cout << json_io::weight_distribution_json(dist).dump(2) << "\n";
  else if (a.format == "csv")
    std::cout << json_io::weight_distribution_csv(dist);
  else
    std::cout << json_io::weight_distribution_text(dist);
  if (a.family != 0) {
    auto P = twc::families::family_v(a.family, a.m, a.h);
    auto want = twc::codes::expected_distribution(P.profile, F.p, F.m);
    if (dist.counts != want.counts) {
      std::cerr << "weight distribution differs from the closed-form table\n";
      return 1;
    }
  }
  return 0;
}

int cmd_dual_check(const Args& a) {
  FieldConfig F = build_field(a);
  std::uint64_t v = resolve_v(a);
  auto spec = twc::codes::make_code_spec(F, a.u, v);
  auto report = twc::dualcheck::dual_report(spec);
  if (a.format == "json")
    std::cout << json_io::dual_report_json(report).dump(2) << "\n";
  else if (a.format == "csv")
    std::cout << json_io::dual_report_csv(report);
  else
    std::cout << json_io::dual_report_text(report);
  if (a.family != 0) {
    // Families 1-2 (even v) promise d = 4 with all conditions; 3-5 promise 2.
    bool even_family = a.family <= 2;
    bool ok = even_family ? (report.conditions.all() && report.distance.d == 4)
                          : (!report.conditions.c1 && report.distance.d == 2);
    if (!ok) {
      std::cerr << "dual parameters differ from the prediction for family "
                << a.family << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_expsum(const Args& a) {
  FieldConfig F = build_field(a);
  int h = a.h.value_or(1);
  auto got = twc::expsums::folded_r_sum_distribution(F, h);
  auto want = twc::expsums::expected_folded_distribution(F);
  if (a.format == "json")
    std::cout << json_io::sum_distribution_json(a.m, h, got, want).dump(2) << "\n";
  else if (a.format == "csv")
    std::cout << json_io::sum_distribution_csv(got);
  else
    std::cout << json_io::sum_distribution_text(a.m, h, got, want);
  return got.entries == want.entries ? 0 : 1;
}

int cmd_xcorr(const Args& a) {
  FieldConfig F = build_field(a);
  std::uint64_t v = resolve_v(a);
  auto seq = twc::sequences::m_sequence(F);
  auto spectrum = twc::sequences::crosscorrelation(F, seq, v);
  auto want = twc::sequences::expected_crosscorrelation_values(F);
  if (a.format == "json")
    std::cout << json_io::spectrum_json(spectrum, want).dump(2) << "\n";
  else if (a.format == "csv")
    std::cout << json_io::spectrum_csv(spectrum);
  else
    std::cout << json_io::spectrum_text(spectrum, want);
  std::set<long long> got;
  for (const auto& [value, count] : spectrum.values) got.insert(value);
  return got == want ? 0 : 1;
}

int cmd_verify(const Args& a) {
  twc::verify::SuiteOptions opt;
  if (!a.verify_ms.empty()) opt.ms = a.verify_ms;
  opt.heavy = a.heavy;
  opt.seed = a.seed;
  opt.threads = a.threads;
  bool wants_7 = false;
  for (int m : opt.ms) wants_7 |= m == 7;
  if (a.heavy)
    std::cerr << "heavy mode: running the m = 7 enumerations too "
                 "(a few extra seconds)\n";
  else if (wants_7)
    std::cerr << "m = 7 claims are reported as SKIPPED; pass --heavy to run them\n";
  auto result = twc::verify::run_suite(opt);
  if (a.format == "json")
    std::cout << json_io::suite_json(result).dump(2) << "\n";
  else if (a.format == "csv")
    std::cout << json_io::suite_csv(result);
  else
    std::cout << json_io::suite_text(result);
  return result.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-weight ternary cyclic code toolbox"};
  app.set_help_flag("--help", "print help and exit");  // frees -h / --h for the parameter h
  app.require_subcommand(1);
  Args a;

  auto add_common = [&](CLI::App* sub, bool need_m) {
    sub->set_help_flag("--help", "print help and exit");
    auto* m_opt = sub->add_option("--m", a.m, "extension degree of GF(3^m)");
    if (need_m) m_opt->required();
    sub->add_option("--modulus", a.modulus,
                    "field polynomial coefficients, constant term first, e.g. \"1 2 0 1\"");
    sub->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* construct = app.add_subcommand("construct", "derive a family exponent and audit it");
  add_common(construct, true);
  construct->add_option("--family", a.family, "family number 1-5")->required();
  construct->add_option("--h", a.h, "parameter h (required for family 3)");

  auto* weights = app.add_subcommand("weights", "enumerate the exact weight distribution");
  add_common(weights, true);
  weights->add_option("--family", a.family, "family number 1-5");
  weights->add_option("--h", a.h, "parameter h (required for family 3)");
  weights->add_option("--u", a.u, "first exponent (default 1)");
  weights->add_option("--v", a.v, "second exponent (overrides --family)");
  weights->add_option("--threads", a.threads, "worker threads, 0 = all cores");

  auto* dual = app.add_subcommand("dual-check", "dual distance, conditions, packing bound");
  add_common(dual, true);
  dual->add_option("--family", a.family, "family number 1-5");
  dual->add_option("--h", a.h, "parameter h (required for family 3)");
  dual->add_option("--u", a.u, "first exponent (default 1)");
  dual->add_option("--v", a.v, "second exponent (overrides --family)");

  auto* expsum = app.add_subcommand("expsum", "folded quadratic character sum distribution");
  add_common(expsum, true);
  expsum->add_option("--h", a.h, "exponent parameter h in s = 3^h + 1 (default 1)");

  auto* xcorr = app.add_subcommand("xcorr", "crosscorrelation spectrum of a decimation");
  add_common(xcorr, true);
  xcorr->add_option("--family", a.family, "family number 1-5");
  xcorr->add_option("--h", a.h, "parameter h (required for family 3)");
  xcorr->add_option("--v", a.v, "decimation exponent (overrides --family)");

  auto* verify = app.add_subcommand("verify", "rerun every claim at the chosen scales");
  verify->set_help_flag("--help", "print help and exit");
  verify->add_option("--m", a.verify_ms, "scales to run (repeatable)")
      ->check(CLI::IsMember({3, 5, 7}));
  verify->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--seed", a.seed, "seed for the sampled checks");
  verify->add_flag("--heavy", a.heavy, "run the m = 7 enumerations");
  verify->add_option("--threads", a.threads, "worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is always 2; --help stays 0
  }

  try {
    if (construct->parsed()) return cmd_construct(a);
    if (weights->parsed()) return cmd_weights(a);
    if (dual->parsed()) return cmd_dual_check(a);
    if (expsum->parsed()) return cmd_expsum(a);
    if (xcorr->parsed()) return cmd_xcorr(a);
    if (verify->parsed()) return cmd_verify(a);
  } catch (const twc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
