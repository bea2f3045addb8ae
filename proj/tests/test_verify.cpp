#include <doctest.h>

#include <set>

#include "twc/verify.hpp"

using namespace twc;

TEST_CASE("the m = 3 slice of the suite passes outright") {
  verify::SuiteOptions opt;
  opt.ms = {3};
  auto result = verify::run_suite(opt);
  CHECK(result.all_pass());
  CHECK(result.failures() == 0);
  CHECK(result.skipped() == 0);
  CHECK(result.passes() == static_cast<int>(result.items.size()));
  for (const auto& item : result.items) {
    CAPTURE(item.id);
    CHECK(item.status == "PASS");
    CHECK_FALSE(item.subject.empty());
  }
}

TEST_CASE("claim ids are unique") {
  verify::SuiteOptions opt;
  opt.ms = {3, 5, 7};
  auto result = verify::run_suite(opt);
  std::set<std::string> ids;
  for (const auto& item : result.items) ids.insert(item.id);
  CHECK(ids.size() == result.items.size());
}

TEST_CASE("m = 7 claims are skipped unless heavy mode is on") {
  verify::SuiteOptions opt;
  opt.ms = {7};
  auto result = verify::run_suite(opt);
  CHECK(result.skipped() > 0);
  CHECK(result.failures() == 0);
  CHECK(result.all_pass());  // skipped claims never fail the suite
  // the integer-only facts still run
  int ran = 0;
  for (const auto& item : result.items)
    if (item.status == "PASS") ++ran;
  CHECK(ran >= 3);
}

TEST_CASE("every claim family shows up at m = 5") {
  verify::SuiteOptions opt;
  opt.ms = {5};
  auto result = verify::run_suite(opt);
  auto has = [&result](const std::string& id) {
    for (const auto& item : result.items)
      if (item.id == id) return true;
    return false;
  };
  CHECK(has("field-invariants-m5"));
  CHECK(has("coset-product-m5"));
  CHECK(has("construct-m5-family1"));
  CHECK(has("parity-check-m5"));
  CHECK(has("weights-m5-family1"));
  CHECK(has("weights-m5-family3-h1"));
  CHECK(has("weights-m5-family3-h3"));
  CHECK(has("eqweight-m5"));
  CHECK(has("split-identity-m5"));
  CHECK(has("folded-sum-m5-h1"));
  CHECK(has("folded-sum-m5-h2"));
  CHECK(has("dual-m5-family1"));
  CHECK(has("dual-m5-v61"));
  CHECK(has("dual-m5-v147"));
  CHECK(has("sphere-packing-m5"));
  CHECK(has("xcorr-m5"));
  CHECK(has("hyperbola-m5"));
  CHECK(has("gcd-facts-m7"));
  CHECK(has("gcd-facts-m15"));
  CHECK(has("gcd-facts-m23"));
  CHECK(result.all_pass());
}
