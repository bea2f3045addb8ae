#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twc/codes.hpp"
#include "twc/families.hpp"

using namespace twc;
using field::FieldConfig;

namespace {

const std::map<int, unsigned long long> kEven3 = {{0, 1}, {15, 312}, {18, 260}, {21, 156}};
const std::map<int, unsigned long long> kOdd3 = {{0, 1}, {12, 156}, {18, 494}, {24, 78}};
const std::map<int, unsigned long long> kEven5 = {
    {0, 1}, {153, 21780}, {162, 19844}, {171, 17424}};
const std::map<int, unsigned long long> kOdd5 = {{0, 1}, {144, 10890}, {162, 39446}, {180, 8712}};

}  // namespace

TEST_CASE("code spec for the two-zero codes") {
  FieldConfig F = field::make_field(3, 3);
  auto spec = codes::make_code_spec(F, 1, 20);
  CHECK(spec.length == 26);
  CHECK(spec.dimension == 6);
  CHECK(spec.ell_u == 3);
  CHECK(spec.ell_v == 3);
  CHECK(spec.u == 1);
  CHECK(spec.v == 20);

  // exponents get reduced mod n
  auto wrapped = codes::make_code_spec(F, 1, 20 + 26);
  CHECK(wrapped.v == 20);

  CHECK_THROWS_AS(codes::make_code_spec(F, 1, 3), CosetsOverlap);
  CHECK_THROWS_AS(codes::make_code_spec(F, 7, 21), CosetsOverlap);
}

TEST_CASE("codeword symbols come from the trace form") {
  FieldConfig F = field::make_field(3, 3);
  auto spec = codes::make_code_spec(F, 1, 20);
  auto word = codes::codeword(spec, 1, 0);
  REQUIRE(word.symbols.size() == 26);
  for (std::uint32_t i = 0; i < F.n; ++i)
    CHECK(word.symbols[i] == field::trace(F, field::from_log(F, i)));
  CHECK(codes::weight(word) == 18);  // 8 of the 26 nonzero elements have trace 0

  auto zero = codes::codeword(spec, 0, 0);
  CHECK(codes::weight(zero) == 0);
}

TEST_CASE("pair_weight equals the codeword weight") {
  FieldConfig F = field::make_field(3, 3);
  auto spec = codes::make_code_spec(F, 1, 20);
  for (std::uint32_t a = 0; a < F.q; ++a)
    for (std::uint32_t b = 0; b < F.q; ++b)
      CHECK(codes::pair_weight(spec, a, b) == codes::weight(codes::codeword(spec, a, b)));
}

TEST_CASE("weight distributions at m = 3 against three independent routes") {
  FieldConfig F = field::make_field(3, 3);

  auto even = codes::weight_distribution(codes::make_code_spec(F, 1, 20));
  CHECK(even.counts == kEven3);
  CHECK(even.total() == 729);

  auto odd = codes::weight_distribution(codes::make_code_spec(F, 1, 7));
  CHECK(odd.counts == kOdd3);

  // naive full enumeration and the polynomial-arithmetic oracle agree
  CHECK(codes::weight_distribution_naive(codes::make_code_spec(F, 1, 20)).counts == kEven3);
  CHECK(oracles::naive_weights(F, 1, 20) == kEven3);
  CHECK(oracles::naive_weights(F, 1, 7) == kOdd3);
}

TEST_CASE("weight distributions at m = 5") {
  FieldConfig F = field::make_field(3, 5);
  CHECK(codes::weight_distribution(codes::make_code_spec(F, 1, 182)).counts == kEven5);
  CHECK(codes::weight_distribution(codes::make_code_spec(F, 1, 61)).counts == kOdd5);
  CHECK(codes::weight_distribution(codes::make_code_spec(F, 1, 147)).counts == kOdd5);
}

TEST_CASE("thread count does not change the distribution") {
  FieldConfig F = field::make_field(3, 5);
  auto spec = codes::make_code_spec(F, 1, 182);
  auto one = codes::weight_distribution(spec, 1);
  auto four = codes::weight_distribution(spec, 4);
  CHECK(one.counts == four.counts);
}

TEST_CASE("character-sum weight formula matches direct counting, all pairs") {
  for (int m : {3, 5}) {
    FieldConfig F = field::make_field(3, m);
    auto P = families::family_v(1, m);
    auto spec = codes::make_code_spec(F, 1, P.v_u64());
    unsigned long long mismatches = 0;
    for (std::uint32_t a = 0; a < F.q; ++a)
      for (std::uint32_t b = 0; b < F.q; ++b)
        mismatches += codes::weight_via_sums(spec, a, b) != codes::pair_weight(spec, a, b);
    CAPTURE(m);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("closed-form tables for both profiles") {
  CHECK(codes::expected_distribution(codes::WeightProfile::EvenV, 3, 3).counts == kEven3);
  CHECK(codes::expected_distribution(codes::WeightProfile::OddV, 3, 3).counts == kOdd3);
  CHECK(codes::expected_distribution(codes::WeightProfile::EvenV, 3, 5).counts == kEven5);
  CHECK(codes::expected_distribution(codes::WeightProfile::OddV, 3, 5).counts == kOdd5);
  CHECK(codes::expected_distribution(codes::WeightProfile::EvenV, 3, 7).counts ==
        std::map<int, unsigned long long>{
            {0, 1}, {1431, 1652616}, {1458, 1595780}, {1485, 1534572}});
  CHECK(codes::expected_distribution(codes::WeightProfile::OddV, 3, 7).counts ==
        std::map<int, unsigned long long>{
            {0, 1}, {1404, 826308}, {1458, 3189374}, {1512, 767286}});
  CHECK_THROWS_AS(codes::expected_distribution(codes::WeightProfile::EvenV, 3, 4), BadParameters);
}

TEST_CASE("small-coset exponents fall back to the subfield path") {
  FieldConfig F = field::make_field(3, 3);
  auto spec = codes::make_code_spec(F, 13, 20);  // C_13 = {13}, so ell_u = 1
  CHECK(spec.dimension == 4);

  auto dist = codes::weight_distribution(spec);
  CHECK(dist.total() == 81);  // 3^4 codewords
  CHECK(dist.counts.at(0) == 1);

  // a must come from GF(3) here
  CHECK_NOTHROW(codes::codeword(spec, 2, 5));
  CHECK_THROWS_AS(codes::codeword(spec, F.generator, 0), SubfieldViolation);
  CHECK_THROWS_AS(codes::pair_weight(spec, 1, 1), BadParameters);
  CHECK_THROWS_AS(codes::weight_via_sums(spec, 1, 1), BadParameters);
}
