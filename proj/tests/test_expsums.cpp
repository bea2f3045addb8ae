#include <doctest.h>

#include "twc/expsums.hpp"

using namespace twc;
using field::FieldConfig;

TEST_CASE("T(0,0) counts the whole field") {
  FieldConfig F = field::make_field(3, 3);
  CHECK(expsums::t_sum(F, 1, 20, 0, 0) == EisensteinInteger(27, 0));
}

TEST_CASE("T(a,0) reduces to a pure power sum") {
  FieldConfig F = field::make_field(3, 3);
  // sum over x of chi(a x) = 0 when a != 0 (character sum over the group)
  for (std::uint32_t a = 1; a < F.q; ++a)
    CHECK(expsums::t_sum(F, 1, 20, a, 0) == EisensteinInteger(0, 0));
}

TEST_CASE("exponents that are positive multiples of n keep x = 0 at zero") {
  FieldConfig F = field::make_field(3, 3);
  // e1 = 52 = 2n reduces to 0 mod n, but 0^52 is still 0, so the x = 0 term
  // must contribute chi(b * 0^e2), never chi(a + ...)
  auto direct = [&F](std::uint64_t e1, std::uint64_t e2, std::uint32_t a, std::uint32_t b) {
    EisensteinInteger total(0, 0);
    std::uint32_t z1 = e1 == 0 ? 1u : 0u, z2 = e2 == 0 ? 1u : 0u;  // true-integer exponents
    total += field::chi(F, field::add(F, field::mul(F, a, z1), field::mul(F, b, z2)));
    for (std::uint64_t i = 0; i < F.n; ++i) {
      auto x1 = field::from_log(F, static_cast<std::uint32_t>(e1 % F.n * i % F.n));
      auto x2 = field::from_log(F, static_cast<std::uint32_t>(e2 % F.n * i % F.n));
      total += field::chi(F, field::add(F, field::mul(F, a, x1), field::mul(F, b, x2)));
    }
    return total;
  };
  for (std::uint32_t a = 0; a < F.q; a += 5)
    for (std::uint32_t b = 0; b < F.q; b += 7) {
      CHECK(expsums::t_sum(F, 52, 1, a, b) == direct(52, 1, a, b));
      CHECK(expsums::t_sum(F, 1, 52, a, b) == direct(1, 52, a, b));
      CHECK(expsums::t_sum(F, 0, 1, a, b) == direct(0, 1, a, b));
    }
}

TEST_CASE("t_sum with exponents (s, 2) is the quadratic sum r_sum") {
  FieldConfig F = field::make_field(3, 3);
  for (std::uint32_t a = 0; a < F.q; ++a)
    for (std::uint32_t b = 0; b < F.q; ++b)
      CHECK(expsums::t_sum(F, 4, 2, a, b) == expsums::r_sum(F, 1, a, b));
}

TEST_CASE("t_sum never exceeds the field size in modulus") {
  FieldConfig F = field::make_field(3, 3);
  const long long qq = static_cast<long long>(F.q) * F.q;
  for (std::uint32_t a = 0; a < F.q; ++a)
    for (std::uint32_t b = 0; b < F.q; ++b)
      CHECK(expsums::t_sum(F, 1, 20, a, b).norm() <= qq);
}

TEST_CASE("folded quadratic sums: distributions match the closed form") {
  FieldConfig F3 = field::make_field(3, 3);
  auto d3 = expsums::folded_r_sum_distribution(F3, 1);
  CHECK(d3.entries == std::map<long long, unsigned long long>{
                          {108, 1}, {18, 312}, {0, 260}, {-18, 156}});
  CHECK(d3.entries == expsums::expected_folded_distribution(F3).entries);
  CHECK(d3.total() == 729);

  FieldConfig F5 = field::make_field(3, 5);
  const std::map<long long, unsigned long long> want5 = {
      {972, 1}, {54, 21780}, {0, 19844}, {-54, 17424}};
  CHECK(expsums::folded_r_sum_distribution(F5, 1).entries == want5);
  CHECK(expsums::folded_r_sum_distribution(F5, 2).entries == want5);
  CHECK(expsums::expected_folded_distribution(F5).entries == want5);
}

TEST_CASE("folding really is needed: single quadratic sums leave Z") {
  FieldConfig F = field::make_field(3, 3);
  bool found_irrational = false;
  for (std::uint32_t a = 0; a < F.q && !found_irrational; ++a)
    for (std::uint32_t b = 0; b < F.q && !found_irrational; ++b)
      found_irrational = !expsums::r_sum(F, 1, a, b).is_rational();
  CHECK(found_irrational);

  // but every folded value is rational
  for (std::uint32_t a = 0; a < F.q; a += 3)
    for (std::uint32_t b = 0; b < F.q; b += 5)
      CHECK(expsums::folded_r_sum(F, 1, a, b).is_rational());
}

TEST_CASE("folded distribution rejects bad parameters") {
  FieldConfig F9 = field::make_field(3, 2, poly_parse(3, "2 1 1"));
  CHECK_THROWS_AS(expsums::folded_r_sum_distribution(F9, 1), BadParameters);  // m even
  FieldConfig F3 = field::make_field(3, 3);
  CHECK_THROWS_AS(expsums::folded_r_sum_distribution(F3, 3), BadParameters);  // gcd(m,h) > 1
}

TEST_CASE("sum splitting identity, exhaustive at m = 3") {
  FieldConfig F = field::make_field(3, 3);
  field::FieldElement minus_one = field::neg(F, 1);
  for (field::FieldElement lambda : {minus_one, F.generator}) {
    auto rep = expsums::tsum_split_check(F, 1, 20, 4, lambda, 0);
    CHECK(rep.checked == 729);
    CHECK(rep.failures == 0);
  }
  auto odd = expsums::tsum_split_check(F, 1, 7, 4, minus_one, 0);
  CHECK(odd.checked == 729);
  CHECK(odd.failures == 0);
}

TEST_CASE("sum splitting identity, sampled at m = 5") {
  FieldConfig F = field::make_field(3, 5);
  auto rep = expsums::tsum_split_check(F, 1, 182, 4, field::neg(F, 1), 500, 42);
  CHECK(rep.checked == 500);
  CHECK(rep.failures == 0);

  // same seed, same sample
  auto again = expsums::tsum_split_check(F, 1, 182, 4, field::neg(F, 1), 500, 42);
  CHECK(again.checked == rep.checked);
}

TEST_CASE("sum splitting rejects bad s and bad lambda") {
  FieldConfig F = field::make_field(3, 3);
  CHECK_THROWS_AS(expsums::tsum_split_check(F, 1, 20, 3, field::neg(F, 1), 0), BadGcd);
  CHECK_THROWS_AS(expsums::tsum_split_check(F, 1, 20, 4, 1, 0), NotANonsquare);
}
