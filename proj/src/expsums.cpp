#include "twc/expsums.hpp"

#include <numeric>
#include <random>
#include <string>

namespace twc::expsums {

using field::FieldConfig;
using field::FieldElement;

namespace {

constexpr int kMod3[5] = {0, 1, 2, 0, 1};

// Counters of trace residues converted to an Eisenstein integer:
// N0 * 1 + N1 * omega + N2 * omega^2 = (N0 - N2) + (N1 - N2) omega.
EisensteinInteger from_counts(const long long N[3]) {
  return EisensteinInteger(N[0] - N[2], N[1] - N[2]);
}

// Core loop shared by t_sum and r_sum: sum chi(a x^e1 + b x^e2) over GF(q).
// Exponents are true integers; only nonzero x uses them mod n.
EisensteinInteger two_term_sum(const FieldConfig& F, std::uint64_t e1, std::uint64_t e2,
                               FieldElement a, FieldElement b) {
  if (F.p != 3)
    throw UnsupportedCharacteristic("exponential sums are implemented for p = 3 only");
  const std::uint32_t n = F.n;
  const auto& tt = F.trace_table;
  long long N[3] = {0, 0, 0};

  // x = 0 term: x^e is 0 unless e = 0, in which case it is 1.
  FieldElement at_zero = field::add(F, e1 == 0 ? a : 0, e2 == 0 ? b : 0);
  ++N[field::trace(F, at_zero)];

  const std::uint32_t r1 = static_cast<std::uint32_t>(e1 % n);
  const std::uint32_t r2 = static_cast<std::uint32_t>(e2 % n);
  if (a == 0 && b == 0) {
    N[0] += n;
  } else if (b == 0) {
    std::uint32_t ia = F.log[a];
    for (std::uint32_t j = 0; j < n; ++j) {
      ++N[tt[ia]];
      ia += r1;
      if (ia >= n) ia -= n;
    }
  } else if (a == 0) {
    std::uint32_t ib = F.log[b];
    for (std::uint32_t j = 0; j < n; ++j) {
      ++N[tt[ib]];
      ib += r2;
      if (ib >= n) ib -= n;
    }
  } else {
    std::uint32_t ia = F.log[a], ib = F.log[b];
    for (std::uint32_t j = 0; j < n; ++j) {
      ++N[kMod3[tt[ia] + tt[ib]]];
      ia += r1;
      if (ia >= n) ia -= n;
      ib += r2;
      if (ib >= n) ib -= n;
    }
  }
  return from_counts(N);
}

std::uint64_t s_exponent(const FieldConfig& F, int h) {
  if (h < 1) throw BadParameters("h must be positive");
  std::uint64_t s = 1;
  for (int i = 0; i < h; ++i) s *= F.p;
  return s + 1;
}

}  // namespace

EisensteinInteger t_sum(const FieldConfig& F, std::uint64_t u, std::uint64_t v,
                        FieldElement a, FieldElement b) {
  return two_term_sum(F, u, v, a, b);
}

EisensteinInteger r_sum(const FieldConfig& F, int h, FieldElement a, FieldElement b) {
  return two_term_sum(F, s_exponent(F, h), 2, a, b);
}

EisensteinInteger folded_r_sum(const FieldConfig& F, int h, FieldElement a, FieldElement b) {
  FieldElement na = field::neg(F, a), nb = field::neg(F, b);
  return r_sum(F, h, a, b) + r_sum(F, h, na, b) + r_sum(F, h, na, nb) + r_sum(F, h, a, nb);
}

unsigned long long SumValueDistribution::total() const {
  unsigned long long t = 0;
  for (const auto& [value, freq] : entries) t += freq;
  return t;
}

SumValueDistribution folded_r_sum_distribution(const FieldConfig& F, int h) {
  if (F.m % 2 == 0) throw BadParameters("folded sum distribution requires odd m");
  if (std::gcd(F.m, h) != 1) throw BadParameters("h must be coprime to m");
  const std::uint32_t n = F.n;

  SumValueDistribution dist;
  auto record = [&](const EisensteinInteger& val, unsigned long long freq) {
    if (!val.is_rational())
      throw NonIntegerResult("folded sum came out with omega component " + to_string(val));
    dist.entries[val.a0] += freq;
  };

  // (0,0) once.
  record(folded_r_sum(F, h, 0, 0), 1);

  // The scaling x -> tx sends (a,b) to (a t^s, b t^2) without changing the
  // sum.  s = p^h+1 and 2 are both even, so orbits of pairs with a or b
  // nonzero have size exactly n/2; representatives are indexed by the log of
  // the surviving coordinate with the other log pinned to its parity.
  for (std::uint32_t e = 0; e < 2; ++e) {
    FieldElement rep = field::from_log(F, e);
    record(folded_r_sum(F, h, 0, rep), n / 2);
    record(folded_r_sum(F, h, rep, 0), n / 2);
    for (std::uint32_t i = 0; i < n; ++i)
      record(folded_r_sum(F, h, field::from_log(F, i), rep), n / 2);
  }

  unsigned long long expect_total = static_cast<unsigned long long>(F.q) * F.q;
  if (dist.total() != expect_total)
    throw Error("orbit accounting bug: " + std::to_string(dist.total()) +
                " pairs covered, expected " + std::to_string(expect_total));
  return dist;
}

SumValueDistribution expected_folded_distribution(const FieldConfig& F) {
  if (F.m % 2 == 0) throw BadParameters("closed form requires odd m");
  const long long p = F.p;
  long long pm = 1, pm1 = 1, ph = 1;
  for (int i = 0; i < F.m; ++i) pm *= p;
  for (int i = 0; i < F.m - 1; ++i) pm1 *= p;
  for (int i = 0; i < (F.m + 1) / 2; ++i) ph *= p;
  const long long root = ph / p;  // p^{(m-1)/2}

  SumValueDistribution d;
  d.entries[2 * (p - 1) * pm] = 1;
  d.entries[2 * ph] = static_cast<unsigned long long>(pm1 + root) * (pm - 1);
  d.entries[0] = static_cast<unsigned long long>(pm - 2 * pm1 + 1) * (pm - 1);
  d.entries[-2 * ph] = static_cast<unsigned long long>(pm1 - root) * (pm - 1);
  return d;
}

bool tsum_split_identity(const FieldConfig& F, std::uint64_t u, std::uint64_t v,
                         std::uint64_t s, FieldElement lambda, FieldElement a,
                         FieldElement b) {
  if (std::gcd(s, static_cast<std::uint64_t>(F.n)) != 2)
    throw BadGcd("gcd(s, q-1) must be 2, got gcd(" + std::to_string(s) + ", " +
                 std::to_string(F.n) + ") = " +
                 std::to_string(std::gcd(s, static_cast<std::uint64_t>(F.n))));
  if (lambda == 0 || field::is_square(F, lambda))
    throw NotANonsquare("lambda must be a nonsquare of GF(q)");

  EisensteinInteger lhs = t_sum(F, u, v, a, b);
  EisensteinInteger s1 = two_term_sum(F, s * u, s * v, a, b);
  FieldElement a2 = field::mul(F, a, field::pow(F, lambda, static_cast<long long>(u % F.n)));
  FieldElement b2 = field::mul(F, b, field::pow(F, lambda, static_cast<long long>(v % F.n)));
  EisensteinInteger s2 = two_term_sum(F, s * u, s * v, a2, b2);
  EisensteinInteger rhs2 = s1 + s2;
  if (rhs2.a0 % 2 != 0 || rhs2.a1 % 2 != 0)
    throw NonIntegerResult("split sum " + to_string(rhs2) + " is not divisible by 2");
  return lhs == EisensteinInteger(rhs2.a0 / 2, rhs2.a1 / 2);
}

SplitIdentityReport tsum_split_check(const FieldConfig& F, std::uint64_t u, std::uint64_t v,
                                     std::uint64_t s, FieldElement lambda,
                                     std::uint64_t max_pairs, std::uint64_t seed) {
  SplitIdentityReport rep;
  auto check_one = [&](FieldElement a, FieldElement b) {
    ++rep.checked;
    if (!tsum_split_identity(F, u, v, s, lambda, a, b)) {
      ++rep.failures;
      if (rep.failing.size() < 10) rep.failing.emplace_back(a, b);
    }
  };
  if (max_pairs == 0) {
    for (std::uint32_t a = 0; a < F.q; ++a)
      for (std::uint32_t b = 0; b < F.q; ++b) check_one(a, b);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, F.q - 1);
    for (std::uint64_t k = 0; k < max_pairs; ++k) check_one(pick(rng), pick(rng));
  }
  return rep;
}

}  // namespace twc::expsums
