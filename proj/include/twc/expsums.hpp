#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "twc/eisenstein.hpp"
#include "twc/field.hpp"

namespace twc::expsums {

// T_{(u,v)}(a,b) = sum over all x in GF(q) of chi(a x^u + b x^v),
// including the x = 0 term.  Exponents are taken as plain integers
// (0^0 = 1, 0^e = 0 for e > 0) and reduced mod q-1 only for nonzero x.
EisensteinInteger t_sum(const field::FieldConfig& F, std::uint64_t u, std::uint64_t v,
                        field::FieldElement a, field::FieldElement b);

// R_h(a,b) = sum over all x in GF(q) of chi(a x^{p^h+1} + b x^2).
EisensteinInteger r_sum(const field::FieldConfig& F, int h, field::FieldElement a,
                        field::FieldElement b);

// R(a,b) + R(-a,b) + R(-a,-b) + R(a,-b).  For p = 3 this equals the sum of
// R(ya,yb) + R(-ya,yb) over y in GF(3)^*, and is always a rational integer
// even though the individual R values are not.
EisensteinInteger folded_r_sum(const field::FieldConfig& F, int h, field::FieldElement a,
                               field::FieldElement b);

// Distribution of folded_r_sum over all q^2 pairs (a,b), computed with the
// scaling symmetry (a,b) -> (a t^{p^h+1}, b t^2) so only O(n) representatives
// are evaluated.  Keys must come out rational; a nonzero omega component
// raises NonIntegerResult.
struct SumValueDistribution {
  std::map<long long, unsigned long long> entries;
  unsigned long long total() const;
};

SumValueDistribution folded_r_sum_distribution(const field::FieldConfig& F, int h);

// The four-row closed form the folded distribution must match:
//   2(p-1)p^m once, +-2p^{(m+1)/2} and 0 with quadratic-form frequencies.
SumValueDistribution expected_folded_distribution(const field::FieldConfig& F);

// Split identity: with gcd(s, q-1) = 2 and lambda a fixed nonsquare,
//   2 T_{(u,v)}(a,b) = S(a,b) + S(a lambda^u, b lambda^v)
// where S(a,b) = sum over x of chi(a x^{su} + b x^{sv}).
// Both coordinates of the right side must be even; if not, NonIntegerResult.
bool tsum_split_identity(const field::FieldConfig& F, std::uint64_t u, std::uint64_t v,
                         std::uint64_t s, field::FieldElement lambda,
                         field::FieldElement a, field::FieldElement b);

struct SplitIdentityReport {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::pair<field::FieldElement, field::FieldElement>> failing;  // first 10
};

// Exhaustive over all q^2 pairs when max_pairs = 0, otherwise a seeded
// uniform sample of max_pairs pairs.
SplitIdentityReport tsum_split_check(const field::FieldConfig& F, std::uint64_t u,
                                     std::uint64_t v, std::uint64_t s,
                                     field::FieldElement lambda, std::uint64_t max_pairs,
                                     std::uint64_t seed = 0);

}  // namespace twc::expsums
