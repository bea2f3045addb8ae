#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "twc/codes.hpp"
#include "twc/field.hpp"

namespace twc::dualcheck {

using BigInt = boost::multiprecision::cpp_int;

// The three conditions controlling whether the dual of a two-zero code with
// u = 1 reaches minimum distance 4:
//   c1: v is even
//   c2: x = 1 is the only x in GF(q)^* with (-x-1)^v + x^v + 1 = 0
//   c3: x = 0 is the only x in GF(q)  with (x+1)^v - x^v - 1 = 0
// Witness lists hold the extra solutions when a condition fails.
struct ConditionReport {
  bool c1 = false, c2 = false, c3 = false;
  std::vector<field::FieldElement> c2_witnesses;
  std::vector<field::FieldElement> c3_witnesses;
  bool all() const { return c1 && c2 && c3; }
};

ConditionReport check_conditions(const field::FieldConfig& F, std::uint64_t v);

// Smallest w <= limit for which positions i_1 < ... < i_w and coefficients
// c_j in GF(3)^* exist with sum c_j alpha^{i_j u} = 0 and the same for v;
// those are exactly the weight-w words of the dual code.  nullopt d means
// every weight up to limit was ruled out.  limit must be in [1, 4].
struct DualDistance {
  std::optional<int> d;
  int limit = 4;
  std::vector<std::uint32_t> positions;  // witness when found
  std::vector<int> coefficients;
};

DualDistance dual_min_distance(const codes::CodeSpec& spec, int limit = 4);

// Largest d whose sphere-packing ball fits: sum_{j<=floor((d-1)/2)}
// C(n,j)(p-1)^j <= p^{n-k}.
int sphere_packing_max_d(std::uint32_t n, int dimension, int p);

struct DualReport {
  std::uint32_t length = 0;
  int dual_dimension = 0;
  ConditionReport conditions;
  DualDistance distance;
  int sphere_packing_d = 0;
};

// Full dual analysis for a code with u = 1 and ell_v = m.
DualReport dual_report(const codes::CodeSpec& spec, int limit = 4);

// Solutions of y1^2 - x1^2 = 1 over GF(q)^2 against the parametrization
// x1 = theta - 1/theta, y1 = -theta - 1/theta, theta in GF(q)^*; optionally
// also the s-power expansions for s = 3^h + 1.  h defaults to (m+1)/8 when
// m = 7 mod 8, otherwise the power check is skipped unless h is supplied.
struct HyperbolaReport {
  unsigned long long solution_count = 0;   // brute-force count
  unsigned long long param_count = 0;      // distinct parametrized pairs
  bool sets_equal = false;
  bool powers_checked = false;
  int h = 0;
  bool powers_hold = false;
};

HyperbolaReport hyperbola_solutions(const field::FieldConfig& F,
                                    std::optional<int> h = std::nullopt);

// Solutions of x1^2 + y1^2 = -1 over GF(q^2)^2, with GF(q^2) built as
// GF(q)[Y]/(Y^2 - lambda) for the fixed nonsquare lambda.  Verifies
// epsilon = gamma^{(q^2-1)/4} squares to -1, that the parametrization
// x1 = epsilon(theta + 1/theta), y1 = theta - 1/theta covers every solution
// exactly once, and the s-power expansions for s = 3^h + 1.
struct CircleReport {
  bool epsilon_squared_is_minus_one = false;
  unsigned long long solution_count = 0;
  unsigned long long param_count = 0;
  bool sets_equal = false;
  int h = 0;
  bool powers_hold = false;
};

CircleReport circle_solutions_ext(const field::FieldConfig& F, int h);

// Integer facts about s = 3^h + 1, h = (m+1)/8, for m = 7 mod 8:
// the mod-16 class of m decides s mod 8 and both gcds against 3^{2m}-1.
struct GcdFacts {
  int m = 0, h = 0;
  BigInt s;
  int s_mod_8 = 0;
  BigInt gcd_s_q2;      // gcd(s, 3^{2m}-1)
  BigInt gcd_h_q2;      // gcd(3^h-1, 3^{2m}-1)
  bool m_is_7_mod_16 = false;
  bool facts_hold = false;
};

GcdFacts gcd_facts(int m);

}  // namespace twc::dualcheck
