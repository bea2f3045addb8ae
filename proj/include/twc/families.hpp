#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "twc/codes.hpp"
#include "twc/field.hpp"

namespace twc::families {

using BigInt = boost::multiprecision::cpp_int;

// The five exponent constructions, p = 3 throughout:
//   1: m odd,            v = (3^{m+1}-1)/4,                        h = 1
//   2: m = 7 mod 8,      v = (3^h-1)(3^{2h}+1)(3^{4h}+1),          h = (m+1)/8
//   3: (m+1)/h even,     v = (3^{m+1}-1)/(3^h+1) + (3^m-1)/2,      h free
//   4: m = 7 mod 8,      v = family-2 value + (3^m-1)/2,           h = (m+1)/8
//   5: m = 3 mod 4,      v = (3^h-1)(3^{2h}+1) + (3^m-1)/2,        h = (m+1)/4
// Families 1-2 give even v (EvenV table), 3-5 give odd v (OddV table).
struct FamilyParams {
  int family_id = 0;
  int m = 0;
  int h = 0;
  BigInt v_raw;    // the formula value
  BigInt v;        // v_raw mod n
  BigInt s;        // 3^h + 1
  codes::WeightProfile profile = codes::WeightProfile::EvenV;

  // Reduced v as a machine integer; the desk-scale codes all fit.
  std::uint64_t v_u64() const;
  std::uint64_t s_u64() const;
};

// Computes the exponent for a family; h is required for family 3, optional
// (and checked against the fixed internal value) for the others.
// ConditionViolated when the applicability condition on m (or h) fails.
FamilyParams family_v(int family_id, int m, std::optional<int> h = std::nullopt);

// For family 3: every h >= 1 making (m+1)/h even, in increasing order.
std::vector<int> family3_h_values(int m);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
};

// Re-derives every invariant the construction is supposed to guarantee:
// the formula value, parity of v, gcd(s,n) = 2, s*v = 2 mod n, gcd(v,n),
// lambda^v = lambda for odd v, disjointness of C_1 and C_v, and ell_v = m.
// Also notes when another family lands on the same exponent.
ValidationReport validate_family(const field::FieldConfig& F, const FamilyParams& params);

}  // namespace twc::families
