#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twc/eisenstein.hpp"
#include "twc/errors.hpp"
#include "twc/poly.hpp"

namespace twc::field {

// An element of GF(p^m), packed in base p: value = sum coeffs[i] * p^i where
// coeffs are the coordinates in the basis 1, alpha, ..., alpha^(m-1).
// 0 encodes the zero element.
using FieldElement = std::uint32_t;

// GF(p^m) with a designated primitive generator alpha (the residue class of x
// modulo a primitive polynomial).  Immutable after construction; all tables
// are safe to share across threads.
struct FieldConfig {
  int p = 3;
  int m = 1;
  std::uint32_t q = 3;   // p^m
  std::uint32_t n = 2;   // q - 1
  Polynomial modulus;    // monic, primitive, degree m
  FieldElement generator = 0;  // the class of x, i.e. alpha

  std::vector<std::uint32_t> log;      // value -> exponent; log[0] unused
  std::vector<FieldElement> alog;      // exponent -> value, size n
  std::vector<std::uint8_t> trace_table;  // trace_table[i] = Tr(alpha^i); doubled to 2n so
                                          // hot loops can index i+j without reducing mod n
  std::vector<std::uint8_t> trace_of;     // value -> Tr(value)
};

// Builds and validates the field.  With the modulus omitted, p must be 3 and
// m one of {3,5,7}; a built-in primitive modulus is used.  A supplied modulus
// must be monic of degree m and is checked for irreducibility and
// primitivity.  Fields beyond ~2e6 elements are rejected (full tables).
FieldConfig make_field(int p, int m, std::optional<Polynomial> modulus = std::nullopt);

FieldElement add(const FieldConfig& F, FieldElement a, FieldElement b);
FieldElement sub(const FieldConfig& F, FieldElement a, FieldElement b);
FieldElement neg(const FieldConfig& F, FieldElement a);
FieldElement mul(const FieldConfig& F, FieldElement a, FieldElement b);
FieldElement inv(const FieldConfig& F, FieldElement a);  // DivisionByZero on 0

// pow(0, e) = 0 for e > 0, pow(x, 0) = 1 (including 0^0 := 1); negative
// exponents go through the inverse, so pow(0, e<0) is DivisionByZero.
FieldElement pow(const FieldConfig& F, FieldElement a, long long e);

// Tr(x) = sum of x^(p^j) for j = 0..m-1, as a residue mod p.
int trace(const FieldConfig& F, FieldElement x);

// Trace from the subfield GF(p^ell) down to GF(p), for ell dividing m.
// x must lie in that subfield (x^(p^ell) = x), else SubfieldViolation.
int subfield_trace(const FieldConfig& F, int ell, FieldElement x);

// chi(x) = w^Tr(x) in Z[w].  Exact Eisenstein representation needs p = 3;
// other characteristics raise UnsupportedCharacteristic.
EisensteinInteger chi(const FieldConfig& F, FieldElement x);

// x != 0 required (ZeroArgument).  Equivalent to x^((q-1)/2) = 1, and to the
// log of x being even, since alpha generates the multiplicative group.
bool is_square(const FieldConfig& F, FieldElement x);

// The canonical nonsquare: -1 when m is odd, else alpha.
FieldElement fixed_nonsquare(const FieldConfig& F);

// Coordinate representation (length m, basis 1, alpha, ..., alpha^(m-1)).
std::vector<int> coeffs(const FieldConfig& F, FieldElement x);
FieldElement from_coeffs(const FieldConfig& F, const std::vector<int>& c);

// Log representation; nullopt encodes the zero element.
std::optional<std::uint32_t> log_of(const FieldConfig& F, FieldElement x);
FieldElement from_log(const FieldConfig& F, std::uint32_t e);  // e reduced mod n

// Elements of the subfield GF(p^ell) inside GF(p^m), ell | m.
std::vector<FieldElement> subfield_elements(const FieldConfig& F, int ell);

}  // namespace twc::field
