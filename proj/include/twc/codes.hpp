#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "twc/cosets.hpp"
#include "twc/field.hpp"

namespace twc::codes {

// Which of the two closed-form weight tables a family follows; picked by the
// parity of the exponent v.
enum class WeightProfile { EvenV, OddV };

struct CodeSpec {
  field::FieldConfig cfg;
  std::uint32_t u = 0, v = 0;   // reduced mod n
  int ell_u = 0, ell_v = 0;     // cyclotomic coset sizes
  std::uint32_t length = 0;     // n
  int dimension = 0;            // ell_u + ell_v
};

// Reduces u, v mod n and validates that their cosets are disjoint.
CodeSpec make_code_spec(const field::FieldConfig& F, std::uint64_t u, std::uint64_t v);

struct Codeword {
  std::vector<int> symbols;          // length n, residues mod p
  field::FieldElement a = 0, b = 0;  // the defining pair
};

// c_i = Tr(a alpha^{iu}) + Tr(b alpha^{iv}) with traces taken from the
// subfields GF(p^{ell_u}) and GF(p^{ell_v}) that a and b must live in.
Codeword codeword(const CodeSpec& spec, field::FieldElement a, field::FieldElement b);

int weight(const Codeword& cw);

// Hamming weight of codeword(a,b) without materializing the symbols;
// table-only O(n) loop (requires ell_u = ell_v = m).
int pair_weight(const CodeSpec& spec, field::FieldElement a, field::FieldElement b);

struct WeightDistribution {
  std::uint32_t length = 0;
  int dimension = 0;
  std::map<int, unsigned long long> counts;
  unsigned long long total() const;
};

// Exact counts over all p^dimension codewords.  When ell_u = ell_v = m the
// cyclic-shift symmetry cuts the enumeration to one representative per
// multiplicative orbit of b; otherwise falls back to the naive product
// enumeration, guarded at p^dimension <= 5e6.
WeightDistribution weight_distribution(const CodeSpec& spec, int threads = 0);

// Always the full product enumeration (same guard); used to validate the
// orbit shortcut against first principles.
WeightDistribution weight_distribution_naive(const CodeSpec& spec);

// Hamming weight from the character-sum formula
//   wt = (p-1)p^{m-1} - (1/p) sum_{y in GF(p)^*} T_{(u,v)}(ya, yb),
// evaluated exactly over Z[omega].  Requires ell_u = ell_v = m.
long long weight_via_sums(const CodeSpec& spec, field::FieldElement a, field::FieldElement b);

// The closed-form three-weight tables (plus the zero word).
WeightDistribution expected_distribution(WeightProfile profile, int p, int m);

}  // namespace twc::codes
