#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "twc/codes.hpp"
#include "twc/field.hpp"

// Slow reference implementations used only by the test suite.  These avoid
// the production shortcuts on purpose: traces come from raw polynomial
// arithmetic instead of the log tables, and the dual-distance search tries
// every position/coefficient combination instead of the sorted pair table.

namespace twc::oracles {

// trace of every element, computed by iterated cubing of polynomial
// representatives modulo the field polynomial; indexed by element value.
std::vector<int> poly_trace_table(const field::FieldConfig& F);

// Weight counts of { (Tr(a x^u + b x^v))_x : a, b in GF(q) } built from the
// polynomial traces above.  Exponentiation is repeated polynomial
// multiplication; nothing is shared with the production enumeration.
std::map<int, unsigned long long> naive_weights(const field::FieldConfig& F, std::uint64_t u,
                                                std::uint64_t v);

// Smallest w <= limit admitting positions i_1 < ... < i_w and coefficients
// c_j in {1, 2} with sum c_j alpha^{i_j u} = sum c_j alpha^{i_j v} = 0,
// found by brute force over all combinations (c_1 normalized to 1).
std::optional<int> naive_dual_min_distance(const codes::CodeSpec& spec, int limit);

}  // namespace twc::oracles
