#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "twc/field.hpp"

namespace twc::sequences {

// Maximum-length sequence s_t = Tr(alpha^t), period n = q - 1.
struct MSequence {
  std::uint32_t period = 0;
  std::vector<int> symbols;
};

MSequence m_sequence(const field::FieldConfig& F);

// C_v(tau) = sum_t omega^{s_{t+tau} - s_{vt}} for tau = 0..n-1, aggregated
// into value -> number of shifts.  Values are asserted rational in Z[omega].
struct CorrelationSpectrum {
  std::map<long long, std::uint32_t> values;
  std::uint32_t shifts() const;
};

// gcd(v, n) must be 1, otherwise the decimation is not an m-sequence and
// BadDecimation is raised.
CorrelationSpectrum crosscorrelation(const field::FieldConfig& F, const MSequence& seq,
                                     std::uint64_t v);

// The three values {-1, -1 - 3^{(m+1)/2}, -1 + 3^{(m+1)/2}} the spectrum is
// expected to take for the odd-v decimations (m odd).
std::set<long long> expected_crosscorrelation_values(const field::FieldConfig& F);

}  // namespace twc::sequences
