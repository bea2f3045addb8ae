#include "twc/sequences.hpp"

#include <numeric>
#include <string>

#include "twc/eisenstein.hpp"

namespace twc::sequences {

using field::FieldConfig;

MSequence m_sequence(const FieldConfig& F) {
  MSequence seq;
  seq.period = F.n;
  seq.symbols.resize(F.n);
  for (std::uint32_t t = 0; t < F.n; ++t) seq.symbols[t] = F.trace_table[t];
  return seq;
}

std::uint32_t CorrelationSpectrum::shifts() const {
  std::uint32_t s = 0;
  for (const auto& [value, freq] : values) s += freq;
  return s;
}

CorrelationSpectrum crosscorrelation(const FieldConfig& F, const MSequence& seq,
                                     std::uint64_t v) {
  const std::uint32_t n = F.n;
  if (seq.period != n || seq.symbols.size() != n)
    throw BadParameters("sequence period does not match the field");
  const std::uint32_t vr = static_cast<std::uint32_t>(v % n);
  if (std::gcd(static_cast<std::uint64_t>(vr), static_cast<std::uint64_t>(n)) != 1)
    throw BadDecimation("gcd(v, n) = " +
                        std::to_string(std::gcd(static_cast<std::uint64_t>(vr),
                                                static_cast<std::uint64_t>(n))) +
                        "; the v-decimation is an m-sequence only when it is 1");

  static constexpr int kDiff[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};  // (a-b) mod 3
  CorrelationSpectrum spec;
  for (std::uint32_t tau = 0; tau < n; ++tau) {
    long long N[3] = {0, 0, 0};
    std::uint32_t i = tau;  // t + tau
    std::uint32_t j = 0;    // v t
    for (std::uint32_t t = 0; t < n; ++t) {
      ++N[kDiff[seq.symbols[i]][seq.symbols[j]]];
      ++i;
      if (i >= n) i -= n;
      j += vr;
      if (j >= n) j -= n;
    }
    EisensteinInteger c(N[0] - N[2], N[1] - N[2]);
    if (!c.is_rational())
      throw NonIntegerCorrelation("correlation at shift " + std::to_string(tau) +
                                  " is " + to_string(c));
    ++spec.values[c.a0];
  }
  return spec;
}

std::set<long long> expected_crosscorrelation_values(const FieldConfig& F) {
  if (F.m % 2 == 0) throw BadParameters("the three-value claim is for odd m");
  long long peak = 1;
  for (int i = 0; i < (F.m + 1) / 2; ++i) peak *= F.p;
  return {-1, -1 - peak, -1 + peak};
}

}  // namespace twc::sequences
