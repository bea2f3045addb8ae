#include "twc/codes.hpp"

#include <numeric>
#include <string>
#include <thread>

#include "twc/expsums.hpp"

namespace twc::codes {

using field::FieldConfig;
using field::FieldElement;

namespace {

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void require_in_subfield(const FieldConfig& F, FieldElement x, int ell, const char* which) {
  if (x == 0) return;
  std::uint64_t sq = ipow(F.p, ell);
  if (field::pow(F, x, static_cast<long long>(sq)) != x)
    throw SubfieldViolation(std::string(which) + " lies outside GF(" + std::to_string(F.p) +
                            "^" + std::to_string(ell) + ")");
}

// Weight of the (a,b) codeword when both subfields are the whole field:
// count i with trace_table[log a + iu] + trace_table[log b + iv] = 0 mod 3.
int full_field_pair_weight(const CodeSpec& spec, FieldElement a, FieldElement b) {
  const FieldConfig& F = spec.cfg;
  const std::uint32_t n = F.n;
  const auto& tt = F.trace_table;
  if (a == 0 && b == 0) return 0;
  std::uint32_t zeros = 0;
  if (b == 0) {
    std::uint32_t ia = F.log[a];
    for (std::uint32_t i = 0; i < n; ++i) {
      zeros += tt[ia] == 0;
      ia += spec.u;
      if (ia >= n) ia -= n;
    }
  } else if (a == 0) {
    std::uint32_t ib = F.log[b];
    for (std::uint32_t i = 0; i < n; ++i) {
      zeros += tt[ib] == 0;
      ib += spec.v;
      if (ib >= n) ib -= n;
    }
  } else {
    std::uint32_t ia = F.log[a], ib = F.log[b];
    for (std::uint32_t i = 0; i < n; ++i) {
      int s = tt[ia] + tt[ib];
      zeros += (s == 0) | (s == 3);
      ia += spec.u;
      if (ia >= n) ia -= n;
      ib += spec.v;
      if (ib >= n) ib -= n;
    }
  }
  return static_cast<int>(n - zeros);
}

void guard_naive(const CodeSpec& spec) {
  double cost = 1;
  for (int i = 0; i < spec.dimension; ++i) cost *= spec.cfg.p;
  if (cost > 5e6)
    throw TooLarge("naive enumeration would visit " + std::to_string(cost) +
                   " codewords; only the full-field orbit shortcut scales that far");
}

}  // namespace

CodeSpec make_code_spec(const FieldConfig& F, std::uint64_t u, std::uint64_t v) {
  CodeSpec spec;
  spec.cfg = F;
  spec.u = static_cast<std::uint32_t>(u % F.n);
  spec.v = static_cast<std::uint32_t>(v % F.n);
  if (!cosets::cosets_disjoint(F, spec.u, spec.v))
    throw CosetsOverlap("cosets of u = " + std::to_string(spec.u) + " and v = " +
                        std::to_string(spec.v) + " overlap; the code needs two distinct zeros");
  spec.ell_u = cosets::coset(F, spec.u).size();
  spec.ell_v = cosets::coset(F, spec.v).size();
  spec.length = F.n;
  spec.dimension = spec.ell_u + spec.ell_v;
  return spec;
}

Codeword codeword(const CodeSpec& spec, FieldElement a, FieldElement b) {
  const FieldConfig& F = spec.cfg;
  require_in_subfield(F, a, spec.ell_u, "a");
  require_in_subfield(F, b, spec.ell_v, "b");
  Codeword cw;
  cw.a = a;
  cw.b = b;
  cw.symbols.resize(F.n);
  const bool full_u = spec.ell_u == F.m, full_v = spec.ell_v == F.m;
  for (std::uint32_t i = 0; i < F.n; ++i) {
    int c = 0;
    if (a != 0) {
      FieldElement xa = field::mul(F, a, field::from_log(F, static_cast<std::uint32_t>(
                                             static_cast<std::uint64_t>(i) * spec.u % F.n)));
      c += full_u ? field::trace(F, xa) : field::subfield_trace(F, spec.ell_u, xa);
    }
    if (b != 0) {
      FieldElement xb = field::mul(F, b, field::from_log(F, static_cast<std::uint32_t>(
                                             static_cast<std::uint64_t>(i) * spec.v % F.n)));
      c += full_v ? field::trace(F, xb) : field::subfield_trace(F, spec.ell_v, xb);
    }
    cw.symbols[i] = c % F.p;
  }
  return cw;
}

int weight(const Codeword& cw) {
  int w = 0;
  for (int s : cw.symbols) w += s != 0;
  return w;
}

int pair_weight(const CodeSpec& spec, FieldElement a, FieldElement b) {
  if (spec.ell_u != spec.cfg.m || spec.ell_v != spec.cfg.m)
    throw BadParameters("pair_weight needs ell_u = ell_v = m; use codeword() + weight()");
  return full_field_pair_weight(spec, a, b);
}

unsigned long long WeightDistribution::total() const {
  unsigned long long t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

WeightDistribution weight_distribution(const CodeSpec& spec, int threads) {
  const FieldConfig& F = spec.cfg;
  if (spec.ell_u != F.m || spec.ell_v != F.m) return weight_distribution_naive(spec);

  const std::uint32_t n = F.n;
  const std::uint32_t d_v = std::gcd(spec.v, n);
  const std::uint32_t d_u = std::gcd(spec.u, n);
  const unsigned long long scale_v = n / d_v;
  const unsigned long long scale_u = n / d_u;

  unsigned t = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  t = std::min<unsigned>(t, F.q);

  // Shifting a codeword multiplies (a,b) by (alpha^u, alpha^v), so weights
  // are constant on multiplicative orbits of b; enumerate one b per orbit of
  // alpha^v (logs 0..d_v-1), all a, and scale.  The b = 0 line reduces the
  // same way under alpha^u.
  std::vector<std::vector<unsigned long long>> partial(t,
                                                       std::vector<unsigned long long>(n + 1, 0));
  auto worker = [&](unsigned slot, std::uint32_t a_begin, std::uint32_t a_end) {
    auto& wc = partial[slot];
    for (std::uint32_t e = 0; e < d_v; ++e) {
      FieldElement b = field::from_log(F, e);
      for (std::uint32_t a = a_begin; a < a_end; ++a)
        wc[full_field_pair_weight(spec, a, b)] += scale_v;
    }
  };
  if (t == 1) {
    worker(0, 0, F.q);
  } else {
    std::vector<std::thread> pool;
    std::uint32_t chunk = (F.q + t - 1) / t;
    for (unsigned k = 0; k < t; ++k) {
      std::uint32_t lo = k * chunk, hi = std::min(F.q, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, k, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<unsigned long long> wc(n + 1, 0);
  for (const auto& part : partial)
    for (std::uint32_t w = 0; w <= n; ++w) wc[w] += part[w];
  for (std::uint32_t e = 0; e < d_u; ++e)
    wc[full_field_pair_weight(spec, field::from_log(F, e), 0)] += scale_u;
  wc[0] += 1;  // the (0,0) word

  WeightDistribution dist;
  dist.length = spec.length;
  dist.dimension = spec.dimension;
  for (std::uint32_t w = 0; w <= n; ++w)
    if (wc[w]) dist.counts[static_cast<int>(w)] = wc[w];

  unsigned long long expect = 1;
  for (int i = 0; i < spec.dimension; ++i) expect *= F.p;
  if (dist.total() != expect)
    throw Error("orbit enumeration covered " + std::to_string(dist.total()) +
                " codewords, expected " + std::to_string(expect));
  return dist;
}

WeightDistribution weight_distribution_naive(const CodeSpec& spec) {
  guard_naive(spec);
  const FieldConfig& F = spec.cfg;
  WeightDistribution dist;
  dist.length = spec.length;
  dist.dimension = spec.dimension;
  const bool fast = spec.ell_u == F.m && spec.ell_v == F.m;
  auto as = field::subfield_elements(F, spec.ell_u);
  auto bs = field::subfield_elements(F, spec.ell_v);
  for (FieldElement a : as)
    for (FieldElement b : bs) {
      int w = fast ? full_field_pair_weight(spec, a, b) : weight(codeword(spec, a, b));
      ++dist.counts[w];
    }
  return dist;
}

long long weight_via_sums(const CodeSpec& spec, FieldElement a, FieldElement b) {
  const FieldConfig& F = spec.cfg;
  if (spec.ell_u != F.m || spec.ell_v != F.m)
    throw BadParameters("the character-sum weight formula needs ell_u = ell_v = m");
  EisensteinInteger S(0, 0);
  for (int y = 1; y < F.p; ++y) {
    FieldElement ye = static_cast<FieldElement>(y);
    S = S + expsums::t_sum(F, spec.u, spec.v, field::mul(F, a, ye), field::mul(F, b, ye));
  }
  if (!S.is_rational())
    throw NonIntegerResult("character sums summed to " + to_string(S) +
                           ", which has a nonzero omega part");
  long long lead = static_cast<long long>(F.p - 1) * (F.q / F.p);  // (p-1) p^{m-1}
  long long num = lead * F.p - S.a0;
  if (num % F.p != 0)
    throw NonIntegerResult("weight numerator " + std::to_string(num) +
                           " is not divisible by p");
  return num / F.p;
}

WeightDistribution expected_distribution(WeightProfile profile, int p, int m) {
  if (p != 3) throw BadParameters("closed-form tables are instantiated for p = 3");
  if (m < 3 || m % 2 == 0) throw BadParameters("closed-form tables need odd m >= 3");
  const long long pm = static_cast<long long>(ipow(p, m));
  const long long pm1 = pm / p;
  const long long root = static_cast<long long>(ipow(p, (m - 1) / 2));

  WeightDistribution d;
  d.length = static_cast<std::uint32_t>(pm - 1);
  d.dimension = 2 * m;
  d.counts[0] = 1;
  if (profile == WeightProfile::EvenV) {
    d.counts[static_cast<int>((p - 1) * pm1 - (p - 1) / 2 * root)] =
        static_cast<unsigned long long>(pm - 1) * (pm1 + root);
    d.counts[static_cast<int>((p - 1) * pm1)] =
        static_cast<unsigned long long>(pm - 1) * (pm - 2 * pm1 + 1);
    d.counts[static_cast<int>((p - 1) * pm1 + (p - 1) / 2 * root)] =
        static_cast<unsigned long long>(pm - 1) * (pm1 - root);
  } else {
    d.counts[static_cast<int>((p - 1) * (pm1 - root))] =
        static_cast<unsigned long long>(pm - 1) * (pm1 + root) / 2;
    d.counts[static_cast<int>((p - 1) * pm1)] =
        static_cast<unsigned long long>(pm - 1) * (pm - pm1 + 1);
    d.counts[static_cast<int>((p - 1) * (pm1 + root))] =
        static_cast<unsigned long long>(pm - 1) * (pm1 - root) / 2;
  }
  return d;
}

}  // namespace twc::codes
