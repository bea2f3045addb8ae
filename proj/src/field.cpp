#include "twc/field.hpp"

#include <algorithm>
#include <string>

namespace twc::field {

namespace {

constexpr std::uint64_t kMaxQ = 2'000'000;  // full log/antilog tables

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

const Polynomial* builtin_modulus(int p, int m) {
  // The three primitive polynomials used throughout: x^3+2x+1, x^5+2x+1, x^7+2x^2+1.
  static const Polynomial m3(3, {1, 2, 0, 1});
  static const Polynomial m5(3, {1, 2, 0, 0, 0, 1});
  static const Polynomial m7(3, {1, 0, 2, 0, 0, 0, 0, 1});
  if (p != 3) return nullptr;
  switch (m) {
    case 3: return &m3;
    case 5: return &m5;
    case 7: return &m7;
    default: return nullptr;
  }
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Polynomial& f) {
  const int p = f.p;
  const int m = f.degree();
  if (m == 1) return true;
  for (int d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::vector<int> c(d + 1, 0);
      std::uint64_t t = k;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<int>(t % p);
        t /= p;
      }
      c[d] = 1;
      Polynomial div(p, std::move(c));
      if (poly_divmod(f, div).rem.is_zero()) return false;
    }
  }
  return true;
}

std::vector<int> unpack(const FieldConfig& F, FieldElement x) {
  std::vector<int> d(F.m);
  for (int i = 0; i < F.m; ++i) {
    d[i] = static_cast<int>(x % F.p);
    x /= F.p;
  }
  return d;
}

FieldElement pack(const FieldConfig& F, const std::vector<int>& d) {
  FieldElement x = 0;
  for (int i = F.m - 1; i >= 0; --i) x = x * F.p + d[i];
  return x;
}

}  // namespace

FieldConfig make_field(int p, int m, std::optional<Polynomial> modulus) {
  if (!is_prime(p) || p % 2 == 0)
    throw BadParameters("p must be an odd prime, got " + std::to_string(p));
  if (m < 1) throw BadParameters("extension degree must be at least 1");

  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ)
      throw TooLarge("GF(" + std::to_string(p) + "^" + std::to_string(m) +
                     ") exceeds the table limit of " + std::to_string(kMaxQ) + " elements");
  }

  FieldConfig F;
  F.p = p;
  F.m = m;
  F.q = static_cast<std::uint32_t>(q);
  F.n = F.q - 1;

  if (modulus) {
    if (modulus->p != p) throw BadParameters("modulus characteristic does not match p");
    if (modulus->degree() != m)
      throw BadParameters("modulus degree " + std::to_string(modulus->degree()) +
                          " does not match m = " + std::to_string(m));
    if (!modulus->is_monic()) throw BadParameters("modulus must be monic");
    F.modulus = *modulus;
  } else {
    const Polynomial* b = builtin_modulus(p, m);
    if (!b)
      throw BadParameters("no built-in modulus for p=" + std::to_string(p) +
                          ", m=" + std::to_string(m) + "; supply one explicitly");
    F.modulus = *b;
  }

  if (!is_irreducible(F.modulus))
    throw NotIrreducible("modulus " + poly_text(F.modulus) + " factors over GF(" +
                         std::to_string(p) + ")");

  // Walk powers of x modulo the modulus.  The modulus is irreducible, so x is
  // invertible and its order divides n; the walk returns to 1 exactly at that
  // order.  Primitive means the order is n itself.
  F.alog.assign(F.n, 0);
  F.log.assign(F.q, 0);
  std::vector<int> cur(m, 0);
  cur[0] = 1;
  std::uint32_t order = 0;
  for (std::uint32_t i = 0; i < F.n; ++i) {
    FieldElement val = pack(F, cur);
    if (val == 1 && i > 0) {
      order = i;
      break;
    }
    F.alog[i] = val;
    F.log[val] = i;
    // multiply by x: shift digits, reduce with the modulus
    int carry = cur[m - 1];
    for (int j = m - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (carry) {
      for (int j = 0; j < m; ++j) {
        cur[j] = (cur[j] - carry * F.modulus.c[j]) % p;
        if (cur[j] < 0) cur[j] += p;
      }
    }
  }
  if (order != 0)
    throw NotPrimitive("root of " + poly_text(F.modulus) + " has order " +
                       std::to_string(order) + " < " + std::to_string(F.n));

  F.generator = F.alog[1];

  // Traces via Frobenius chains on the log tables.
  F.trace_of.assign(F.q, 0);
  for (std::uint32_t v = 1; v < F.q; ++v) {
    FieldElement acc = static_cast<FieldElement>(v);
    FieldElement t = static_cast<FieldElement>(v);
    for (int j = 1; j < m; ++j) {
      t = F.alog[static_cast<std::uint64_t>(F.log[t]) * p % F.n];
      acc = add(F, acc, t);
    }
    if (acc >= static_cast<FieldElement>(p))
      throw Error("trace of element " + std::to_string(v) + " left the prime field");
    F.trace_of[v] = static_cast<std::uint8_t>(acc);
  }
  F.trace_table.assign(2 * F.n, 0);
  for (std::uint32_t i = 0; i < F.n; ++i) {
    F.trace_table[i] = F.trace_of[F.alog[i]];
    F.trace_table[i + F.n] = F.trace_table[i];
  }
  return F;
}

FieldElement add(const FieldConfig& F, FieldElement a, FieldElement b) {
  FieldElement r = 0, place = 1;
  const FieldElement p = F.p;
  for (int i = 0; i < F.m; ++i) {
    FieldElement s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return r;
}

FieldElement neg(const FieldConfig& F, FieldElement a) {
  FieldElement r = 0, place = 1;
  const FieldElement p = F.p;
  for (int i = 0; i < F.m; ++i) {
    FieldElement d = a % p;
    r += (d ? p - d : 0) * place;
    a /= p;
    place *= p;
  }
  return r;
}

FieldElement sub(const FieldConfig& F, FieldElement a, FieldElement b) {
  return add(F, a, neg(F, b));
}

FieldElement mul(const FieldConfig& F, FieldElement a, FieldElement b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = static_cast<std::uint64_t>(F.log[a]) + F.log[b];
  if (e >= F.n) e -= F.n;
  return F.alog[e];
}

FieldElement inv(const FieldConfig& F, FieldElement a) {
  if (a == 0) throw DivisionByZero("inverse of 0");
  std::uint32_t e = F.log[a];
  return F.alog[e == 0 ? 0 : F.n - e];
}

FieldElement pow(const FieldConfig& F, FieldElement a, long long e) {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;  // 0^0 := 1 by convention
    throw DivisionByZero("0 raised to a negative power");
  }
  long long r = (static_cast<long long>(F.log[a]) * (e % F.n)) % F.n;
  if (r < 0) r += F.n;
  return F.alog[r];
}

int trace(const FieldConfig& F, FieldElement x) { return F.trace_of[x]; }

int subfield_trace(const FieldConfig& F, int ell, FieldElement x) {
  if (ell < 1 || F.m % ell != 0)
    throw BadParameters("subfield degree " + std::to_string(ell) + " does not divide m");
  std::uint64_t sub_q = 1;
  for (int i = 0; i < ell; ++i) sub_q *= F.p;
  if (pow(F, x, static_cast<long long>(sub_q)) != x)
    throw SubfieldViolation("element is not in GF(" + std::to_string(F.p) + "^" +
                            std::to_string(ell) + ")");
  FieldElement acc = x, t = x;
  for (int j = 1; j < ell; ++j) {
    t = pow(F, t, F.p);
    acc = add(F, acc, t);
  }
  if (acc >= static_cast<FieldElement>(F.p))
    throw Error("subfield trace left the prime field");
  return static_cast<int>(acc);
}

EisensteinInteger chi(const FieldConfig& F, FieldElement x) {
  if (F.p != 3)
    throw UnsupportedCharacteristic("exact character values are implemented for p = 3 only");
  return EisensteinInteger::omega_pow(F.trace_of[x]);
}

bool is_square(const FieldConfig& F, FieldElement x) {
  if (x == 0) throw ZeroArgument("is_square(0)");
  return F.log[x] % 2 == 0;
}

FieldElement fixed_nonsquare(const FieldConfig& F) {
  FieldElement lambda = (F.m % 2 == 1) ? neg(F, 1) : F.generator;
  if (is_square(F, lambda)) throw NotANonsquare("internal: canonical nonsquare is a square");
  return lambda;
}

std::vector<int> coeffs(const FieldConfig& F, FieldElement x) { return unpack(F, x); }

FieldElement from_coeffs(const FieldConfig& F, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != F.m)
    throw BadParameters("coefficient vector must have length m");
  std::vector<int> d(c);
  for (auto& x : d) {
    x %= F.p;
    if (x < 0) x += F.p;
  }
  return pack(F, d);
}

std::optional<std::uint32_t> log_of(const FieldConfig& F, FieldElement x) {
  if (x == 0) return std::nullopt;
  return F.log[x];
}

FieldElement from_log(const FieldConfig& F, std::uint32_t e) { return F.alog[e % F.n]; }

std::vector<FieldElement> subfield_elements(const FieldConfig& F, int ell) {
  if (ell < 1 || F.m % ell != 0)
    throw BadParameters("subfield degree " + std::to_string(ell) + " does not divide m");
  std::vector<FieldElement> out;
  std::uint64_t sub_q = 1;
  for (int i = 0; i < ell; ++i) sub_q *= F.p;
  out.reserve(sub_q);
  out.push_back(0);
  if (ell == F.m) {
    for (std::uint32_t i = 0; i < F.n; ++i) out.push_back(F.alog[i]);
  } else {
    // GF(p^ell)^* is the unique subgroup of order p^ell - 1
    std::uint32_t step = F.n / static_cast<std::uint32_t>(sub_q - 1);
    for (std::uint32_t i = 0; i < sub_q - 1; ++i) out.push_back(F.alog[i * step]);
  }
  return out;
}

}  // namespace twc::field
