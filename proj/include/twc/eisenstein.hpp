#pragma once

#include <cstdint>
#include <string>

namespace twc {

// Exact element of Z[w], w = e^(2*pi*i/3), so w^2 = -1 - w.
// Character sums and correlations live here; no floating point anywhere.
struct EisensteinInteger {
  long long a0 = 0;  // rational part
  long long a1 = 0;  // coefficient of w

  constexpr EisensteinInteger() = default;
  constexpr EisensteinInteger(long long r, long long w) : a0(r), a1(w) {}
  constexpr EisensteinInteger(long long r) : a0(r), a1(0) {}

  constexpr bool is_rational() const { return a1 == 0; }

  // squared modulus, an ordinary integer: |a0 + a1 w|^2 = a0^2 - a0 a1 + a1^2
  constexpr long long norm() const { return a0 * a0 - a0 * a1 + a1 * a1; }

  friend constexpr EisensteinInteger operator+(EisensteinInteger x, EisensteinInteger y) {
    return {x.a0 + y.a0, x.a1 + y.a1};
  }
  friend constexpr EisensteinInteger operator-(EisensteinInteger x, EisensteinInteger y) {
    return {x.a0 - y.a0, x.a1 - y.a1};
  }
  friend constexpr EisensteinInteger operator-(EisensteinInteger x) { return {-x.a0, -x.a1}; }
  friend constexpr EisensteinInteger operator*(EisensteinInteger x, EisensteinInteger y) {
    // (a0 + a1 w)(b0 + b1 w) with w^2 = -1 - w
    return {x.a0 * y.a0 - x.a1 * y.a1, x.a0 * y.a1 + x.a1 * y.a0 - x.a1 * y.a1};
  }
  friend constexpr bool operator==(EisensteinInteger x, EisensteinInteger y) {
    return x.a0 == y.a0 && x.a1 == y.a1;
  }
  friend constexpr bool operator!=(EisensteinInteger x, EisensteinInteger y) { return !(x == y); }

  EisensteinInteger& operator+=(EisensteinInteger y) { a0 += y.a0; a1 += y.a1; return *this; }

  // w^t for t in {0,1,2}: 1, w, w^2 = -1 - w
  static constexpr EisensteinInteger omega_pow(int t) {
    switch (((t % 3) + 3) % 3) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      default: return {-1, -1};
    }
  }
};

inline std::string to_string(const EisensteinInteger& z) {
  if (z.a1 == 0) return std::to_string(z.a0);
  return std::to_string(z.a0) + (z.a1 >= 0 ? "+" : "") + std::to_string(z.a1) + "w";
}

}  // namespace twc
