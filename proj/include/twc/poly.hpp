#pragma once

#include <string>
#include <vector>

namespace twc {

// Dense polynomial over GF(p), constant term first.  The zero polynomial has
// an empty coefficient vector; otherwise the last coefficient is nonzero.
struct Polynomial {
  int p = 3;
  std::vector<int> c;

  Polynomial() = default;
  Polynomial(int prime, std::vector<int> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.p == b.p && a.c == b.c;
  }
};

Polynomial poly_parse(int p, const std::string& text);
std::string poly_text(const Polynomial& f);    // "1 2 0 1" (constant term first)
std::string poly_pretty(const Polynomial& f);  // "x^3 + 2x + 1"

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

// Euclidean division: a = q*b + r with deg r < deg b.  b must be nonzero.
struct PolyDivMod {
  Polynomial quot;
  Polynomial rem;
};
PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0,0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

Polynomial poly_make_monic(const Polynomial& a);

// x^k
Polynomial poly_xpow(int p, int k);

}  // namespace twc
