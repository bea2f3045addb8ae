#include "twc/poly.hpp"

#include <algorithm>
#include <sstream>

#include "twc/errors.hpp"

namespace twc {

namespace {

void normalize(std::vector<int>& c, int p) {
  for (auto& x : c) {
    x %= p;
    if (x < 0) x += p;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int inv_mod(int a, int p) {
  // p is prime and a != 0 mod p
  int r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(int prime, std::vector<int> coeffs) : p(prime), c(std::move(coeffs)) {
  if (p < 2) throw BadParameters("polynomial characteristic must be at least 2");
  normalize(c, p);
}

Polynomial poly_parse(int p, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> c;
  long long x;
  while (in >> x) c.push_back(static_cast<int>(((x % p) + p) % p));
  if (!in.eof()) throw BadParameters("cannot parse polynomial text: " + text);
  return Polynomial(p, std::move(c));
}

std::string poly_text(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(f.c[i]);
  }
  return out;
}

std::string poly_pretty(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    int a = f.coeff(i);
    if (a == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  if (a.p != b.p) throw BadParameters("polynomial characteristic mismatch");
  std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Polynomial(a.p, std::move(c));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  if (a.p != b.p) throw BadParameters("polynomial characteristic mismatch");
  std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Polynomial(a.p, std::move(c));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.p != b.p) throw BadParameters("polynomial characteristic mismatch");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.p, {});
  std::vector<int> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] = (c[i + j] + a.c[i] * b.c[j]) % a.p;
  return Polynomial(a.p, std::move(c));
}

PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (a.p != b.p) throw BadParameters("polynomial characteristic mismatch");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const int p = a.p;
  std::vector<int> rem = a.c;
  std::vector<int> quot;
  const int db = b.degree();
  const int lead_inv = inv_mod(b.c.back(), p);
  if (a.degree() >= db) quot.assign(a.degree() - db + 1, 0);
  for (int d = a.degree(); d >= db; --d) {
    int coef = rem.size() > static_cast<size_t>(d) ? rem[d] : 0;
    if (coef == 0) continue;
    int f = coef * lead_inv % p;
    quot[d - db] = f;
    for (int i = 0; i <= db; ++i) {
      int idx = d - db + i;
      rem[idx] = ((rem[idx] - f * b.c[i]) % p + p) % p;
    }
  }
  return {Polynomial(p, std::move(quot)), Polynomial(p, std::move(rem))};
}

Polynomial poly_make_monic(const Polynomial& a) {
  if (a.is_zero() || a.is_monic()) return a;
  int f = inv_mod(a.c.back(), a.p);
  std::vector<int> c = a.c;
  for (auto& x : c) x = x * f % a.p;
  return Polynomial(a.p, std::move(c));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(a);
}

Polynomial poly_xpow(int p, int k) {
  std::vector<int> c(k + 1, 0);
  c[k] = 1;
  return Polynomial(p, std::move(c));
}

}  // namespace twc
