#include "twc/cosets.hpp"

#include <algorithm>
#include <string>

namespace twc::cosets {

using field::FieldConfig;
using field::FieldElement;

CyclotomicCoset coset(const FieldConfig& F, std::uint32_t a) {
  if (a >= F.n) throw BadParameters("residue out of range");
  CyclotomicCoset c;
  std::uint32_t cur = a;
  do {
    c.members.push_back(cur);
    cur = static_cast<std::uint32_t>(static_cast<std::uint64_t>(cur) * F.p % F.n);
  } while (cur != a);
  std::sort(c.members.begin(), c.members.end());
  c.leader = c.members.front();
  return c;
}

bool cosets_disjoint(const FieldConfig& F, std::uint32_t u, std::uint32_t v) {
  auto cu = coset(F, u);
  auto cv = coset(F, v);
  std::vector<std::uint32_t> common;
  std::set_intersection(cu.members.begin(), cu.members.end(), cv.members.begin(),
                        cv.members.end(), std::back_inserter(common));
  return common.empty();
}

std::vector<CyclotomicCoset> all_cosets(const FieldConfig& F) {
  std::vector<CyclotomicCoset> out;
  std::vector<bool> seen(F.n, false);
  for (std::uint32_t a = 0; a < F.n; ++a) {
    if (seen[a]) continue;
    auto c = coset(F, a);
    for (auto x : c.members) seen[x] = true;
    out.push_back(std::move(c));
  }
  return out;
}

Polynomial minimal_polynomial(const FieldConfig& F, std::uint32_t a) {
  auto c = coset(F, a);
  // Expand prod (x - alpha^{-k}) with coefficients in GF(q), lowest degree first.
  std::vector<FieldElement> poly{1};
  for (auto k : c.members) {
    FieldElement root = field::from_log(F, k == 0 ? 0 : F.n - k);
    FieldElement mroot = field::neg(F, root);
    std::vector<FieldElement> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = field::add(F, next[i + 1], poly[i]);
      next[i] = field::add(F, next[i], field::mul(F, poly[i], mroot));
    }
    poly = std::move(next);
  }
  std::vector<int> proj(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] >= static_cast<FieldElement>(F.p))
      throw ProjectionFailure("coefficient of x^" + std::to_string(i) +
                              " in the minimal polynomial of residue " + std::to_string(a) +
                              " is not in the prime field");
    proj[i] = static_cast<int>(poly[i]);
  }
  return Polynomial(F.p, std::move(proj));
}

Polynomial parity_check_polynomial(const FieldConfig& F, std::uint32_t u, std::uint32_t v) {
  if (!cosets_disjoint(F, u, v))
    throw CosetsOverlap("cosets of " + std::to_string(u) + " and " + std::to_string(v) +
                        " share a member");
  return poly_mul(minimal_polynomial(F, u), minimal_polynomial(F, v));
}

}  // namespace twc::cosets
