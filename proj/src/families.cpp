#include "twc/families.hpp"

#include <algorithm>

#include "twc/cosets.hpp"

namespace twc::families {

using field::FieldConfig;
using field::FieldElement;

namespace {

BigInt pow3(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

int fixed_h(int family_id, int m) {
  switch (family_id) {
    case 1: return 1;
    case 2:
    case 4: return (m + 1) / 8;
    case 5: return (m + 1) / 4;
    default: return 0;
  }
}

std::uint64_t to_u64(const BigInt& x, const char* what) {
  if (x < 0 || x > BigInt(UINT64_MAX))
    throw TooLarge(std::string(what) + " does not fit in 64 bits: " + x.str());
  return x.convert_to<std::uint64_t>();
}

}  // namespace

std::uint64_t FamilyParams::v_u64() const { return to_u64(v, "reduced exponent v"); }
std::uint64_t FamilyParams::s_u64() const { return to_u64(s, "s = 3^h + 1"); }

std::vector<int> family3_h_values(int m) {
  std::vector<int> hs;
  for (int h = 1; h <= m + 1; ++h)
    if ((m + 1) % h == 0 && ((m + 1) / h) % 2 == 0) hs.push_back(h);
  return hs;
}

FamilyParams family_v(int family_id, int m, std::optional<int> h_opt) {
  if (family_id < 1 || family_id > 5)
    throw BadParameters("family id must be 1..5, got " + std::to_string(family_id));
  if (m < 2) throw BadParameters("m must be at least 2");

  FamilyParams P;
  P.family_id = family_id;
  P.m = m;

  switch (family_id) {
    case 1:
      if (m % 2 != 1) throw ConditionViolated("family 1 needs odd m");
      break;
    case 2:
    case 4:
      if (m % 8 != 7)
        throw ConditionViolated("family " + std::to_string(family_id) +
                                " needs m = 7 mod 8, got m = " + std::to_string(m));
      break;
    case 3:
      break;
    case 5:
      if (m % 4 != 3)
        throw ConditionViolated("family 5 needs m = 3 mod 4, got m = " + std::to_string(m));
      break;
  }

  if (family_id == 3) {
    if (!h_opt) throw BadParameters("family 3 needs an explicit h");
    P.h = *h_opt;
    if (P.h < 1 || (m + 1) % P.h != 0 || ((m + 1) / P.h) % 2 != 0)
      throw ConditionViolated("family 3 needs (m+1)/h to be an even integer; m = " +
                              std::to_string(m) + ", h = " + std::to_string(P.h));
  } else {
    P.h = fixed_h(family_id, m);
    if (h_opt && *h_opt != P.h)
      throw BadParameters("family " + std::to_string(family_id) + " fixes h = " +
                          std::to_string(P.h) + "; got h = " + std::to_string(*h_opt));
  }

  const BigInt n = pow3(m) - 1;
  const BigInt half = n / 2;
  switch (family_id) {
    case 1:
      P.v_raw = (pow3(m + 1) - 1) / 4;
      break;
    case 2:
      P.v_raw = (pow3(P.h) - 1) * (pow3(2 * P.h) + 1) * (pow3(4 * P.h) + 1);
      break;
    case 3:
      P.v_raw = (pow3(m + 1) - 1) / (pow3(P.h) + 1) + half;
      break;
    case 4:
      P.v_raw = (pow3(P.h) - 1) * (pow3(2 * P.h) + 1) * (pow3(4 * P.h) + 1) + half;
      break;
    case 5:
      P.v_raw = (pow3(P.h) - 1) * (pow3(2 * P.h) + 1) + half;
      break;
  }
  P.v = P.v_raw % n;
  P.s = pow3(P.h) + 1;
  P.profile = family_id <= 2 ? codes::WeightProfile::EvenV : codes::WeightProfile::OddV;
  return P;
}

bool ValidationReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

ValidationReport validate_family(const FieldConfig& F, const FamilyParams& P) {
  ValidationReport rep;
  auto add = [&rep](std::string name, bool pass, std::string detail = "") {
    rep.items.push_back({std::move(name), pass, std::move(detail)});
  };

  const BigInt n = pow3(P.m) - 1;
  add("field matches", F.p == 3 && F.m == P.m,
      "expects GF(3^" + std::to_string(P.m) + ")");

  bool formula_ok = false;
  try {
    FamilyParams fresh = family_v(P.family_id, P.m,
                                  P.family_id == 3 ? std::optional<int>(P.h) : std::nullopt);
    formula_ok = fresh.v_raw == P.v_raw && fresh.v == P.v && fresh.s == P.s && fresh.h == P.h;
  } catch (const Error& e) {
    add("applicability condition", false, e.what());
    return rep;
  }
  add("exponent formula", formula_ok, "v_raw = " + P.v_raw.str());

  const bool even_family = P.family_id <= 2;
  add(even_family ? "v even" : "v odd", (P.v_raw % 2 == 0) == even_family,
      "v_raw mod 2 = " + BigInt(P.v_raw % 2).str());
  add("reduction keeps parity", (P.v_raw % 2) == (P.v % 2),
      "n is even so v mod n has the parity of v");

  add("gcd(s, n) = 2", boost::multiprecision::gcd(P.s, n) == 2,
      "s = " + P.s.str());
  add("s v = 2 mod n", (P.s * P.v) % n == 2,
      "s v mod n = " + BigInt((P.s * P.v) % n).str());

  const BigInt gv = boost::multiprecision::gcd(P.v, n);
  if (even_family) {
    add("gcd(v, n) = 2", gv == 2, "gcd = " + gv.str());
  } else {
    add("gcd(v, n) = 1", gv == 1, "gcd = " + gv.str());
    add("v - 1 divisible by p - 1", (P.v - 1) % (F.p - 1) == 0, "");
    FieldElement lambda = field::neg(F, 1);  // alpha^{n/2}
    FieldElement lv = field::pow(F, lambda, static_cast<long long>(P.v_u64() % F.n));
    add("lambda^v = lambda", lv == lambda, "lambda = -1");
  }

  const std::uint32_t v_red = static_cast<std::uint32_t>(P.v_u64() % F.n);
  add("C_1 and C_v disjoint", cosets::cosets_disjoint(F, 1, v_red), "");
  add("coset of v has size m", cosets::coset(F, v_red).size() == F.m,
      "size = " + std::to_string(cosets::coset(F, v_red).size()));

  // Coincidence scan: other parameter choices landing on the same exponent.
  std::string coincide;
  for (int fid = 1; fid <= 5; ++fid) {
    std::vector<std::optional<int>> hs;
    if (fid == 3)
      for (int h : family3_h_values(P.m)) hs.emplace_back(h);
    else
      hs.emplace_back(std::nullopt);
    for (const auto& h : hs) {
      if (fid == P.family_id && (fid != 3 || (h && *h == P.h))) continue;
      try {
        FamilyParams other = family_v(fid, P.m, h);
        if (other.v == P.v) {
          if (!coincide.empty()) coincide += ", ";
          coincide += "family " + std::to_string(fid);
          if (fid == 3) coincide += " (h = " + std::to_string(*h) + ")";
        }
      } catch (const Error&) {
      }
    }
  }
  add("coincidences", true, coincide.empty() ? "none" : "same v as " + coincide);
  return rep;
}

}  // namespace twc::families
