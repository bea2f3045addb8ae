// Acceptance gate: twelve end-to-end checks, one PASS/FAIL line each.
// Exit status 0 when every check passes, 1 otherwise.  The first three
// checks also enforce their runtime budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twc/codes.hpp"
#include "twc/cosets.hpp"
#include "twc/dualcheck.hpp"
#include "twc/expsums.hpp"
#include "twc/families.hpp"
#include "twc/field.hpp"
#include "twc/sequences.hpp"
#include "twc/verify.hpp"

using namespace twc;
using codes::WeightProfile;
using field::FieldConfig;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over the ") +
              std::to_string(budget_seconds) + "s budget";
  }
  failures += !ok;
  std::printf("%s  %2d  %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(), elapsed,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

bool worked_example(int m, const char* parity, const std::map<int, unsigned long long>& weights,
                    std::string& detail) {
  FieldConfig F = field::make_field(3, m);
  auto P = families::family_v(1, m);
  auto h = cosets::parity_check_polynomial(F, 1, P.v_u64() % F.n);
  if (poly_text(h) != parity) {
    detail = "parity check came out as " + poly_text(h);
    return false;
  }
  auto dist = codes::weight_distribution(codes::make_code_spec(F, 1, P.v_u64()));
  if (dist.counts != weights) {
    detail = "weight distribution mismatch";
    return false;
  }
  return true;
}

bool table_match(const FieldConfig& F, int family, std::optional<int> h, std::string& detail) {
  auto P = families::family_v(family, F.m, h);
  auto dist = codes::weight_distribution(codes::make_code_spec(F, 1, P.v_u64()));
  auto want = codes::expected_distribution(P.profile, F.p, F.m);
  if (dist.counts != want.counts) {
    detail = "family " + std::to_string(family) + " at m = " + std::to_string(F.m) + " differs";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  FieldConfig F3 = field::make_field(3, 3);
  FieldConfig F5 = field::make_field(3, 5);
  FieldConfig F7 = field::make_field(3, 7);

  criterion(1, "worked example m=3: parity check and enumerator", 1.0, [](std::string& d) {
    return worked_example(3, "2 1 2 2 0 0 1", {{0, 1}, {15, 312}, {18, 260}, {21, 156}}, d);
  });

  criterion(2, "worked example m=5: parity check and enumerator", 5.0, [](std::string& d) {
    return worked_example(5, "2 1 1 2 1 2 0 2 2 2 1",
                          {{0, 1}, {153, 21780}, {162, 19844}, {171, 17424}}, d);
  });

  criterion(3, "worked example m=7: parity check and enumerator", 600.0, [](std::string& d) {
    return worked_example(7, "2 1 1 2 0 0 1 2 2 1 0 1 1 2 1",
                          {{0, 1}, {1431, 1652616}, {1458, 1595780}, {1485, 1534572}}, d);
  });

  criterion(4, "even-v table: family 1 at m=3,5 and family 2 at m=7", 0,
            [&](std::string& d) {
              return table_match(F3, 1, {}, d) && table_match(F5, 1, {}, d) &&
                     table_match(F7, 2, {}, d);
            });

  criterion(5, "odd-v table: family 3 at (3,1),(5,1),(5,3) and family 5 at m=3", 0,
            [&](std::string& d) {
              return table_match(F3, 3, 1, d) && table_match(F5, 3, 1, d) &&
                     table_match(F5, 3, 3, d) && table_match(F3, 5, {}, d);
            });

  criterion(6, "sum splitting identity: exhaustive m=3, 1000 sampled at m=5,7", 0,
            [&](std::string& d) {
              for (FieldConfig* F : {&F3, &F5, &F7}) {
                auto P = families::family_v(1, F->m);
                field::FieldElement minus_one = field::neg(*F, 1);
                field::FieldElement second =
                    field::mul(*F, minus_one, field::mul(*F, F->generator, F->generator));
                std::uint64_t pairs = F->m == 3 ? 0 : 1000;
                for (auto lambda : {minus_one, second}) {
                  auto rep = expsums::tsum_split_check(*F, 1, P.v_u64(), P.s_u64(), lambda,
                                                       pairs, verify::kDefaultSeed);
                  if (rep.failures != 0) {
                    d = "failures at m = " + std::to_string(F->m);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(7, "folded sum distributions match the closed form at (3,1),(5,1),(5,2)", 0,
            [&](std::string& d) {
              struct Case { FieldConfig* F; int h; } cases[] = {{&F3, 1}, {&F5, 1}, {&F5, 2}};
              for (auto [F, h] : cases) {
                auto got = expsums::folded_r_sum_distribution(*F, h);
                if (got.entries != expsums::expected_folded_distribution(*F).entries) {
                  d = "mismatch at m = " + std::to_string(F->m) + ", h = " + std::to_string(h);
                  return false;
                }
              }
              auto d3 = expsums::folded_r_sum_distribution(F3, 1);
              return d3.entries == std::map<long long, unsigned long long>{
                                       {108, 1}, {18, 312}, {0, 260}, {-18, 156}};
            });

  criterion(8, "dual distances: 4 for even families, 2 for odd, oracle-checked at m=3", 0,
            [&](std::string& d) {
              for (FieldConfig* F : {&F3, &F5, &F7}) {
                auto P = families::family_v(1, F->m);
                auto rep = dualcheck::dual_report(codes::make_code_spec(*F, 1, P.v_u64()));
                if (!rep.conditions.all() || rep.distance.d != 4) {
                  d = "family 1 dual wrong at m = " + std::to_string(F->m);
                  return false;
                }
              }
              // family 2 at m=7 lands on the same exponent as family 1
              if (families::family_v(2, 7).v != families::family_v(1, 7).v) {
                d = "family 2 at m = 7 unexpectedly differs from family 1";
                return false;
              }
              struct Odd { FieldConfig* F; int family; std::optional<int> h; } odds[] = {
                  {&F3, 3, 1}, {&F3, 3, 2}, {&F5, 3, 1}, {&F5, 3, 3}, {&F7, 3, 1},
                  {&F7, 3, 2}, {&F7, 3, 4}, {&F7, 4, {}}, {&F3, 5, {}}, {&F7, 5, {}}};
              for (const auto& c : odds) {
                auto P = families::family_v(c.family, c.F->m, c.h);
                auto res =
                    dualcheck::dual_min_distance(codes::make_code_spec(*c.F, 1, P.v_u64()));
                if (res.d != 2) {
                  d = "odd family " + std::to_string(c.family) +
                      " dual distance wrong at m = " + std::to_string(c.F->m);
                  return false;
                }
              }
              for (std::uint64_t v : {20ull, 7ull, 21ull}) {
                auto spec = codes::make_code_spec(F3, 1, v);
                if (dualcheck::dual_min_distance(spec).d !=
                    oracles::naive_dual_min_distance(spec, 4)) {
                  d = "disagrees with the brute-force search at v = " + std::to_string(v);
                  return false;
                }
              }
              return true;
            });

  criterion(9, "sphere-packing bound gives d <= 4 at every scale", 0, [](std::string& d) {
    return dualcheck::sphere_packing_max_d(26, 20, 3) == 4 &&
           dualcheck::sphere_packing_max_d(242, 232, 3) == 4 &&
           dualcheck::sphere_packing_max_d(2186, 2172, 3) == 4;
  });

  criterion(10, "crosscorrelation spectra are three-valued at m=3,5", 0, [&](std::string& d) {
    struct Case { FieldConfig* F; std::uint64_t v; } cases[] = {
        {&F3, 7}, {&F3, 21}, {&F5, 61}, {&F5, 147}};
    for (auto [F, v] : cases) {
      auto seq = sequences::m_sequence(*F);
      auto spec = sequences::crosscorrelation(*F, seq, v);
      std::set<long long> got;
      for (const auto& [value, freq] : spec.values) got.insert(value);
      if (got != sequences::expected_crosscorrelation_values(*F)) {
        d = "spectrum wrong for v = " + std::to_string(v) + " at m = " + std::to_string(F->m);
        return false;
      }
    }
    auto m3 = sequences::crosscorrelation(F3, sequences::m_sequence(F3), 7);
    return m3.values == std::map<long long, std::uint32_t>{{-10, 3}, {-1, 17}, {8, 6}};
  });

  criterion(11, "hyperbola (m=3,7), circle (m=3) and gcd facts (m=7,15,23)", 0,
            [&](std::string& d) {
              auto h3 = dualcheck::hyperbola_solutions(F3, 1);
              auto h7 = dualcheck::hyperbola_solutions(F7);
              if (!h3.sets_equal || !h3.powers_hold || !h7.sets_equal || !h7.powers_hold) {
                d = "hyperbola parametrization failed";
                return false;
              }
              for (int h : {1, 2}) {
                auto c = dualcheck::circle_solutions_ext(F3, h);
                if (!c.epsilon_squared_is_minus_one || !c.sets_equal || !c.powers_hold) {
                  d = "circle parametrization failed at h = " + std::to_string(h);
                  return false;
                }
              }
              for (int m : {7, 15, 23})
                if (!dualcheck::gcd_facts(m).facts_hold) {
                  d = "gcd facts failed at m = " + std::to_string(m);
                  return false;
                }
              return true;
            });

  criterion(12, "formula-vs-direct weights, field invariants, coset product", 0,
            [&](std::string& d) {
              for (FieldConfig* F : {&F3, &F5, &F7}) {
                auto P = families::family_v(1, F->m);
                auto spec = codes::make_code_spec(*F, 1, P.v_u64());
                if (F->m == 3) {
                  for (std::uint32_t a = 0; a < F->q; ++a)
                    for (std::uint32_t b = 0; b < F->q; ++b)
                      if (codes::weight_via_sums(spec, a, b) != codes::pair_weight(spec, a, b)) {
                        d = "weight formula mismatch at m = 3";
                        return false;
                      }
                } else {
                  std::mt19937_64 rng(verify::kDefaultSeed + F->m);
                  std::uniform_int_distribution<std::uint32_t> pick(0, F->q - 1);
                  for (int k = 0; k < 10000; ++k) {
                    std::uint32_t a = pick(rng), b = pick(rng);
                    if (codes::weight_via_sums(spec, a, b) != codes::pair_weight(spec, a, b)) {
                      d = "weight formula mismatch at m = " + std::to_string(F->m);
                      return false;
                    }
                  }
                }
              }
              for (FieldConfig* F : {&F3, &F5}) {
                std::vector<int> hist(F->p, 0);
                EisensteinInteger total(0, 0);
                for (std::uint32_t x = 0; x < F->q; ++x) {
                  ++hist[field::trace(*F, x)];
                  total += field::chi(*F, x);
                }
                for (int c = 0; c < F->p; ++c)
                  if (hist[c] != static_cast<int>(F->q) / F->p) {
                    d = "trace classes unbalanced at m = " + std::to_string(F->m);
                    return false;
                  }
                if (total != EisensteinInteger(0, 0)) {
                  d = "character sum over the field is nonzero at m = " + std::to_string(F->m);
                  return false;
                }
                Polynomial prod(F->p, {1});
                for (const auto& c : cosets::all_cosets(*F))
                  prod = poly_mul(prod, cosets::minimal_polynomial(*F, c.leader));
                std::vector<int> want(F->n + 1, 0);
                want[0] = F->p - 1;
                want[F->n] = 1;
                if (!(prod == Polynomial(F->p, want))) {
                  d = "coset product is not x^n - 1 at m = " + std::to_string(F->m);
                  return false;
                }
              }
              return true;
            });

  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
