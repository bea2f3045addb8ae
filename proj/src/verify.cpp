#include "twc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "twc/codes.hpp"
#include "twc/cosets.hpp"
#include "twc/dualcheck.hpp"
#include "twc/expsums.hpp"
#include "twc/families.hpp"
#include "twc/field.hpp"
#include "twc/sequences.hpp"

namespace twc::verify {

namespace {

using codes::WeightProfile;
using field::FieldConfig;
using field::FieldElement;

struct Outcome {
  bool pass = false;
  std::string expected, actual;
};

class Runner {
 public:
  explicit Runner(SuiteResult& out) : out_(out) {}

  void claim(const std::string& id, const std::string& subject, bool execute,
             const std::function<Outcome()>& fn) {
    ClaimResult r;
    r.id = id;
    r.subject = subject;
    if (!execute) {
      r.status = "SKIPPED";
      out_.items.push_back(std::move(r));
      return;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = fn();
      r.status = o.pass ? "PASS" : "FAIL";
      r.expected = o.expected;
      r.actual = o.actual;
    } catch (const std::exception& e) {
      r.status = "FAIL";
      r.expected = "no exception";
      r.actual = std::string("exception: ") + e.what();
    }
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out_.items.push_back(std::move(r));
  }

 private:
  SuiteResult& out_;
};

std::string dist_str(const std::map<int, unsigned long long>& counts) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [w, c] : counts) {
    if (!first) os << ", ";
    first = false;
    os << w << ":" << c;
  }
  os << "}";
  return os.str();
}

std::string lldist_str(const std::map<long long, unsigned long long>& counts) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [w, c] : counts) {
    if (!first) os << ", ";
    first = false;
    os << w << ":" << c;
  }
  os << "}";
  return os.str();
}

std::string set_str(const std::set<long long>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (long long v : s) {
    if (!first) os << ", ";
    first = false;
    os << v;
  }
  os << "}";
  return os.str();
}

// Reference values carried over from the worked examples: parity-check
// polynomials for (u,v) = (1, family-1 exponent) and the three-weight
// enumerators of both profiles at each scale.
const char* reference_parity_poly(int m) {
  switch (m) {
    case 3: return "2 1 2 2 0 0 1";
    case 5: return "2 1 1 2 1 2 0 2 2 2 1";
    case 7: return "2 1 1 2 0 0 1 2 2 1 0 1 1 2 1";
    default: return nullptr;
  }
}

std::map<int, unsigned long long> reference_weights(int m, WeightProfile profile) {
  if (profile == WeightProfile::EvenV) {
    switch (m) {
      case 3: return {{0, 1}, {15, 312}, {18, 260}, {21, 156}};
      case 5: return {{0, 1}, {153, 21780}, {162, 19844}, {171, 17424}};
      case 7: return {{0, 1}, {1431, 1652616}, {1458, 1595780}, {1485, 1534572}};
    }
  } else {
    switch (m) {
      case 3: return {{0, 1}, {12, 156}, {18, 494}, {24, 78}};
      case 5: return {{0, 1}, {144, 10890}, {162, 39446}, {180, 8712}};
      case 7: return {{0, 1}, {1404, 826308}, {1458, 3189374}, {1512, 767286}};
    }
  }
  throw BadParameters("no reference weights for m = " + std::to_string(m));
}

std::map<long long, unsigned long long> reference_folded(int m) {
  switch (m) {
    case 3: return {{108, 1}, {18, 312}, {0, 260}, {-18, 156}};
    case 5: return {{972, 1}, {54, 21780}, {0, 19844}, {-54, 17424}};
    default: return {};  // closed form only
  }
}

struct FamilyCase {
  int family_id;
  std::optional<int> h;
};

std::vector<FamilyCase> family_cases(int m) {
  std::vector<FamilyCase> cases;
  cases.push_back({1, std::nullopt});
  if (m % 8 == 7) cases.push_back({2, std::nullopt});
  for (int h : families::family3_h_values(m)) cases.push_back({3, h});
  if (m % 8 == 7) cases.push_back({4, std::nullopt});
  if (m % 4 == 3) cases.push_back({5, std::nullopt});
  return cases;
}

std::string case_tag(const FamilyCase& fc) {
  std::string t = "family" + std::to_string(fc.family_id);
  if (fc.h) t += "-h" + std::to_string(*fc.h);
  return t;
}

// Distinct odd exponents (one per value of v) a scale provides.
std::vector<std::uint64_t> odd_exponents(int m) {
  std::set<std::uint64_t> vs;
  for (const auto& fc : family_cases(m)) {
    if (fc.family_id <= 2) continue;
    vs.insert(families::family_v(fc.family_id, m, fc.h).v_u64());
  }
  return {vs.begin(), vs.end()};
}

void add_field_claims(Runner& run, const FieldConfig& F, bool exec, std::uint64_t seed) {
  const int m = F.m;
  std::string sm = std::to_string(m);

  run.claim("field-invariants-m" + sm,
            "trace balance, character additivity and zero character sum over GF(3^" + sm + ")",
            exec, [&F, seed]() {
              Outcome o;
              std::vector<unsigned> hist(F.p, 0);
              for (std::uint32_t x = 0; x < F.q; ++x) ++hist[field::trace(F, x)];
              bool balanced = true;
              for (int c = 0; c < F.p; ++c) balanced &= hist[c] == F.q / F.p;

              EisensteinInteger total(0, 0);
              for (std::uint32_t x = 0; x < F.q; ++x) total = total + field::chi(F, x);
              bool zero_sum = total == EisensteinInteger(0, 0);

              std::mt19937_64 rng(seed);
              std::uniform_int_distribution<std::uint32_t> pick(0, F.q - 1);
              bool additive = true;
              for (int k = 0; k < 1000; ++k) {
                FieldElement x = pick(rng), y = pick(rng);
                additive &= field::chi(F, field::add(F, x, y)) ==
                            field::chi(F, x) * field::chi(F, y);
              }
              o.pass = balanced && zero_sum && additive;
              o.expected = "uniform trace counts, sum chi = 0, chi(x+y) = chi(x)chi(y)";
              o.actual = o.pass ? "all hold"
                                : std::string(balanced ? "" : "trace counts skewed; ") +
                                      (zero_sum ? "" : "nonzero character sum; ") +
                                      (additive ? "" : "additivity failed");
              return o;
            });

  run.claim("coset-product-m" + sm,
            "product of minimal polynomials over all coset leaders is x^n - 1", exec, [&F]() {
              Outcome o;
              Polynomial prod(F.p, {1});
              for (const auto& c : cosets::all_cosets(F))
                prod = poly_mul(prod, cosets::minimal_polynomial(F, c.leader));
              std::vector<int> want(F.n + 1, 0);
              want[0] = F.p - 1;  // x^n - 1 over GF(p)
              want[F.n] = 1;
              Polynomial target(F.p, want);
              o.pass = prod == target;
              o.expected = "x^" + std::to_string(F.n) + " - 1";
              o.actual = o.pass ? o.expected : poly_pretty(prod);
              return o;
            });
}

void add_family_claims(Runner& run, const FieldConfig& F, bool exec) {
  const int m = F.m;
  std::string sm = std::to_string(m);
  for (const auto& fc : family_cases(m)) {
    std::string tag = case_tag(fc);
    run.claim("construct-m" + sm + "-" + tag,
              "exponent construction and invariant audit for " + tag + " at m = " + sm, exec,
              [&F, fc, m]() {
                Outcome o;
                auto P = families::family_v(fc.family_id, m, fc.h);
                auto rep = families::validate_family(F, P);
                o.pass = rep.all_pass();
                o.expected = "all construction invariants hold";
                if (o.pass) {
                  o.actual = "v_raw = " + P.v_raw.str() + ", v = " + P.v.str() + ", all hold";
                } else {
                  o.actual = "failed:";
                  for (const auto& item : rep.items)
                    if (!item.pass) o.actual += " " + item.name;
                }
                return o;
              });
  }
}

void add_weight_claims(Runner& run, const FieldConfig& F, bool exec, int threads) {
  const int m = F.m;
  std::string sm = std::to_string(m);

  run.claim("parity-check-m" + sm,
            "parity-check polynomial of the family-1 code matches the reference", exec,
            [&F, m]() {
              Outcome o;
              auto P = families::family_v(1, m);
              Polynomial h = cosets::parity_check_polynomial(F, 1, P.v_u64() % F.n);
              Polynomial want = poly_parse(F.p, reference_parity_poly(m));
              o.pass = h == want;
              o.expected = poly_pretty(want);
              o.actual = poly_pretty(h);
              return o;
            });

  for (const auto& fc : family_cases(m)) {
    std::string tag = case_tag(fc);
    run.claim("weights-m" + sm + "-" + tag,
              "exact weight distribution of " + tag + " matches the closed-form table", exec,
              [&F, fc, m, threads]() {
                Outcome o;
                auto P = families::family_v(fc.family_id, m, fc.h);
                auto spec = codes::make_code_spec(F, 1, P.v_u64());
                auto dist = codes::weight_distribution(spec, threads);
                auto want = codes::expected_distribution(P.profile, F.p, m);
                auto ref = reference_weights(m, P.profile);
                o.pass = dist.counts == want.counts && dist.counts == ref;
                o.expected = dist_str(want.counts);
                o.actual = dist_str(dist.counts);
                return o;
              });
  }

  run.claim("eqweight-m" + sm,
            "character-sum weight formula equals direct weight on the family-1 code", exec,
            [&F, m]() {
              Outcome o;
              auto P = families::family_v(1, m);
              auto spec = codes::make_code_spec(F, 1, P.v_u64());
              unsigned long long checked = 0, bad = 0;
              auto check = [&](FieldElement a, FieldElement b) {
                ++checked;
                if (codes::weight_via_sums(spec, a, b) != codes::pair_weight(spec, a, b)) ++bad;
              };
              if (m == 3) {
                for (std::uint32_t a = 0; a < F.q; ++a)
                  for (std::uint32_t b = 0; b < F.q; ++b) check(a, b);
              } else {
                std::mt19937_64 rng(kDefaultSeed + m);
                std::uniform_int_distribution<std::uint32_t> pick(0, F.q - 1);
                for (int k = 0; k < 10000; ++k) check(pick(rng), pick(rng));
              }
              o.pass = bad == 0;
              o.expected = "0 mismatches";
              o.actual = std::to_string(bad) + " mismatches over " + std::to_string(checked) +
                         " pairs";
              return o;
            });
}

void add_expsum_claims(Runner& run, const FieldConfig& F, bool exec, std::uint64_t seed) {
  const int m = F.m;
  std::string sm = std::to_string(m);

  run.claim("split-identity-m" + sm,
            "splitting T into two even-exponent sums is exact for both nonsquare choices", exec,
            [&F, m, seed]() {
              Outcome o;
              auto P = families::family_v(1, m);
              std::uint64_t pairs = m == 3 ? 0 : 1000;  // 0 = exhaustive
              FieldElement minus_one = field::neg(F, 1);
              FieldElement other = field::mul(F, minus_one, field::mul(F, F.generator, F.generator));
              // minus_one * alpha^2 is a second nonsquare distinct from -1
              std::uint64_t total = 0, fail = 0;
              for (FieldElement lambda : {minus_one, other}) {
                auto rep = expsums::tsum_split_check(F, 1, P.v_u64(), P.s_u64(), lambda, pairs,
                                                     seed);
                total += rep.checked;
                fail += rep.failures;
              }
              o.pass = fail == 0;
              o.expected = "identity holds on every checked pair";
              o.actual = std::to_string(fail) + " failures over " + std::to_string(total) +
                         " pairs";
              return o;
            });

  std::vector<int> hs;
  if (m == 3) hs = {1};
  if (m == 5) hs = {1, 2};
  if (m == 7) hs = {1};
  for (int h : hs) {
    run.claim("folded-sum-m" + sm + "-h" + std::to_string(h),
              "folded quadratic character sum distribution matches its four-row closed form",
              exec, [&F, m, h]() {
                Outcome o;
                auto dist = expsums::folded_r_sum_distribution(F, h);
                auto want = expsums::expected_folded_distribution(F);
                auto ref = reference_folded(m);
                o.pass = dist.entries == want.entries && (ref.empty() || dist.entries == ref);
                o.expected = lldist_str(want.entries);
                o.actual = lldist_str(dist.entries);
                return o;
              });
  }
}

void add_dual_claims(Runner& run, const FieldConfig& F, bool exec) {
  const int m = F.m;
  std::string sm = std::to_string(m);

  run.claim("dual-m" + sm + "-family1",
            "family-1 dual reaches minimum distance 4 with all three conditions met", exec,
            [&F, m]() {
              Outcome o;
              auto P = families::family_v(1, m);
              auto spec = codes::make_code_spec(F, 1, P.v_u64());
              auto rep = dualcheck::dual_report(spec);
              o.pass = rep.conditions.all() && rep.distance.d == 4;
              o.expected = "c1 c2 c3 all true, d = 4";
              o.actual = std::string("c1=") + (rep.conditions.c1 ? "T" : "F") +
                         " c2=" + (rep.conditions.c2 ? "T" : "F") +
                         " c3=" + (rep.conditions.c3 ? "T" : "F") + " d=" +
                         (rep.distance.d ? std::to_string(*rep.distance.d) : "none<=4");
              return o;
            });

  for (std::uint64_t v : odd_exponents(m)) {
    run.claim("dual-m" + sm + "-v" + std::to_string(v),
              "odd exponent v = " + std::to_string(v) + " forces dual distance 2", exec,
              [&F, v]() {
                Outcome o;
                auto spec = codes::make_code_spec(F, 1, v);
                auto rep = dualcheck::dual_report(spec);
                o.pass = !rep.conditions.c1 && rep.distance.d == 2;
                o.expected = "c1 false, d = 2";
                o.actual = std::string("c1=") + (rep.conditions.c1 ? "T" : "F") + " d=" +
                           (rep.distance.d ? std::to_string(*rep.distance.d) : "none<=4");
                return o;
              });
  }

  run.claim("sphere-packing-m" + sm,
            "sphere-packing bound caps the [n, n-2m] dual at distance 4", exec, [&F, m]() {
              Outcome o;
              int d = dualcheck::sphere_packing_max_d(F.n, static_cast<int>(F.n) - 2 * m, F.p);
              o.pass = d == 4;
              o.expected = "4";
              o.actual = std::to_string(d);
              return o;
            });
}

void add_sequence_claims(Runner& run, const FieldConfig& F, bool exec) {
  const int m = F.m;
  std::string sm = std::to_string(m);
  auto vs = odd_exponents(m);
  if (vs.empty()) return;

  run.claim("xcorr-m" + sm,
            "decimation crosscorrelation spectra are three-valued at the predicted levels", exec,
            [&F, vs]() {
              Outcome o;
              auto seq = sequences::m_sequence(F);
              auto want = sequences::expected_crosscorrelation_values(F);
              o.expected = "values " + set_str(want);
              o.pass = true;
              for (std::uint64_t v : vs) {
                auto spec = sequences::crosscorrelation(F, seq, v);
                std::set<long long> got;
                for (const auto& [value, freq] : spec.values) got.insert(value);
                if (got != want) {
                  o.pass = false;
                  o.actual += "v=" + std::to_string(v) + " gave " + set_str(got) + "; ";
                }
              }
              if (o.pass) o.actual = "all " + std::to_string(vs.size()) + " decimations match";
              return o;
            });
}

void add_parametrization_claims(Runner& run, const FieldConfig& F, bool exec) {
  const int m = F.m;
  std::string sm = std::to_string(m);

  std::optional<int> h;
  if (m % 8 == 7)
    h = (m + 1) / 8;
  else
    h = 1;  // the power identities are Frobenius identities, valid for any h
  run.claim("hyperbola-m" + sm,
            "hyperbola solutions are exactly the theta parametrization, with power expansions",
            exec, [&F, h]() {
              Outcome o;
              auto rep = dualcheck::hyperbola_solutions(F, h);
              o.pass = rep.sets_equal && rep.powers_hold;
              o.expected = std::to_string(F.n) + " solutions covered, powers hold";
              o.actual = std::to_string(rep.solution_count) + " solutions, sets " +
                         (rep.sets_equal ? "equal" : "differ") + ", powers " +
                         (rep.powers_hold ? "hold" : "fail");
              return o;
            });

  if (m == 3) {
    for (int hh : {1, 2}) {
      run.claim("circle-m3-h" + std::to_string(hh),
                "circle solutions over the quadratic extension match the epsilon-theta form",
                exec, [&F, hh]() {
                  Outcome o;
                  auto rep = dualcheck::circle_solutions_ext(F, hh);
                  o.pass = rep.epsilon_squared_is_minus_one && rep.sets_equal && rep.powers_hold;
                  o.expected = "epsilon^2 = -1, sets equal, powers hold";
                  o.actual = std::string("epsilon^2 ") +
                             (rep.epsilon_squared_is_minus_one ? "ok" : "bad") + ", " +
                             std::to_string(rep.solution_count) + " solutions, sets " +
                             (rep.sets_equal ? "equal" : "differ") + ", powers " +
                             (rep.powers_hold ? "hold" : "fail");
                  return o;
                });
    }
  }
}

}  // namespace

int SuiteResult::failures() const {
  int n = 0;
  for (const auto& i : items) n += i.status == "FAIL";
  return n;
}

int SuiteResult::passes() const {
  int n = 0;
  for (const auto& i : items) n += i.status == "PASS";
  return n;
}

int SuiteResult::skipped() const {
  int n = 0;
  for (const auto& i : items) n += i.status == "SKIPPED";
  return n;
}

bool SuiteResult::all_pass() const { return failures() == 0; }

SuiteResult run_suite(const SuiteOptions& opt) {
  SuiteResult result;
  Runner run(result);

  for (int m : opt.ms) {
    const bool exec = m != 7 || opt.heavy;
    // Build the field once per scale; claims share it.
    FieldConfig F = field::make_field(3, m);
    add_field_claims(run, F, exec, opt.seed);
    add_family_claims(run, F, exec);
    add_weight_claims(run, F, exec, opt.threads);
    add_expsum_claims(run, F, exec, opt.seed);
    add_dual_claims(run, F, exec);
    add_sequence_claims(run, F, exec);
    add_parametrization_claims(run, F, exec);
  }

  // Integer-only facts, independent of any field table.
  for (int m : {7, 15, 23}) {
    run.claim("gcd-facts-m" + std::to_string(m),
              "mod-16 branch of the s and 3^h-1 gcd facts at m = " + std::to_string(m), true,
              [m]() {
                Outcome o;
                auto f = dualcheck::gcd_facts(m);
                o.pass = f.facts_hold;
                o.expected = f.m_is_7_mod_16 ? "s=4 mod 8, gcds 4 and 2" : "s=2 mod 8, gcds 2 and 8";
                o.actual = "s mod 8 = " + std::to_string(f.s_mod_8) + ", gcds " +
                           f.gcd_s_q2.str() + " and " + f.gcd_h_q2.str();
                return o;
              });
  }
  return result;
}

}  // namespace twc::verify
