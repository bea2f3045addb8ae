#include "twc/dualcheck.hpp"

#include <algorithm>
#include <string>

#include "twc/cosets.hpp"

namespace twc::dualcheck {

using field::FieldConfig;
using field::FieldElement;

namespace {

constexpr std::uint64_t kMaxPairEntries = 60'000'000;

BigInt big_pow(int base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

ConditionReport check_conditions(const FieldConfig& F, std::uint64_t v) {
  const std::uint32_t n = F.n;
  const std::uint32_t vr = static_cast<std::uint32_t>(v % n);
  auto cv = cosets::coset(F, vr);
  if (cv.size() != F.m)
    throw BadCosetSize("coset of v has size " + std::to_string(cv.size()) + ", need m = " +
                       std::to_string(F.m));
  if (!cosets::cosets_disjoint(F, 1, vr))
    throw CosetsOverlap("v lies in the coset of 1; the conditions assume two distinct zeros");

  ConditionReport rep;
  rep.c1 = v % 2 == 0;

  auto powv = [&](FieldElement x) -> FieldElement {
    if (x == 0) return 0;
    return F.alog[static_cast<std::uint64_t>(F.log[x]) * vr % n];
  };

  bool one_solves = false;
  for (std::uint32_t x = 1; x < F.q; ++x) {
    // (-x-1)^v + x^v + 1
    FieldElement lhs = field::add(F, field::add(F, powv(field::neg(F, field::add(F, x, 1))),
                                                powv(x)),
                                  1);
    if (lhs == 0) {
      if (x == 1)
        one_solves = true;
      else
        rep.c2_witnesses.push_back(x);
    }
  }
  rep.c2 = one_solves && rep.c2_witnesses.empty();

  bool zero_solves = false;
  for (std::uint32_t x = 0; x < F.q; ++x) {
    // (x+1)^v - x^v - 1
    FieldElement lhs =
        field::sub(F, field::sub(F, powv(field::add(F, x, 1)), powv(x)), 1);
    if (lhs == 0) {
      if (x == 0)
        zero_solves = true;
      else
        rep.c3_witnesses.push_back(x);
    }
  }
  rep.c3 = zero_solves && rep.c3_witnesses.empty();
  return rep;
}

namespace {

struct PairEntry {
  std::uint64_t key;
  std::uint64_t val;  // ((i * n + j) << 1) | (c - 1)
  bool operator<(const PairEntry& o) const { return key < o.key; }
};

struct MomentTables {
  std::vector<FieldElement> pu, pv;  // alpha^{iu}, alpha^{iv}
};

MomentTables moment_tables(const codes::CodeSpec& spec) {
  const FieldConfig& F = spec.cfg;
  MomentTables t;
  t.pu.resize(F.n);
  t.pv.resize(F.n);
  for (std::uint32_t i = 0; i < F.n; ++i) {
    t.pu[i] = F.alog[static_cast<std::uint64_t>(i) * spec.u % F.n];
    t.pv[i] = F.alog[static_cast<std::uint64_t>(i) * spec.v % F.n];
  }
  return t;
}

std::uint64_t pack_key(const FieldConfig& F, FieldElement su, FieldElement sv) {
  return static_cast<std::uint64_t>(su) * F.q + sv;
}

std::uint64_t negate_key(const FieldConfig& F, std::uint64_t key) {
  FieldElement su = static_cast<FieldElement>(key / F.q);
  FieldElement sv = static_cast<FieldElement>(key % F.q);
  return pack_key(F, field::neg(F, su), field::neg(F, sv));
}

// Sorts witness positions while carrying coefficients along.
void emit(DualDistance& out, int w, std::vector<std::uint32_t> pos, std::vector<int> coeff) {
  std::vector<std::size_t> idx(pos.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
  out.d = w;
  out.positions.clear();
  out.coefficients.clear();
  for (std::size_t k : idx) {
    out.positions.push_back(pos[k]);
    out.coefficients.push_back(coeff[k]);
  }
}

}  // namespace

DualDistance dual_min_distance(const codes::CodeSpec& spec, int limit) {
  if (limit < 1 || limit > 4)
    throw BadParameters("dual distance search handles limits 1..4, got " +
                        std::to_string(limit));
  const FieldConfig& F = spec.cfg;
  const std::uint32_t n = F.n;
  DualDistance out;
  out.limit = limit;

  // w = 1 is impossible: c alpha^{iu} is never zero.  Start at w = 2, where
  // scanning the position difference suffices by cyclic symmetry.
  if (limit < 2) return out;
  auto mt = moment_tables(spec);
  for (std::uint32_t d = 1; d < n; ++d) {
    for (int c = 1; c <= 2; ++c) {
      FieldElement ce = static_cast<FieldElement>(c);
      if (field::add(F, 1, field::mul(F, ce, mt.pu[d])) == 0 &&
          field::add(F, 1, field::mul(F, ce, mt.pv[d])) == 0) {
        emit(out, 2, {0, d}, {1, c});
        return out;
      }
    }
  }
  if (limit < 3) return out;

  if (static_cast<std::uint64_t>(n) * (n - 1) > kMaxPairEntries)
    throw TooLarge("pair table for the w >= 3 search needs n(n-1) = " +
                   std::to_string(static_cast<std::uint64_t>(n) * (n - 1)) +
                   " entries, over the limit of " + std::to_string(kMaxPairEntries));

  // Pair table: every (i < j, c) keyed by the GF(q)^2 moment of
  // alpha-column(i) + c * alpha-column(j), canonical leading coefficient 1.
  std::vector<PairEntry> table;
  table.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (std::uint32_t i = 0; i + 1 < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (int c = 1; c <= 2; ++c) {
        FieldElement ce = static_cast<FieldElement>(c);
        std::uint64_t key = pack_key(F, field::add(F, mt.pu[i], field::mul(F, ce, mt.pu[j])),
                                     field::add(F, mt.pv[i], field::mul(F, ce, mt.pv[j])));
        table.push_back(
            {key, ((static_cast<std::uint64_t>(i) * n + j) << 1) | static_cast<unsigned>(c - 1)});
      }
  std::sort(table.begin(), table.end());

  auto each_match = [&](std::uint64_t key, auto&& fn) {
    auto lo = std::lower_bound(table.begin(), table.end(), PairEntry{key, 0});
    for (auto it = lo; it != table.end() && it->key == key; ++it) {
      std::uint64_t packed = it->val;
      int c = static_cast<int>(packed & 1) + 1;
      std::uint32_t j = static_cast<std::uint32_t>((packed >> 1) % n);
      std::uint32_t i = static_cast<std::uint32_t>((packed >> 1) / n);
      if (fn(i, j, c)) return true;
    }
    return false;
  };

  // w = 3: column(i) + c2 (column(j) + c' column(k)) = 0, so the pair moment
  // must equal -inverse(c2) times the single-column moment.
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint64_t ki = pack_key(F, mt.pu[i], mt.pv[i]);
    for (int c2 = 1; c2 <= 2; ++c2) {
      // -inverse(1) = -1, -inverse(2) = -2 = 1 in GF(3)
      std::uint64_t target = c2 == 1 ? negate_key(F, ki) : ki;
      bool hit = each_match(target, [&](std::uint32_t j, std::uint32_t k, int cp) {
        if (j == i || k == i) return false;
        int c3 = (c2 * cp) % 3;
        emit(out, 3, {i, j, k}, {1, c2, c3});
        return true;
      });
      if (hit) return out;
    }
  }
  if (limit < 4) return out;

  // w = 4: two disjoint pairs with moments K1 = -c3 K2; scanning entries in
  // key order and probing the two compatible keys.
  for (const PairEntry& e : table) {
    std::uint64_t packed = e.val;
    int c2 = static_cast<int>(packed & 1) + 1;
    std::uint32_t j = static_cast<std::uint32_t>((packed >> 1) % n);
    std::uint32_t i = static_cast<std::uint32_t>((packed >> 1) / n);
    for (int c3 = 1; c3 <= 2; ++c3) {
      std::uint64_t target = c3 == 1 ? negate_key(F, e.key) : e.key;
      bool hit = each_match(target, [&](std::uint32_t k, std::uint32_t l, int cp) {
        if (k == i || k == j || l == i || l == j) return false;
        int c4 = (c3 * cp) % 3;
        emit(out, 4, {i, j, k, l}, {1, c2, c3, c4});
        return true;
      });
      if (hit) return out;
    }
  }
  return out;
}

int sphere_packing_max_d(std::uint32_t n, int dimension, int p) {
  if (dimension < 0 || static_cast<std::uint32_t>(dimension) > n)
    throw BadParameters("dimension must be between 0 and n");
  const BigInt budget = big_pow(p, static_cast<int>(n) - dimension);
  BigInt ball = 1;   // j = 0 term
  BigInt binom = 1;  // C(n, t)
  BigInt pw = 1;     // (p-1)^t
  std::uint32_t t_max = 0;
  for (std::uint32_t t = 1; t <= n; ++t) {
    binom = binom * (n - t + 1) / t;
    pw *= (p - 1);
    ball += binom * pw;
    if (ball > budget) break;
    t_max = t;
  }
  int d = static_cast<int>(2 * t_max + 2);
  return std::min<int>(d, static_cast<int>(n) + 1);
}

DualReport dual_report(const codes::CodeSpec& spec, int limit) {
  if (spec.u != 1)
    throw BadParameters("the dual analysis is defined for codes with u = 1");
  DualReport rep;
  rep.length = spec.length;
  rep.dual_dimension = static_cast<int>(spec.length) - spec.dimension;
  rep.conditions = check_conditions(spec.cfg, spec.v);
  rep.distance = dual_min_distance(spec, limit);
  rep.sphere_packing_d = sphere_packing_max_d(spec.length, rep.dual_dimension, spec.cfg.p);
  return rep;
}

HyperbolaReport hyperbola_solutions(const FieldConfig& F, std::optional<int> h_opt) {
  const std::uint32_t n = F.n;
  HyperbolaReport rep;

  // Brute-force count of y1^2 - x1^2 = 1: for each x1, count square roots of
  // 1 + x1^2.
  for (std::uint32_t x = 0; x < F.q; ++x) {
    FieldElement t = field::add(F, 1, field::mul(F, x, x));
    if (t == 0)
      rep.solution_count += 1;
    else if (field::is_square(F, t))
      rep.solution_count += 2;
  }

  int h = h_opt.value_or(F.m % 8 == 7 ? (F.m + 1) / 8 : 0);
  rep.h = h;
  rep.powers_checked = h > 0;
  if (rep.powers_checked && h >= F.m)
    throw BadParameters("h must be below m for the power identities");

  std::uint64_t s = 0, e1 = 0;
  if (rep.powers_checked) {
    std::uint64_t p3h = 1;
    for (int i = 0; i < h; ++i) p3h *= F.p;
    s = p3h + 1;
    e1 = p3h - 1;
  }

  bool param_ok = true, powers_ok = rep.powers_checked;
  for (std::uint32_t j = 0; j < n; ++j) {
    FieldElement th = F.alog[j];
    FieldElement thi = F.alog[(n - j) % n];
    FieldElement x1 = field::sub(F, th, thi);
    FieldElement y1 = field::neg(F, field::add(F, th, thi));
    // On the hyperbola, and theta recoverable as y1 - x1 (injectivity).
    if (field::sub(F, field::mul(F, y1, y1), field::mul(F, x1, x1)) != 1 ||
        field::sub(F, y1, x1) != th)
      param_ok = false;
    if (rep.powers_checked) {
      FieldElement ths = F.alog[j * (s % n) % n];
      FieldElement thsi = F.alog[(n - j * (s % n) % n) % n];
      FieldElement the = F.alog[j * (e1 % n) % n];
      FieldElement thei = F.alog[(n - j * (e1 % n) % n) % n];
      FieldElement cross = field::add(F, the, thei);
      FieldElement base = field::add(F, ths, thsi);
      if (field::pow(F, x1, static_cast<long long>(s)) != field::sub(F, base, cross) ||
          field::pow(F, y1, static_cast<long long>(s)) != field::add(F, base, cross))
        powers_ok = false;
    }
  }
  rep.param_count = n;
  rep.sets_equal = param_ok && rep.solution_count == n;
  rep.powers_hold = powers_ok;
  return rep;
}

namespace {

// GF(q^2) as pairs a + b Y over GF(q) with Y^2 = lambda (the fixed nonsquare).
struct Ext {
  FieldElement a = 0, b = 0;
  bool operator==(const Ext& o) const { return a == o.a && b == o.b; }
};

class ExtField {
 public:
  explicit ExtField(const FieldConfig& F)
      : F_(F), lambda_(field::fixed_nonsquare(F)), order_(static_cast<std::uint64_t>(F.q) * F.q - 1) {
    find_generator();
  }

  Ext one() const { return {1, 0}; }
  Ext minus_one() const { return {field::neg(F_, 1), 0}; }
  Ext generator() const { return gen_; }
  std::uint64_t order() const { return order_; }

  Ext add(Ext x, Ext y) const { return {field::add(F_, x.a, y.a), field::add(F_, x.b, y.b)}; }
  Ext neg(Ext x) const { return {field::neg(F_, x.a), field::neg(F_, x.b)}; }
  Ext sub(Ext x, Ext y) const { return add(x, neg(y)); }

  Ext mul(Ext x, Ext y) const {
    return {field::add(F_, field::mul(F_, x.a, y.a),
                       field::mul(F_, lambda_, field::mul(F_, x.b, y.b))),
            field::add(F_, field::mul(F_, x.a, y.b), field::mul(F_, x.b, y.a))};
  }

  Ext pow(Ext x, std::uint64_t e) const {
    Ext r = one();
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  bool is_square(Ext x) const { return pow(x, order_ / 2) == one(); }

 private:
  void find_generator() {
    std::vector<std::uint64_t> primes;
    std::uint64_t rem = order_;
    for (std::uint64_t d = 2; d * d <= rem; ++d)
      if (rem % d == 0) {
        primes.push_back(d);
        while (rem % d == 0) rem /= d;
      }
    if (rem > 1) primes.push_back(rem);

    for (std::uint32_t a = 0; a < F_.q; ++a) {
      Ext cand{a, 1};
      bool ok = true;
      for (std::uint64_t r : primes)
        if (pow(cand, order_ / r) == one()) {
          ok = false;
          break;
        }
      if (ok) {
        gen_ = cand;
        return;
      }
    }
    throw ExtensionConstructionFailure("no generator of GF(q^2) found among a + Y candidates");
  }

  const FieldConfig& F_;
  FieldElement lambda_;
  std::uint64_t order_;
  Ext gen_;
};

}  // namespace

CircleReport circle_solutions_ext(const FieldConfig& F, int h) {
  if (F.m % 2 == 0)
    throw BadParameters("the circle parametrization is set up for odd m");
  if (h < 1) throw BadParameters("h must be positive");
  ExtField E(F);
  const std::uint64_t Q1 = E.order();  // q^2 - 1
  CircleReport rep;
  rep.h = h;

  if (Q1 % 4 != 0)
    throw ExtensionConstructionFailure("q^2 - 1 is not divisible by 4");
  const Ext eps = E.pow(E.generator(), Q1 / 4);
  rep.epsilon_squared_is_minus_one = E.mul(eps, eps) == E.minus_one();

  // Count solutions of x1^2 + y1^2 = -1: square roots of -1 - x1^2.
  for (std::uint32_t a = 0; a < F.q; ++a)
    for (std::uint32_t b = 0; b < F.q; ++b) {
      Ext x{a, b};
      Ext t = E.sub(E.minus_one(), E.mul(x, x));
      if (t == Ext{0, 0})
        rep.solution_count += 1;
      else if (E.is_square(t))
        rep.solution_count += 2;
    }

  std::uint64_t p3h = 1;
  for (int i = 0; i < h; ++i) p3h *= F.p;
  const std::uint64_t s = p3h + 1;
  const Ext gen = E.generator();
  const Ext geninv = E.pow(gen, Q1 - 1);
  const Ext gh = E.pow(gen, p3h % Q1);
  const Ext ghi = E.pow(geninv, p3h % Q1);
  const Ext epss = E.pow(eps, s);
  const Ext epsinv = E.neg(eps);  // eps^2 = -1 so 1/eps = -eps

  bool param_ok = true, powers_ok = true;
  Ext th = E.one(), thi = E.one(), P = E.one(), Pi = E.one();
  for (std::uint64_t k = 0; k < Q1; ++k) {
    Ext x1 = E.mul(eps, E.add(th, thi));
    Ext y1 = E.sub(th, thi);
    if (!(E.add(E.mul(x1, x1), E.mul(y1, y1)) == E.minus_one()) ||
        !(E.neg(E.add(E.mul(epsinv, x1), y1)) == th))
      param_ok = false;

    // theta^s etc. from the maintained theta^{3^h} ladder.
    Ext ths = E.mul(P, th), thsi = E.mul(Pi, thi);
    Ext cr = E.mul(P, thi), cri = E.mul(Pi, th);  // theta^{3^h-1}, theta^{1-3^h}
    Ext cross = E.add(cr, cri);
    Ext base = E.add(ths, thsi);
    if (!(E.pow(x1, s) == E.mul(E.add(base, cross), epss)) ||
        !(E.pow(y1, s) == E.sub(base, cross)))
      powers_ok = false;

    th = E.mul(th, gen);
    thi = E.mul(thi, geninv);
    P = E.mul(P, gh);
    Pi = E.mul(Pi, ghi);
  }
  rep.param_count = Q1;
  rep.sets_equal = param_ok && rep.solution_count == Q1;
  rep.powers_hold = powers_ok;
  return rep;
}

GcdFacts gcd_facts(int m) {
  if (m % 8 != 7)
    throw BadCongruence("the gcd facts need m = 7 mod 8, got m = " + std::to_string(m));
  GcdFacts f;
  f.m = m;
  f.h = (m + 1) / 8;
  f.s = big_pow(3, f.h) + 1;
  const BigInt q2 = big_pow(3, 2 * m) - 1;
  f.s_mod_8 = static_cast<int>(f.s % 8);
  f.gcd_s_q2 = boost::multiprecision::gcd(f.s, q2);
  f.gcd_h_q2 = boost::multiprecision::gcd(BigInt(big_pow(3, f.h) - 1), q2);
  f.m_is_7_mod_16 = m % 16 == 7;
  if (f.m_is_7_mod_16)
    f.facts_hold = f.s_mod_8 == 4 && f.gcd_s_q2 == 4 && f.gcd_h_q2 == 2;
  else
    f.facts_hold = f.s_mod_8 == 2 && f.gcd_s_q2 == 2 && f.gcd_h_q2 == 8;
  return f;
}

}  // namespace twc::dualcheck
