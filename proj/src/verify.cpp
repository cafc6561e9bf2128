#include "charsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "charsum/char_sums.hpp"
#include "charsum/characters.hpp"
#include "charsum/congruence_counts.hpp"
#include "charsum/format.hpp"
#include "charsum/polynomials.hpp"
#include "json.hpp"
#include "serial.hpp"

namespace charsum {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

constexpr double kTolerance = 1e-9;
constexpr u64 kLemma1Combinations = 1'000'000;

template <class T>
std::string str(const T& x) {
  if constexpr (std::is_floating_point_v<T>)
    return format_real(x);
  else if constexpr (std::is_convertible_v<T, std::string>)
    return std::string(x);
  else
    return std::to_string(x);
}

// |complete sum|, exactly 0 when the unit-root sum vanishes.
double exact_abs(const DirichletCharacter& chi, std::span<const i64> v) {
  const ExactUnitRootSum s = complete_sum_exact(chi, v);
  return s.is_zero() ? 0.0 : std::abs(s.to_complex());
}

bool within(double lhs, double rhs) { return lhs <= rhs + kTolerance * std::max(1.0, std::abs(rhs)); }

std::string tuple_text(std::span<const i64> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out + ")";
}

double ipow(double x, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// Calls f on every tuple of [lo, hi]^n in lexicographic order.
void for_each_tuple(int n, i64 lo, i64 hi, const std::function<void(std::span<const i64>)>& f) {
  if (lo > hi) return;
  std::vector<i64> v(static_cast<std::size_t>(n), lo);
  while (true) {
    f(v);
    std::size_t k = v.size();
    while (k > 0 && v[k - 1] == hi) v[--k] = lo;
    if (k == 0) return;
    ++v[k - 1];
  }
}

// Worst instance of a group, by ratio; ties keep the first.
struct GroupWorst {
  u64 instances = 0;
  u64 failures = 0;
  std::optional<BoundReport> worst;

  void add(const BoundReport& r, bool ok) {
    ++instances;
    failures += !ok;
    if (!worst || r.ratio > worst->ratio) worst = r;
  }
  void flush(SuiteResult& out, Params extra = {}) {
    out.instances += instances;
    out.failures += failures;
    if (worst) {
      BoundReport r = *worst;
      r.params.insert(r.params.end(), extra.begin(), extra.end());
      r.params.emplace_back("instances", str(instances));
      r.params.emplace_back("failures", str(failures));
      r.verdict = failures ? Verdict::ExactFail : Verdict::ExactPass;
      out.reports.push_back(std::move(r));
    }
    *this = {};
  }
};

// Report for identity-type checks: lhs = passing instances, rhs = instances.
void tally(SuiteResult& out, const std::string& statement, Params params, u64 passing, u64 total) {
  out.instances += total;
  out.failures += total - passing;
  params.emplace_back("instances", str(total));
  out.reports.push_back(BoundReport::make(statement, std::move(params), static_cast<double>(passing),
                                          static_cast<double>(total),
                                          passing == total ? Verdict::ExactPass : Verdict::ExactFail));
}

IntPolynomial random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<BigInt> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(coef(rng));
  while (c.back() == 0) c.back() = coef(rng);
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Suites.

SuiteResult suite_nmult() {
  SuiteResult out;
  out.id = "lemma-nmult";
  const int r = 2;
  std::vector<std::vector<i64>> tuples;
  for_each_tuple(2 * r, 0, 4, [&](std::span<const i64> v) { tuples.emplace_back(v.begin(), v.end()); });
  for (u64 q1 = 1; q1 <= 12; ++q1)
    for (u64 q2 = q1 + 1; q2 <= 12; ++q2) {
      if (gcd(q1, q2) != 1) continue;
      GroupWorst g;
      u64 equalities = 0;
      for (const auto& v : tuples) {
        const double lhs = static_cast<double>(count_Nv(q1, v) * count_Nv(q2, v));
        const double rhs = static_cast<double>(count_Nv(q1 * q2, v));
        equalities += lhs == rhs;
        g.add(BoundReport::make("lemma-nmult", {{"q1", str(q1)}, {"q2", str(q2)}, {"v", tuple_text(v)}}, lhs, rhs,
                                Verdict::ExactPass),
              lhs <= rhs);
      }
      g.flush(out, {{"equalities", str(equalities)}});
    }
  return out;
}

SuiteResult suite_prime_power(const std::string& id, PrimePowerLemma which, std::vector<u64> moduli) {
  SuiteResult out;
  out.id = id;
  for (u64 m : moduli)
    for (int r = 1; r <= 2; ++r) {
      const auto reports = verify_prime_power_lemma(which, m, r, 0, 4);
      std::map<std::string, GroupWorst> by_char;
      std::vector<std::string> order;
      for (const auto& rep : reports) {
        const std::string& label = rep.params[2].second;
        if (!by_char.count(label)) order.push_back(label);
        by_char[label].add(rep, rep.verdict == Verdict::ExactPass);
      }
      for (const auto& label : order) by_char[label].flush(out);
    }
  return out;
}

SuiteResult suite_squarefree() {
  SuiteResult out;
  out.id = "lemma6";
  for (u64 q : {15, 21, 30, 35, 105}) {
    const auto reports = verify_squarefree_lemma(q, 2, 4);
    if (reports.empty()) {
      // No primitive characters (q = 2 mod 4): the statement holds vacuously.
      out.reports.push_back(BoundReport::make("lemma6", {{"q", str(q)}, {"r", "2"}, {"V", "4"}, {"primitive", "0"}},
                                              0.0, 0.0, Verdict::ExactPass));
      continue;
    }
    std::map<std::string, GroupWorst> by_char;
    std::vector<std::string> order;
    for (const auto& rep : reports) {
      const std::string& label = rep.params[1].second;
      if (!by_char.count(label)) order.push_back(label);
      by_char[label].add(rep, rep.verdict == Verdict::ExactPass);
    }
    for (const auto& label : order) by_char[label].flush(out);
  }
  return out;
}

// N_v(p) / gcd(A_j(v), p) <= max(1, 2r - 2) for the first j with A_j(v) != 0.
// Off the primes dividing A_j(v), W is nonzero mod p of degree <= 2r - 2.
SuiteResult suite_square() {
  SuiteResult out;
  out.id = "lemma7";
  for (int r = 2; r <= 3; ++r) {
    const i64 hi = r == 2 ? 4 : 3;
    std::vector<std::vector<i64>> tuples;
    for_each_tuple(2 * r, 0, hi, [&](std::span<const i64> v) { tuples.emplace_back(v.begin(), v.end()); });
    const double bound = std::max(1, 2 * r - 2);
    for (u64 p = 2; p <= 50; ++p) {
      if (!is_prime(p)) continue;
      GroupWorst g;
      for (const auto& v : tuples) {
        int j = 0;
        BigInt a;
        for (int k = 1; k <= 2 * r && j == 0; ++k) {
          a = compute_Aj(v, k);
          if (a != 0) j = k;
        }
        if (j == 0) continue;
        const BigInt gp = gcd(BigInt(abs(a)), BigInt(static_cast<unsigned long>(p)));
        const double ratio = static_cast<double>(count_Nv(p, v)) / gp.get_d();
        g.add(BoundReport::make("lemma7", {{"p", str(p)}, {"r", str(r)}, {"v", tuple_text(v)}, {"j", str(j)}}, ratio,
                                bound, Verdict::ExactPass),
              ratio <= bound);
      }
      g.flush(out);
    }
  }
  return out;
}

SuiteResult suite_lift(std::uint64_t seed) {
  SuiteResult out;
  out.id = "lemma10";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> qdist(2, 1000);
  std::uniform_int_distribution<int> ddist(1, 4);
  std::map<std::pair<int, int>, std::pair<u64, u64>> by_degree;  // (pass, total)
  for (int i = 0; i < 1000; ++i) {
    const u64 q = qdist(rng);
    i64 lambda;
    do lambda = std::uniform_int_distribution<i64>(1, static_cast<i64>(q))(rng);
    while (gcd_signed(lambda, q) != 1);
    auto make = [&](int degree) {
      IntPolynomial p = random_poly(rng, degree, 50);
      // Shift the constant term so that p(lambda) = 0 mod q.
      const BigInt shift(static_cast<unsigned long>(p.evaluate_mod(lambda, q)));
      return p - IntPolynomial::constant(shift);
    };
    const int df = ddist(rng), dg = ddist(rng);
    const IntPolynomial f = make(df), g = make(dg);
    auto& slot = by_degree[{f.degree(), g.degree()}];
    slot.first += resultant_lift_check(f, g, lambda, q);
    ++slot.second;
  }
  for (const auto& [deg, counts] : by_degree)
    tally(out, "lemma10", {{"deg_f", str(deg.first)}, {"deg_g", str(deg.second)}}, counts.first, counts.second);
  return out;
}

// |q * #{M < n <= M+N : (n, q) = 1} - phi(q) N| <= q 2^{omega(q)} for 0 <= M < q,
// 0 <= N <= 2q; the count is periodic in M. Counts come from a prefix table.
SuiteResult suite_coprime_sieve() {
  SuiteResult out;
  out.id = "lemma15";
  for (u64 q = 1; q <= 500; ++q) {
    const u64 phi = euler_phi(q);
    std::vector<i64> prefix(3 * q + 1, 0);
    for (u64 n = 1; n <= 3 * q; ++n) prefix[n] = prefix[n - 1] + (gcd(n, q) == 1);
    i64 worst = 0;
    u64 arg_m = 0, arg_n = 0;
    for (u64 M = 0; M < q; ++M)
      for (u64 N = 0; N <= 2 * q; ++N) {
        const i64 count = prefix[M + N] - prefix[M];
        const i64 err = std::abs(static_cast<i64>(q) * count - static_cast<i64>(phi * N));
        if (err > worst) {
          worst = err;
          arg_m = M;
          arg_n = N;
        }
      }
    const i64 bound = static_cast<i64>(q) << omega(q);
    const bool ok = worst <= bound;
    const u64 instances = q * (2 * q + 1);
    out.instances += instances;
    out.failures += ok ? 0 : 1;
    out.reports.push_back(BoundReport::make(
        "lemma15", {{"q", str(q)}, {"M", str(arg_m)}, {"N", str(arg_n)}, {"instances", str(instances)}},
        static_cast<double>(worst) / static_cast<double>(q), std::ldexp(1.0, omega(q)),
        ok ? Verdict::ExactPass : Verdict::ExactFail));
  }
  return out;
}

struct RandomInstance {
  int r;
  u64 q;
  i64 lambda;
  i64 V;
  std::uint64_t pick;
};

// The shared family for the oracle suites: r <= 3, q <= 300, V <= 6.
std::vector<RandomInstance> random_instances(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomInstance> out;
  for (int i = 0; i < 200; ++i) {
    RandomInstance x{};
    x.r = std::uniform_int_distribution<int>(1, 3)(rng);
    x.q = std::uniform_int_distribution<u64>(1, 300)(rng);
    x.lambda = std::uniform_int_distribution<i64>(0, static_cast<i64>(x.q) - 1)(rng);
    x.V = std::uniform_int_distribution<i64>(1, 6)(rng);
    x.pick = rng();
    out.push_back(x);
  }
  return out;
}

SuiteResult suite_expansion(std::uint64_t seed) {
  SuiteResult out;
  out.id = "eq6";
  for (const auto& x : random_instances(seed)) {
    const auto chars = enumerate_characters(x.q, false);
    const auto& chi = chars[x.pick % chars.size()];
    const auto gap = moment_expansion_gap(chi, static_cast<u64>(x.V), x.r);
    const bool ok = within(gap.lhs, gap.rhs);
    out.instances += 1;
    out.failures += !ok;
    out.reports.push_back(BoundReport::make(
        "eq6", {{"q", str(x.q)}, {"chi", chi.label()}, {"V", str(x.V)}, {"r", str(x.r)}}, gap.lhs, gap.rhs,
        ok ? Verdict::ExactPass : Verdict::ExactFail));
  }
  return out;
}

SuiteResult suite_split(std::uint64_t seed) {
  SuiteResult out;
  out.id = "eq41";
  u64 pass = 0, total = 0;
  for (const auto& x : random_instances(seed)) {
    const CountResult k = count_K(x.r, x.q, x.lambda, x.V);
    const KSplit s = count_K_split(x.r, x.q, x.lambda, x.V);
    pass += k.count == s.distinct + s.repeated && k.excluded == s.excluded;
    ++total;
  }
  tally(out, "eq41", {{"family", "r<=3 q<=300 V<=6"}}, pass, total);
  return out;
}

// Meet-in-the-middle counters against direct enumeration on random strided sub-boxes.
SuiteResult suite_mitm(std::uint64_t seed) {
  SuiteResult out;
  out.id = "kmitm";
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  u64 pass_k = 0, pass_mult = 0, total = 0;
  for (const auto& x : random_instances(seed)) {
    std::vector<Interval> coords;
    for (int i = 0; i < 2 * x.r; ++i) {
      const i64 lo = std::uniform_int_distribution<i64>(-x.V, x.V)(rng);
      const i64 hi = std::uniform_int_distribution<i64>(lo, x.V)(rng);
      coords.push_back({lo, hi, std::uniform_int_distribution<i64>(1, 2)(rng)});
    }
    const TupleBox box(std::move(coords));
    pass_k += count_K(x.r, x.q, x.lambda, box) == reference::count_K(x.r, x.q, x.lambda, box);
    pass_mult += count_mult_cong(x.r, x.q, x.lambda, box) == reference::count_mult_cong(x.r, x.q, x.lambda, box);
    ++total;
  }
  tally(out, "kmitm", {{"counter", "count_K"}}, pass_k, total);
  tally(out, "kmitm", {{"counter", "count_mult_cong"}}, pass_mult, total);
  return out;
}

// |a_i| <= 2k C(2k-1, i+1) V^{i+1} for every v in [-V, V]^{2k}.
SuiteResult suite_pv_coefficients() {
  SuiteResult out;
  out.id = "eq43";
  for (int k = 1; k <= 3; ++k)
    for (i64 V = 1; V <= (k == 3 ? 3 : 10); ++V) {
      const auto bounds = pv_coefficient_bounds(k, V);
      GroupWorst g;
      for_each_tuple(2 * k, -V, V, [&](std::span<const i64> v) {
        const IntPolynomial p = build_Pv_kloosterman(v);
        double worst = 0.0;
        bool ok = p.degree() <= 2 * k - 2;
        for (int i = 0; i <= 2 * k - 2; ++i) {
          const BigInt a = abs(p.coeff(2 * k - 2 - i));
          ok = ok && a <= bounds[static_cast<std::size_t>(i)];
          worst = std::max(worst, a.get_d() / bounds[static_cast<std::size_t>(i)].get_d());
        }
        g.add(BoundReport::make("eq43", {{"k", str(k)}, {"V", str(V)}, {"v", tuple_text(v)}}, worst, 1.0,
                                Verdict::ExactPass),
              ok);
      });
      g.flush(out);
    }
  return out;
}

SuiteResult suite_adjugate(std::uint64_t seed) {
  SuiteResult out;
  out.id = "adjugate";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (std::size_t n = 1; n <= 6; ++n) {
    u64 pass = 0;
    const u64 total = 200 / 6 + (n <= 200 % 6);
    for (u64 i = 0; i < total; ++i) {
      std::vector<BigInt> data;
      for (std::size_t k = 0; k < n * n; ++k) data.emplace_back(entry(rng));
      const IntMatrix a(n, std::move(data));
      const IntMatrix adj = adjugate(a);
      const IntMatrix scaled = determinant(a) * IntMatrix::identity(n);
      pass += a * adj == scaled && adj * a == scaled;
    }
    tally(out, "adjugate", {{"dimension", str(n)}}, pass, total);
  }
  return out;
}

// Res(f, g) = 0 iff gcd(f, g) is nonconstant, and Res(f, g) = (-1)^{mn} Res(g, f).
SuiteResult suite_resultant_gcd(std::uint64_t seed) {
  SuiteResult out;
  out.id = "res-gcd";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(1, 4);
  u64 pass_gcd = 0, pass_swap = 0, common = 0;
  const u64 total = 200;
  for (u64 i = 0; i < total; ++i) {
    IntPolynomial f = random_poly(rng, deg(rng), 5), g = random_poly(rng, deg(rng), 5);
    if (i % 2 == 1) {
      const IntPolynomial h = random_poly(rng, deg(rng) % 2 + 1, 3);
      f = f * h;
      g = g * h;
    }
    const BigInt res = resultant(f, g);
    const bool shares = polynomial_gcd(f, g).degree() >= 1;
    common += shares;
    pass_gcd += (res == 0) == shares;
    const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
    pass_swap += res == sign * resultant(g, f);
  }
  tally(out, "res-gcd", {{"check", "zero-iff-common-factor"}, {"with_common_factor", str(common)}}, pass_gcd, total);
  tally(out, "res-gcd", {{"check", "antisymmetry"}}, pass_swap, total);
  return out;
}

SuiteResult suite_polya_vinogradov() {
  SuiteResult out;
  out.id = "pv";
  for (u64 q = 3; q <= 300; ++q) {
    GroupWorst g;
    for (const auto& chi : enumerate_characters(q, true)) {
      const double ratio = pv_ratio(chi);
      g.add(BoundReport::make("pv", {{"q", str(q)}, {"chi", chi.label()}}, ratio, 1.0, Verdict::ExactPass), ratio <= 1.0);
    }
    g.flush(out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scans.

// max over lambda coprime to q of count_K over [-V, V]^{2r}; counts each
// diagonal-bound violation.
u64 max_K_coprime(int r, u64 q, i64 V, ScanResult& out) {
  u64 best = 0;
  for (u64 lam = 0; lam < q; ++lam) {
    if (gcd(lam, q) != 1) continue;
    const u64 k = count_K(r, q, static_cast<i64>(lam), V).count;
    best = std::max(best, k);
    u64 units = 0;
    for (i64 v = -V; v <= V; ++v) units += gcd_signed(static_cast<i64>(lam) + v, q) == 1;
    u64 diagonal = 1;
    for (int i = 0; i < r; ++i) diagonal *= units;
    ++out.sanity_checks;
    out.sanity_failures += k < diagonal;
  }
  return best;
}

void check_expansion(const DirichletCharacter& chi, u64 V, int r, double moment_value, ScanResult& out) {
  const double rhs = expansion_rhs(CharacterTable(chi), V, r);
  ++out.sanity_checks;
  out.sanity_failures += !within(moment_value, rhs);
}

void scan_moment(const std::string& statement, const Grid& grid, double (*rhs)(u64, u64, int), ScanResult& out) {
  for (i64 q : grid.get("q"))
    for (const auto& chi : enumerate_characters(static_cast<u64>(q), true))
      for (i64 r : grid.get("r"))
        for (i64 V : grid.get("V")) {
          const double lhs = moment(chi, static_cast<u64>(V), static_cast<int>(r)).value;
          check_expansion(chi, static_cast<u64>(V), static_cast<int>(r), lhs, out);
          out.reports.push_back(BoundReport::make(
              statement, {{"q", str(q)}, {"chi", chi.label()}, {"V", str(V)}, {"r", str(r)}}, lhs,
              rhs(static_cast<u64>(q), static_cast<u64>(V), static_cast<int>(r)), Verdict::ReportOnly));
        }
}

// Largest V with V^{denominator} <= q.
i64 root_floor(u64 q, u64 denominator) {
  i64 V = 1;
  while (true) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(V + 1), static_cast<unsigned long>(denominator));
    if (p > BigInt(static_cast<unsigned long>(q))) return V;
    ++V;
  }
}

void scan_lemma9(const Grid& grid, ScanResult& out) {
  for (i64 q : grid.get("q"))
    for (i64 r : grid.get("r")) {
      const int rr = static_cast<int>(r);
      // The bound exponent 1/(4k(k-1)) read with k = r and with k = r + 1.
      for (int shift = 0; shift <= 1; ++shift) {
        const int k = rr + shift;
        if (k < 2) continue;
        const i64 vmax = root_floor(static_cast<u64>(q), static_cast<u64>(4 * k * (k - 1)));
        for (i64 V = 1; V <= vmax; ++V) {
          const double lhs = static_cast<double>(max_K_coprime(rr, static_cast<u64>(q), V, out));
          out.reports.push_back(BoundReport::make(
              "lemma9", {{"q", str(q)}, {"r", str(r)}, {"reading", shift ? "k=r+1" : "k=r"}, {"V", str(V)}}, lhs,
              ipow(static_cast<double>(V), rr), Verdict::ReportOnly));
        }
      }
    }
}

void scan_cor11(const Grid& grid, ScanResult& out) {
  for (i64 q : grid.get("q"))
    for (i64 r : grid.get("r"))
      for (i64 V : grid.get("V")) {
        const double lhs = static_cast<double>(max_K_coprime(static_cast<int>(r), static_cast<u64>(q), V, out));
        out.reports.push_back(BoundReport::make("corollary11", {{"q", str(q)}, {"r", str(r)}, {"V", str(V)}}, lhs,
                                                rhs_cor11(static_cast<u64>(q), static_cast<u64>(V), static_cast<int>(r)),
                                                Verdict::ReportOnly));
      }
}

void scan_lemma1(const Grid& grid, ScanResult& out) {
  for (i64 q : grid.get("q"))
    for (i64 r : grid.get("r"))
      for (i64 V : grid.get("V")) {
        if (V > q) continue;
        BoundReport rep = verify_lemma1_rhs(static_cast<u64>(q), static_cast<u64>(V), static_cast<int>(r));
        for (const auto& chi : enumerate_characters(static_cast<u64>(q), true)) {
          const double m = moment(chi, static_cast<u64>(V), static_cast<int>(r)).value;
          check_expansion(chi, static_cast<u64>(V), static_cast<int>(r), m, out);
        }
        out.reports.push_back(std::move(rep));
      }
}

void scan_theorem4(const Grid& grid, ScanResult& out) {
  for (i64 q : grid.get("q")) {
    i64 nmax = 0;
    for (i64 N : grid.get("N")) nmax = std::max(nmax, N);
    if (nmax < 1) continue;
    for (const auto& chi : enumerate_characters(static_cast<u64>(q), true)) {
      const auto sums = max_short_sums(chi, static_cast<u64>(nmax));
      for (i64 r : grid.get("r"))
        for (i64 N : grid.get("N")) {
          if (N < 1) continue;
          out.reports.push_back(BoundReport::make(
              "theorem4", {{"q", str(q)}, {"chi", chi.label()}, {"N", str(N)}, {"r", str(r)}},
              sums[static_cast<std::size_t>(N) - 1],
              rhs_charsumest(static_cast<u64>(q), static_cast<u64>(N), static_cast<int>(r)), Verdict::ReportOnly));
        }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactPass:
      return "exact-pass";
    case Verdict::ExactFail:
      return "exact-fail";
    case Verdict::ReportOnly:
      return "report-only";
  }
  return "unknown";
}

BoundReport BoundReport::make(std::string statement, Params params, double lhs, double rhs, Verdict verdict) {
  BoundReport r;
  r.statement = std::move(statement);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  if (rhs > 0)
    r.ratio = lhs / rhs;
  else
    r.ratio = lhs == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  r.verdict = verdict;
  return r;
}

std::string BoundReport::params_text() const {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? ";" : "") + params[i].first + "=" + params[i].second;
  return out;
}

std::string BoundReport::csv_header() { return "statement,params,lhs,rhs,ratio,verdict"; }

std::string BoundReport::csv_row() const {
  return csv_field(statement) + ',' + csv_field(params_text()) + ',' + format_real(lhs) + ',' + format_real(rhs) + ',' +
         format_real(ratio) + ',' + to_string(verdict);
}

std::string BoundReport::json() const {
  nlohmann::ordered_json j;
  j["statement"] = statement;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  // Rounded to the 12 digits used everywhere else, then printed shortest.
  auto num = [](double x) { return std::isfinite(x) ? std::stod(format_real(x)) : x; };
  j["lhs"] = num(lhs);
  j["rhs"] = num(rhs);
  j["ratio"] = num(ratio);
  j["verdict"] = to_string(verdict);
  return j.dump();
}

std::string reports_csv(const std::vector<BoundReport>& reports) {
  std::string out = BoundReport::csv_header() + "\n";
  for (const auto& r : reports) out += r.csv_row() + "\n";
  return out;
}

std::string reports_json(const std::vector<BoundReport>& reports) {
  std::string out = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) out += (i ? ",\n " : "\n ") + reports[i].json();
  return out + (reports.empty() ? "]\n" : "\n]\n");
}

double rhs_main1(u64 q, u64 V, int r) {
  if (r < 2) throw std::domain_error("rhs_main1: r must be at least 2");
  const auto parts = decompose_burgess(q);
  const double Q = static_cast<double>(q), v = static_cast<double>(V), s = static_cast<double>(parts.s),
               c = static_cast<double>(parts.c);
  return Q * ipow(v, r) + std::sqrt(Q) * std::pow(s, 0.25) * std::sqrt(c) * std::pow(v, r + 0.5) +
         std::sqrt(Q) * std::pow(c, 0.5 - 1.0 / (16.0 * r * (r - 1))) * ipow(v, 2 * r);
}

double rhs_cor1(u64 q, u64 V, int r) {
  if (r < 2) throw std::domain_error("rhs_cor1: r must be at least 2");
  const double Q = static_cast<double>(q), v = static_cast<double>(V),
               c = static_cast<double>(decompose_burgess(q).c);
  return Q * ipow(v, r) + std::pow(Q, 0.75) * std::pow(c, 0.25) * std::pow(v, r + 0.5) +
         std::sqrt(Q) * std::pow(c, 0.5 - 1.0 / (16.0 * r * (r - 1))) * ipow(v, 2 * r);
}

double rhs_charsumest(u64 q, u64 N, int r) {
  if (r < 1) throw std::domain_error("rhs_charsumest: r must be positive");
  const double c = static_cast<double>(decompose_burgess(q).c), rr = r;
  return std::pow(static_cast<double>(N), 1.0 - 1.0 / rr) * std::pow(static_cast<double>(q), (rr + 1) / (4 * rr * rr)) *
         std::pow(c, (rr - 1) / (4 * rr * rr) - 1.0 / (32 * rr * rr * rr));
}

double rhs_weil_moment(u64 q, u64 V, int r) {
  const double Q = static_cast<double>(q), v = static_cast<double>(V);
  return Q * ipow(v, r) + std::sqrt(Q) * ipow(v, 2 * r);
}

double rhs_burgess(u64 q, u64 N, int r) {
  if (r < 1) throw std::domain_error("rhs_burgess: r must be positive");
  const double rr = r;
  return std::pow(static_cast<double>(N), 1.0 - 1.0 / rr) * std::pow(static_cast<double>(q), (rr + 1) / (4 * rr * rr));
}

double rhs_cor11(u64 q, u64 V, int r) {
  if (r < 2) throw std::domain_error("rhs_cor11: r must be at least 2");
  const double v = static_cast<double>(V);
  return ipow(v, 2 * r) / std::pow(static_cast<double>(q), 1.0 / (4.0 * (r - 1))) + ipow(v, r);
}

double lemma1_rhs(u64 q, u64 V, int r) {
  if (r < 1) throw std::domain_error("lemma1_rhs: r must be positive");
  if (V < 1 || V > q) throw std::domain_error("lemma1_rhs: V must lie in [1, q]");
  const QPartsCRT parts = decompose_crt(q);
  std::vector<u64> p1, p2;
  for (const auto& f : factorize(parts.q1).factors) p1.push_back(f.prime);
  for (const auto& f : factorize(parts.q2).factors) p2.push_back(f.prime);
  const auto slots = static_cast<std::size_t>(2 * r - 1);  // j = 2 .. 2r
  const auto d5 = divisors(parts.q5);
  double combos = static_cast<double>(d5.size());
  for (std::size_t i = 0; i < p1.size() + p2.size(); ++i) combos *= static_cast<double>(slots + 1);
  if (combos > static_cast<double>(kLemma1Combinations))
    throw std::domain_error("lemma1_rhs: " + format_real(combos) + " divisor combinations exceed the budget of " +
                            std::to_string(kLemma1Combinations));

  // (max over lambda of K_{r,m}(lambda, W))^{1/2r}, cached by (m, W).
  std::map<std::pair<u64, u64>, double> cache;
  auto kterm = [&](u64 m, u64 W) {
    const auto key = std::make_pair(m, W);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
    u64 best = 0;
    for (u64 lam = 0; lam < m; ++lam) best = std::max(best, count_K(r, m, static_cast<i64>(lam), static_cast<i64>(W)).count);
    return cache[key] = std::pow(static_cast<double>(best), 1.0 / (2.0 * r));
  };

  // Each prime of q1 (resp. q2) goes to one t_j (resp. s_j) or to none; code 0 is none.
  const std::size_t n1 = p1.size(), n = p1.size() + p2.size();
  double sum = 0.0;
  for (u64 d : d5) {
    const u64 m = parts.q3 * parts.q4 * d;
    std::vector<std::size_t> code(n, 0);
    while (true) {
      std::vector<u64> t(slots, 1), s(slots, 1);
      for (std::size_t i = 0; i < n; ++i)
        if (code[i]) (i < n1 ? t : s)[code[i] - 1] *= i < n1 ? p1[i] : p2[i - n1];
      bool admissible = true;
      for (std::size_t j = 0; j < slots && admissible; ++j) admissible = t[j] * s[j] <= V;
      if (admissible) {
        double term = std::sqrt(static_cast<double>(d));
        for (std::size_t j = 0; j < slots; ++j)
          term *= std::sqrt(static_cast<double>(t[j])) * static_cast<double>(s[j]) * kterm(m, V / (t[j] * s[j]));
        sum += term;
      }
      std::size_t k = n;
      while (k > 0 && ++code[k - 1] == slots + 1) code[--k] = 0;
      if (k == 0) break;
    }
  }
  const double Q = static_cast<double>(q);
  return Q * ipow(static_cast<double>(V), r) +
         std::sqrt(Q) * static_cast<double>(parts.q3 * parts.q4) * static_cast<double>(V) * sum;
}

BoundReport verify_lemma1_rhs(u64 q, u64 V, int r) {
  const double rhs = lemma1_rhs(q, V, r);
  double lhs = 0.0;
  std::string arg = "none";
  for (const auto& chi : enumerate_characters(q, true)) {
    const double m = moment(chi, V, r).value;
    if (m > lhs || arg == "none") {
      lhs = m;
      arg = chi.label();
    }
  }
  const QPartsCRT p = decompose_crt(q);
  return BoundReport::make("lemma1",
                           {{"q", str(q)},
                            {"V", str(V)},
                            {"r", str(r)},
                            {"chi", arg},
                            {"q1", str(p.q1)},
                            {"q2", str(p.q2)},
                            {"q3", str(p.q3)},
                            {"q4", str(p.q4)},
                            {"q5", str(p.q5)},
                            {"divisor_rule", "tjsj<=V"}},
                           lhs, rhs, Verdict::ReportOnly);
}

std::vector<BoundReport> verify_prime_power_lemma(PrimePowerLemma which, u64 modulus, int r, i64 v_lo, i64 v_hi) {
  if (r < 1) throw std::domain_error("verify_prime_power_lemma: r must be positive");
  const auto f = factorize(modulus);
  if (f.factors.size() != 1) throw std::domain_error("verify_prime_power_lemma: modulus must be a prime power");
  const u64 p = f.factors[0].prime;
  const int e = f.factors[0].exponent;
  std::string statement;
  int alpha = 0;
  switch (which) {
    case PrimePowerLemma::EvenPower:
      if (e % 2 != 0) throw std::domain_error("lemma3: modulus must be p^{2 alpha}");
      statement = "lemma3";
      alpha = e / 2;
      break;
    case PrimePowerLemma::TwoOddPower:
      if (p != 2 || e % 2 != 1 || e < 3) throw std::domain_error("lemma4: modulus must be 2^{2 alpha + 1}, alpha >= 1");
      statement = "lemma4";
      alpha = (e - 1) / 2;
      break;
    case PrimePowerLemma::OddPower:
      if (p == 2 || e % 2 != 1 || e < 3)
        throw std::domain_error("lemma5: modulus must be p^{2 alpha + 1} with p odd, alpha >= 1");
      statement = "lemma5";
      alpha = (e - 1) / 2;
      break;
  }
  const u64 pa = PrimePower{p, alpha}.value();
  const auto chars = enumerate_characters(modulus, true);
  std::vector<BoundReport> out;
  for_each_tuple(2 * r, v_lo, v_hi, [&](std::span<const i64> v) {
    double bound = 0.0;
    switch (which) {
      case PrimePowerLemma::EvenPower:
        bound = static_cast<double>(pa * count_Nv(pa, v));
        break;
      case PrimePowerLemma::TwoOddPower:
        bound = static_cast<double>(2 * pa * count_Nv(pa, v));
        break;
      case PrimePowerLemma::OddPower:
        bound = static_cast<double>(pa) * std::sqrt(static_cast<double>(p)) * static_cast<double>(count_Nv(pa, v)) +
                static_cast<double>(pa * count_Nv(pa * p, v));
        break;
    }
    for (const auto& chi : chars) {
      const double lhs = exact_abs(chi, v);
      out.push_back(BoundReport::make(
          statement, {{"modulus", str(modulus)}, {"r", str(r)}, {"chi", chi.label()}, {"v", tuple_text(v)}}, lhs,
          bound, within(lhs, bound) ? Verdict::ExactPass : Verdict::ExactFail));
    }
  });
  return out;
}

std::vector<BoundReport> verify_prime_power_lemmas(u64 p, int alpha, int r, i64 v_lo, i64 v_hi) {
  if (!is_prime(p) || alpha < 1) throw std::domain_error("verify_prime_power_lemmas: need prime p and alpha >= 1");
  auto out = verify_prime_power_lemma(PrimePowerLemma::EvenPower, PrimePower{p, 2 * alpha}.value(), r, v_lo, v_hi);
  const auto odd = verify_prime_power_lemma(p == 2 ? PrimePowerLemma::TwoOddPower : PrimePowerLemma::OddPower,
                                            PrimePower{p, 2 * alpha + 1}.value(), r, v_lo, v_hi);
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

std::vector<BoundReport> verify_squarefree_lemma(u64 q, int r, i64 V) {
  if (!is_squarefree(q)) throw std::domain_error("lemma6: modulus must be squarefree");
  if (r < 1) throw std::domain_error("lemma6: r must be positive");
  const auto chars = enumerate_characters(q, true);
  const double base = std::pow(4.0 * r, static_cast<double>(tau(q))) * std::sqrt(static_cast<double>(q));
  std::vector<BoundReport> out;
  for_each_tuple(2 * r, 1, V, [&](std::span<const i64> v) {
    std::vector<i64> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() < r + 1) return;
    // The most favourable j: largest gcd(A_j(v), q) among A_j(v) != 0.
    u64 best_gcd = 0;
    int best_j = 0;
    for (int j = 1; j <= 2 * r; ++j) {
      const BigInt a = compute_Aj(v, j);
      if (a == 0) continue;
      const BigInt g = gcd(BigInt(abs(a)), BigInt(static_cast<unsigned long>(q)));
      if (g.get_ui() > best_gcd) {
        best_gcd = g.get_ui();
        best_j = j;
      }
    }
    const double bound = base * std::sqrt(static_cast<double>(best_gcd));
    for (const auto& chi : chars) {
      const double lhs = exact_abs(chi, v);
      out.push_back(BoundReport::make(
          "lemma6",
          {{"q", str(q)}, {"chi", chi.label()}, {"r", str(r)}, {"v", tuple_text(v)}, {"j", str(best_j)}}, lhs,
          bound, within(lhs, bound) ? Verdict::ExactPass : Verdict::ExactFail));
    }
  });
  return out;
}

std::string SuiteResult::summary() const {
  double worst = 0.0;
  for (const auto& r : reports) worst = std::max(worst, r.ratio);
  return id + ": " + std::to_string(instances) + " instances, " + std::to_string(failures) + " failures, max ratio " +
         format_real(worst);
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"lemma-nmult", "lemma3", "lemma4",   "lemma5",  "lemma6",
                                               "lemma7",      "lemma10", "lemma15", "eq6",     "eq41",
                                               "eq43",        "kmitm",  "adjugate", "res-gcd", "pv"};
  return ids;
}

SuiteResult run_suite(const std::string& id, std::uint64_t seed) {
  if (id == "lemma-nmult") return suite_nmult();
  if (id == "lemma3") return suite_prime_power(id, PrimePowerLemma::EvenPower, {9, 25, 49});
  if (id == "lemma4") return suite_prime_power(id, PrimePowerLemma::TwoOddPower, {8});
  if (id == "lemma5") return suite_prime_power(id, PrimePowerLemma::OddPower, {27, 125});
  if (id == "lemma6") return suite_squarefree();
  if (id == "lemma7") return suite_square();
  if (id == "lemma10") return suite_lift(seed);
  if (id == "lemma15") return suite_coprime_sieve();
  if (id == "eq6") return suite_expansion(seed);
  if (id == "eq41") return suite_split(seed);
  if (id == "eq43") return suite_pv_coefficients();
  if (id == "kmitm") return suite_mitm(seed);
  if (id == "adjugate") return suite_adjugate(seed);
  if (id == "res-gcd") return suite_resultant_gcd(seed);
  if (id == "pv") return suite_polya_vinogradov();
  throw std::invalid_argument("unknown suite: " + id);
}

double ScanResult::max_ratio() const {
  double best = 0.0;
  for (const auto& r : reports) best = std::max(best, r.ratio);
  return best;
}

std::string ScanResult::argmax() const {
  const BoundReport* best = nullptr;
  for (const auto& r : reports)
    if (!best || r.ratio > best->ratio) best = &r;
  return best ? best->params_text() : "none";
}

std::string ScanResult::summary() const {
  std::vector<std::string> order;
  std::map<std::string, std::pair<u64, const BoundReport*>> by_statement;
  for (const auto& r : reports) {
    auto& slot = by_statement[r.statement];
    if (slot.first++ == 0) order.push_back(r.statement);
    if (!slot.second || r.ratio > slot.second->ratio) slot.second = &r;
  }
  std::string out;
  for (const auto& s : order) {
    const auto& [n, best] = by_statement[s];
    out += s + " points=" + std::to_string(n) + " max_ratio=" + format_real(best->ratio) + " argmax=" +
           best->params_text() + "\n";
  }
  if (order.empty()) out += id + " points=0\n";
  out += "sanity checks=" + std::to_string(sanity_checks) + " failures=" + std::to_string(sanity_failures) + "\n";
  return out;
}

const std::vector<std::string>& scan_ids() {
  static const std::vector<std::string> ids = {"theorem2", "corollary5", "lemma9", "corollary11", "lemma1", "theorem4"};
  return ids;
}

ScanResult scan_theorem(const std::string& id, const Grid& grid) {
  ScanResult out;
  out.id = id;
  if (id == "theorem2")
    scan_moment("theorem2", grid, rhs_main1, out);
  else if (id == "corollary5")
    scan_moment("corollary5", grid, rhs_cor1, out);
  else if (id == "lemma9")
    scan_lemma9(grid, out);
  else if (id == "corollary11")
    scan_cor11(grid, out);
  else if (id == "lemma1")
    scan_lemma1(grid, out);
  else if (id == "theorem4")
    scan_theorem4(grid, out);
  else
    throw std::invalid_argument("unknown scan: " + id);
  return out;
}

}  // namespace charsum
