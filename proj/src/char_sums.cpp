#include "charsum/char_sums.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "charsum/format.hpp"
#include "charsum/parallel.hpp"
#include "charsum/polynomials.hpp"

namespace charsum {

namespace {

constexpr std::size_t kShiftBlock = 4096;
constexpr std::size_t kPairBlock = 64;
constexpr double kExpansionBudget = 5e9;

double pow_norm(std::complex<double> s, int r) {
  const double n = std::norm(s);
  double out = 1.0;
  for (int i = 0; i < r; ++i) out *= n;
  return out;
}

// Nondecreasing r-tuples over [1, V] with their multinomial multiplicities.
struct Multiset {
  std::vector<i64> values;
  double weight;
};

std::vector<Multiset> multisets(u64 V, int r) {
  std::vector<Multiset> out;
  std::vector<i64> cur(static_cast<std::size_t>(r), 1);
  std::vector<double> factorial(static_cast<std::size_t>(r) + 1, 1.0);
  for (int i = 1; i <= r; ++i) factorial[static_cast<std::size_t>(i)] = factorial[static_cast<std::size_t>(i) - 1] * i;
  while (true) {
    double w = factorial[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < cur.size();) {
      std::size_t j = i;
      while (j < cur.size() && cur[j] == cur[i]) ++j;
      w /= factorial[j - i];
      i = j;
    }
    out.push_back({cur, w});
    int pos = r - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == static_cast<i64>(V)) --pos;
    if (pos < 0) break;
    const i64 next = cur[static_cast<std::size_t>(pos)] + 1;
    for (auto i = static_cast<std::size_t>(pos); i < cur.size(); ++i) cur[i] = next;
  }
  return out;
}

void check_moment_args(u64 q, u64 V, int r) {
  if (V < 1 || V > 1000) throw std::domain_error("moment: V must lie in [1, 1000]");
  if (r < 1 || r > 5) throw std::domain_error("moment: r must lie in [1, 5]");
  if (q > 100000) throw std::domain_error("moment: modulus beyond 10^5");
}

}  // namespace

std::string MomentRecord::csv_header() { return "q,char_label,V,r,value"; }

std::string MomentRecord::csv_row() const {
  return std::to_string(q) + "," + csv_field(char_label) + "," + std::to_string(V) + "," + std::to_string(r) + "," +
         format_real(value);
}

std::complex<double> short_sum(const CharacterTable& table, i64 M, u64 N) {
  const u64 q = table.modulus();
  std::complex<double> s{};
  u64 n = reduce(M, q);
  for (u64 k = 0; k < N; ++k) {
    n = n + 1 == q ? 0 : n + 1;
    s += table.value_at(n);
  }
  return s;
}

std::complex<double> short_sum(const DirichletCharacter& chi, i64 M, u64 N) {
  return short_sum(CharacterTable(chi), M, N);
}

double moment_value(const CharacterTable& table, u64 V, int r) {
  const u64 q = table.modulus();
  const auto& vals = table.values();
  const std::size_t blocks = block_count(q, kShiftBlock);
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t b = 0; b < blocks; ++b) {
    const u64 first = 1 + b * kShiftBlock;
    const u64 last = std::min<u64>(q, first + kShiftBlock - 1);
    // Window for lambda = first: residues first+1 .. first+V.
    std::complex<double> s{};
    for (u64 v = 1; v <= V; ++v) s += vals[(first + v) % q];
    double acc = 0.0;
    for (u64 lam = first;; ++lam) {
      acc += pow_norm(s, r);
      if (lam == last) break;
      s += vals[(lam + 1 + V) % q] - vals[(lam + 1) % q];
    }
    partial[b] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

MomentRecord moment(const DirichletCharacter& chi, u64 V, int r) {
  check_moment_args(chi.modulus(), V, r);
  const CharacterTable table(chi);
  return {chi.modulus(), chi.label(), V, r, moment_value(table, V, r)};
}

ExactUnitRootSum complete_sum_exact(const DirichletCharacter& chi, std::span<const i64> v) {
  const auto [f1, f2] = build_f_pair(v);
  const u64 q = chi.modulus();
  const auto c1 = f1.reduce_mod(q);
  const auto c2 = f2.reduce_mod(q);
  auto horner = [q](const std::vector<u64>& c, u64 x) {
    u64 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (mulmod(acc, x, q) + *it) % q;
    return acc;
  };
  const u64 D = chi.group().angle_order();
  ExactUnitRootSum sum(D);
  for (u64 lam = 1; lam <= q; ++lam) {
    const u64 x = lam % q;
    const std::int64_t a = chi.angle(static_cast<i64>(horner(c1, x)));
    const std::int64_t b = chi.angle(static_cast<i64>(horner(c2, x)));
    if (a < 0 || b < 0) continue;
    sum.add_angle((static_cast<u64>(a) + D - static_cast<u64>(b)) % D);
  }
  return sum;
}

std::complex<double> complete_sum(const DirichletCharacter& chi, std::span<const i64> v) {
  return complete_sum_exact(chi, v).to_complex();
}

std::complex<double> complete_sum_product_form(const CharacterTable& table, std::span<const i64> v) {
  if (v.size() % 2 != 0) throw std::domain_error("complete_sum: tuple length must be even");
  const u64 q = table.modulus();
  const u64 D = table.angle_order();
  const std::size_t r = v.size() / 2;
  std::vector<u64> shift(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) shift[i] = reduce(-v[i], q);
  std::complex<double> s{};
  for (u64 lam = 1; lam <= q; ++lam) {
    u64 t = 0;
    bool unit = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::int64_t a = table.angle_at((lam + shift[i]) % q);
      if (a < 0) {
        unit = false;
        break;
      }
      t += i < r ? static_cast<u64>(a) : D - static_cast<u64>(a);
    }
    if (unit) s += table.root(t);
  }
  return s;
}

double expansion_rhs(const CharacterTable& table, u64 V, int r) {
  const auto halves = multisets(V, r);
  const std::size_t n = halves.size();
  const u64 q = table.modulus();
  const u64 D = table.angle_order();
  if (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(q) > kExpansionBudget)
    throw std::domain_error("moment_expansion_gap: tuple enumeration beyond budget");
  // rows[m][lambda-1]: angle of prod_i chi(lambda - a_i) for multiset m, or -1.
  std::vector<std::vector<std::int32_t>> rows(n, std::vector<std::int32_t>(q));
#pragma omp parallel for schedule(static)
  for (std::size_t m = 0; m < n; ++m)
    for (u64 lam = 1; lam <= q; ++lam) {
      u64 t = 0;
      std::int32_t out = 0;
      for (i64 a : halves[m].values) {
        const std::int64_t x = table.angle_at(reduce(static_cast<i64>(lam) - a, q));
        if (x < 0) {
          out = -1;
          break;
        }
        t += static_cast<u64>(x);
      }
      rows[m][lam - 1] = out < 0 ? -1 : static_cast<std::int32_t>(t % D);
    }
  const std::size_t pairs = n * n;
  const std::size_t blocks = block_count(pairs, kPairBlock);
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t b = 0; b < blocks; ++b) {
    double acc = 0.0;
    const std::size_t end = std::min(pairs, (b + 1) * kPairBlock);
    for (std::size_t k = b * kPairBlock; k < end; ++k) {
      const auto& A = rows[k / n];
      const auto& B = rows[k % n];
      std::complex<double> s{};
      for (u64 i = 0; i < q; ++i)
        if (A[i] >= 0 && B[i] >= 0) s += table.root(static_cast<u64>(A[i]) + D - static_cast<u64>(B[i]));
      acc += halves[k / n].weight * halves[k % n].weight * std::abs(s);
    }
    partial[b] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

ExpansionGap moment_expansion_gap(const DirichletCharacter& chi, u64 V, int r) {
  check_moment_args(chi.modulus(), V, r);
  const CharacterTable table(chi);
  return {moment_value(table, V, r), expansion_rhs(table, V, r)};
}

std::vector<double> max_short_sums(const DirichletCharacter& chi, u64 max_length) {
  const CharacterTable table(chi);
  const u64 q = table.modulus();
  // prefix[n] = sum_{m=1}^{n} chi(m), n = 0 .. q + max_length.
  std::vector<std::complex<double>> prefix(q + max_length + 1);
  for (u64 n = 1; n < prefix.size(); ++n) prefix[n] = prefix[n - 1] + table.value_at(n % q);
  // Squared moduli are compared; max is exact and order-free, so per-thread
  // maxima merge deterministically.
  std::vector<double> best(max_length, 0.0);
#pragma omp parallel
  {
    std::vector<double> local(max_length, 0.0);
#pragma omp for schedule(static) nowait
    for (u64 M = 0; M < q; ++M)
      for (u64 N = 1; N <= max_length; ++N) local[N - 1] = std::max(local[N - 1], std::norm(prefix[M + N] - prefix[M]));
#pragma omp critical
    for (u64 i = 0; i < max_length; ++i) best[i] = std::max(best[i], local[i]);
  }
  for (double& b : best) b = std::sqrt(b);
  return best;
}

double pv_ratio(const DirichletCharacter& chi) {
  const u64 q = chi.modulus();
  if (q < 3 || q > 1000) throw std::domain_error("pv_ratio: modulus must lie in [3, 1000]");
  if (!chi.is_primitive()) throw std::domain_error("pv_ratio: character must be primitive");
  const auto sums = max_short_sums(chi, q);
  const double best = *std::max_element(sums.begin(), sums.end());
  return best / (std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q)));
}

}  // namespace charsum
