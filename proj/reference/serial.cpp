#include "serial.hpp"

#include <cmath>

namespace charsum::reference {

namespace {

template <class F>
void for_each_tuple(const TupleBox& box, const F& f) {
  const std::size_t n = box.dimension();
  if (box.empty()) return;
  std::vector<u64> idx(n, 0);
  std::vector<i64> v(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) v[i] = box[i].at(idx[i]);
    f(v);
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == box[k - 1].size()) idx[--k] = 0;
    if (k == 0) return;
  }
}

}  // namespace

double moment(const DirichletCharacter& chi, u64 V, int r) {
  const u64 q = chi.modulus();
  double total = 0.0;
  for (u64 lam = 1; lam <= q; ++lam) {
    std::complex<double> s{};
    for (u64 v = 1; v <= V; ++v) s += chi(static_cast<i64>(lam + v)).to_complex();
    total += std::pow(std::norm(s), r);
  }
  return total;
}

double expansion_rhs(const DirichletCharacter& chi, u64 V, int r) {
  double total = 0.0;
  for_each_tuple(TupleBox::cube(r, 1, static_cast<i64>(V)),
                 [&](const std::vector<i64>& v) { total += std::abs(complete_sum(chi, v)); });
  return total;
}

std::vector<double> max_short_sums(const DirichletCharacter& chi, u64 max_length) {
  const u64 q = chi.modulus();
  std::vector<double> best(max_length, 0.0);
  for (u64 M = 0; M < q; ++M)
    for (u64 N = 1; N <= max_length; ++N) {
      std::complex<double> s{};
      for (u64 n = M + 1; n <= M + N; ++n) s += chi(static_cast<i64>(n)).to_complex();
      best[N - 1] = std::max(best[N - 1], std::abs(s));
    }
  return best;
}

CountResult count_K(int r, u64 q, i64 lambda, const TupleBox& box) {
  CountResult out;
  for_each_tuple(box, [&](const std::vector<i64>& v) {
    i64 diff = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (gcd_signed(lambda + v[i], q) != 1) {
        ++out.excluded;
        return;
      }
      const i64 inv = q == 1 ? 0 : static_cast<i64>(mod_inverse(lambda + v[i], q));
      diff += i < static_cast<std::size_t>(r) ? inv : -inv;
    }
    out.count += reduce(diff, q) == 0;
  });
  return out;
}

CountResult count_mult_cong(int r, u64 q, i64 lambda, const TupleBox& box) {
  CountResult out;
  for_each_tuple(box, [&](const std::vector<i64>& v) {
    u64 a = 1 % q, b = 1 % q;
    for (int i = 0; i < r; ++i) {
      a = mulmod(a, reduce(lambda + v[static_cast<std::size_t>(i)], q), q);
      b = mulmod(b, reduce(lambda + v[static_cast<std::size_t>(r + i)], q), q);
    }
    out.count += a == b;
  });
  return out;
}

}  // namespace charsum::reference
