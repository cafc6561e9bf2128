#include "charsum/arithmetic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charsum {

namespace {

constexpr u64 kTrialLimit = 1000000;

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Brent's variant of Pollard rho; n is odd, composite, and has no factor below
// the trial-division limit.
u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  split_large(d, out);
  split_large(n / d, out);
}

}  // namespace

u64 PrimePower::value() const {
  u64 v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

u64 Factorization::product() const {
  u64 v = 1;
  for (const auto& f : factors) v *= f.value();
  return v;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  os << n << " =";
  if (factors.empty()) os << " 1";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    os << (i ? " * " : " ") << factors[i].prime;
    if (factors[i].exponent > 1) os << '^' << factors[i].exponent;
  }
  return os.str();
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 gcd_signed(i64 a, u64 q) {
  u64 mag = a < 0 ? static_cast<u64>(-(a + 1)) + 1 : static_cast<u64>(a);
  return std::gcd(mag, q);
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 reduce(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  u64 mag = static_cast<u64>(-(a + 1)) + 1;
  u64 r = mag % m;
  return r == 0 ? 0 : m - r;
}

u64 mod_inverse(i64 a, u64 q) {
  if (q == 0) throw std::domain_error("mod_inverse: modulus must be positive");
  if (q == 1) return 0;
  // Extended Euclid on signed 128-bit to avoid overflow for q near 2^63.
  __int128 r0 = static_cast<__int128>(q), r1 = static_cast<__int128>(reduce(a, q));
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 t = r0 / r1;
    __int128 r2 = r0 - t * r1;
    r0 = r1;
    r1 = r2;
    __int128 s2 = s0 - t * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: argument not invertible");
  s0 %= static_cast<__int128>(q);
  if (s0 < 0) s0 += q;
  return static_cast<u64>(s0);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  Factorization out;
  out.n = n;
  u64 m = n;
  auto take = [&](u64 p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.factors.push_back({p, e});
  };
  take(2);
  for (u64 p = 3; p <= kTrialLimit && p * p <= m; p += 2) take(p);
  if (m > 1) {
    std::vector<u64> primes;
    split_large(m, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
      std::size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      out.factors.push_back({primes[i], static_cast<int>(j - i)});
      i = j;
    }
  }
  return out;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

u64 tau(u64 n) {
  u64 t = 1;
  for (const auto& f : factorize(n).factors) t *= static_cast<u64>(f.exponent + 1);
  return t;
}

int omega(u64 n) { return static_cast<int>(factorize(n).factors.size()); }

u64 radical(u64 n) {
  u64 r = 1;
  for (const auto& f : factorize(n).factors) r *= f.prime;
  return r;
}

bool is_squarefree(u64 n) {
  const auto f = factorize(n);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool is_cubefree(u64 n) {
  const auto f = factorize(n);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent <= 2; });
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

u64 crt_reconstruct(std::span<const std::pair<u64, u64>> congruences) {
  unsigned __int128 x = 0, m = 1;
  for (const auto& [r, mod] : congruences) {
    if (mod == 0) throw std::domain_error("crt_reconstruct: zero modulus");
    if (std::gcd(static_cast<u64>(m), mod) != 1)
      throw std::domain_error("crt_reconstruct: moduli not pairwise coprime");
    if (m * mod > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::overflow_error("crt_reconstruct: combined modulus exceeds 64 bits");
    // x' = x + m * ((r - x) * m^{-1} mod mod)
    const u64 mm = static_cast<u64>(m % mod);
    const u64 inv = mod_inverse(static_cast<i64>(mm), mod);
    const u64 diff = (r % mod + mod - static_cast<u64>(x % mod)) % mod;
    const u64 t = mulmod(diff, inv, mod);
    x += m * t;
    m *= mod;
    x %= m;
  }
  return static_cast<u64>(x);
}

QPartsBurgess decompose_burgess(u64 q) {
  QPartsBurgess parts;
  for (const auto& pp : factorize(q).factors) {
    if (pp.exponent == 1)
      parts.q1 *= pp.prime;
    else if (pp.exponent == 2)
      parts.s *= pp.prime * pp.prime;
    else
      parts.c *= pp.value();
  }
  return parts;
}

QPartsCRT decompose_crt(u64 q) {
  QPartsCRT parts;
  for (const auto& [p, e] : factorize(q).factors) {
    if (e == 1) {
      parts.q1 *= p;
    } else if (e == 2) {
      parts.q2 *= p;
    } else if (e % 2 == 0) {
      parts.q3 *= PrimePower{p, e / 2}.value();
    } else {
      parts.q4 *= PrimePower{p, (e - 1) / 2}.value();
      parts.q5 *= p;
    }
  }
  return parts;
}

u64 count_coprime_interval(i64 M, u64 N, u64 q) {
  if (q == 0) throw std::domain_error("count_coprime_interval: q must be positive");
  const auto f = factorize(q);
  const std::size_t k = f.factors.size();
  const i64 hi = M + static_cast<i64>(N);
  i64 total = 0;
  for (u64 mask = 0; mask < (1ULL << k); ++mask) {
    i64 d = 1;
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        d *= static_cast<i64>(f.factors[i].prime);
        sign = -sign;
      }
    }
    total += sign * (floor_div(hi, d) - floor_div(M, d));
  }
  return static_cast<u64>(total);
}

std::optional<i64> find_coprime(i64 M, u64 N, u64 q) {
  for (u64 k = 1; k <= N; ++k) {
    const i64 n = M + static_cast<i64>(k);
    if (gcd_signed(n, q) == 1) return n;
  }
  return std::nullopt;
}

}  // namespace charsum
