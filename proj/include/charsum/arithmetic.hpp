#pragma once

// Exact 64-bit integer arithmetic, factorization and the modulus
// decompositions used throughout the character-sum machinery.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace charsum {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  int exponent = 0;

  u64 value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-exponent list of a positive integer. Primes strictly increase.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  u64 product() const;
  std::string to_string() const;  // "360 = 2^3 * 3^2 * 5"
};

/// q = q1 * s * c: squarefree part, square of a squarefree number, cubefull part.
struct QPartsBurgess {
  u64 q1 = 1;
  u64 s = 1;
  u64 c = 1;
  friend bool operator==(const QPartsBurgess&, const QPartsBurgess&) = default;
};

/// q = q1 * q2^2 * q3^2 * q4^2 * q5 with
///   exponent 1      -> p in q1
///   exponent 2      -> p in q2
///   exponent 2a, a>=2 -> p^a in q3
///   exponent 2b+1, b>=1 -> p^b in q4 and p in q5
struct QPartsCRT {
  u64 q1 = 1, q2 = 1, q3 = 1, q4 = 1, q5 = 1;
  friend bool operator==(const QPartsCRT&, const QPartsCRT&) = default;
};

u64 gcd(u64 a, u64 b);
u64 gcd_signed(i64 a, u64 q);  // gcd(|a|, q)
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
/// Canonical residue of a in [0, m).
u64 reduce(i64 a, u64 m);

/// Inverse of a modulo q in [0, q). Throws std::domain_error when gcd(a, q) != 1.
u64 mod_inverse(i64 a, u64 q);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Throws std::domain_error for n == 0.
Factorization factorize(u64 n);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);
u64 tau(u64 n);
int omega(u64 n);
u64 radical(u64 n);
bool is_squarefree(u64 n);
bool is_cubefree(u64 n);
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

/// Reconstructs x mod prod(m_i) from (residue, modulus) pairs.
/// Throws std::domain_error unless the moduli are pairwise coprime.
u64 crt_reconstruct(std::span<const std::pair<u64, u64>> congruences);

QPartsBurgess decompose_burgess(u64 q);
QPartsCRT decompose_crt(u64 q);

/// #{M < n <= M+N : gcd(n, q) = 1}, by inclusion-exclusion over the
/// squarefree divisors of q.
u64 count_coprime_interval(i64 M, u64 N, u64 q);

/// Smallest n in (M, M+N] coprime to q, if any.
std::optional<i64> find_coprime(i64 M, u64 N, u64 q);

}  // namespace charsum
