#include "charsum/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace charsum {

namespace {

BigInt to_big(i64 v) {
  BigInt b;
  mpz_set_si(b.get_mpz_t(), v);
  return b;
}

BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// prod over j != skip of (X + v_j).
IntPolynomial shifted_product(std::span<const i64> v, std::size_t skip) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j == skip) continue;
    p = p * IntPolynomial({to_big(v[j]), BigInt(1)});
  }
  return p;
}

std::vector<BigInt> signed_divisors(const BigInt& value) {
  BigInt n = abs(value);
  std::vector<BigInt> out;
  // Desk-scale values only; trial division up to sqrt.
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  const std::size_t k = out.size();
  for (std::size_t i = 0; i < k; ++i) out.push_back(-out[i]);
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]). Returns false when the
// interpolant has a non-integer coefficient.
bool interpolate_integer(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys,
                         IntPolynomial& out) {
  const std::size_t n = xs.size();
  std::vector<BigRational> acc(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // basis_i = prod_{j != i} (X - x_j) / (x_i - x_j)
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<BigRational> next(basis.size() + 1, BigRational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * BigRational(xs[j]);
      }
      basis = std::move(next);
      denom *= BigRational(xs[i] - xs[j]);
    }
    for (std::size_t t = 0; t < basis.size(); ++t) {
      BigRational term = basis[t] * BigRational(ys[i]) / denom;
      term.canonicalize();
      acc[t] += term;
    }
  }
  std::vector<BigInt> coeffs;
  for (auto& c : acc) {
    c.canonicalize();
    if (c.get_den() != 1) return false;
    coeffs.push_back(c.get_num());
  }
  out = IntPolynomial(std::move(coeffs));
  return true;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::x() { return IntPolynomial({0L, 1L}); }

IntPolynomial IntPolynomial::from_roots(std::span<const i64> roots) {
  IntPolynomial p = constant(1);
  for (i64 r : roots) p = p * IntPolynomial(std::vector<BigInt>{to_big(-r), BigInt(1)});
  return p;
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    BigInt c;
    if (c.set_str(tok, 10) != 0) throw std::invalid_argument("bad polynomial coefficient: " + tok);
    coeffs.push_back(c);
  }
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPolynomial::evaluate_homogeneous(const BigInt& num, const BigInt& den) const {
  BigInt acc = 0;
  BigInt den_pow = 1;
  // Horner in num with den powers folded in: sum c_i num^i den^{d-i}.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return acc;
}

u64 IntPolynomial::evaluate_mod(i64 x, u64 q) const {
  const auto c = reduce_mod(q);
  const u64 xr = reduce(x, q);
  u64 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (mulmod(acc, xr, q) + *it) % q;
  return acc;
}

std::vector<u64> IntPolynomial::reduce_mod(u64 q) const {
  std::vector<u64> out;
  out.reserve(coeffs_.size());
  const BigInt mod(static_cast<unsigned long>(q));
  for (const auto& c : coeffs_) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
    out.push_back(r.get_ui());
  }
  return out;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> out;
  for (const auto& c : coeffs_) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    out.push_back(q);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out;
  for (const auto& c : coeffs_) out.push_back(-c);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> out;
  for (const auto& x : p.coeffs_) out.push_back(c * x);
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ' ';
    s += coeffs_[i].get_str();
  }
  return s;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const BigInt& lb = b.leading();
  for (int top = a.degree(); top >= db; --top) {
    const BigInt lead = r[static_cast<std::size_t>(top)];
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(top - db + i)] -= lead * b.coeff(i);
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

bool divides(const IntPolynomial& d, const IntPolynomial& p) {
  if (d.is_zero()) throw std::domain_error("divides: zero divisor");
  return pseudo_remainder(p, d).is_zero();
}

bool has_rational_root(const IntPolynomial& p) {
  if (p.degree() < 1) return false;
  if (p.coeff(0) == 0) return true;
  // Candidates num/den with num | a_0, den | a_n.
  const auto nums = signed_divisors(p.coeff(0));
  auto dens = signed_divisors(p.leading());
  for (const auto& n : nums) {
    for (const auto& d : dens) {
      if (d <= 0) continue;
      if (p.evaluate_homogeneous(n, d) == 0) return true;
    }
  }
  return false;
}

bool passes_irreducibility_screen(const IntPolynomial& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (has_rational_root(p)) return false;
  const IntPolynomial prim = p.primitive_part();
  const int max_factor = std::min(3, prim.degree() / 2);
  for (int d = 2; d <= max_factor; ++d) {
    // d+1 integer points where prim is nonzero (no rational roots, so any will do).
    std::vector<BigInt> xs, vals;
    for (long x = 0; static_cast<int>(xs.size()) < d + 1; x = x <= 0 ? 1 - x : -x) {
      xs.emplace_back(x);
      vals.push_back(prim.evaluate(BigInt(x)));
    }
    std::vector<std::vector<BigInt>> choices;
    for (const auto& v : vals) choices.push_back(signed_divisors(v));
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<BigInt> ys;
      for (std::size_t i = 0; i < idx.size(); ++i) ys.push_back(choices[i][idx[i]]);
      IntPolynomial cand;
      if (interpolate_integer(xs, ys, cand) && cand.degree() == d && divides(cand, prim)) return false;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return true;
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n, BigInt(0)) {
  if (n == 0) throw std::domain_error("IntMatrix: dimension must be at least 1");
}

IntMatrix::IntMatrix(std::size_t n, std::vector<BigInt> row_major) : n_(n), data_(std::move(row_major)) {
  if (n == 0 || data_.size() != n * n) throw std::domain_error("IntMatrix: bad shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::minor(std::size_t row, std::size_t col) const {
  IntMatrix m(n_ - 1);
  for (std::size_t i = 0, mi = 0; i < n_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < n_; ++j) {
      if (j == col) continue;
      m.at(mi, mj++) = at(i, j);
    }
    ++mi;
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::domain_error("IntMatrix product: dimension mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k)
      for (std::size_t j = 0; j < a.n_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

IntMatrix operator*(const BigInt& c, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& x : out.data_) x *= c;
  return out;
}

BigInt determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix adj(n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt d = determinant(a.minor(j, i));
      adj.at(i, j) = ((i + j) % 2 == 0) ? d : BigInt(-d);
    }
  }
  return adj;
}

IntMatrix sylvester(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("sylvester: zero polynomial");
  const int n = f.degree();
  const int m = g.degree();
  if (n + m < 1) throw std::domain_error("sylvester: both polynomials constant");
  const auto dim = static_cast<std::size_t>(n + m);
  IntMatrix s(dim);
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i) s.at(static_cast<std::size_t>(row), static_cast<std::size_t>(row + i)) = f.coeff(n - i);
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i)
      s.at(static_cast<std::size_t>(m + row), static_cast<std::size_t>(row + i)) = g.coeff(m - i);
  return s;
}

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) { return determinant(sylvester(f, g)); }

bool resultant_lift_check(const IntPolynomial& f, const IntPolynomial& g, i64 lambda, u64 q) {
  if (q == 0) throw std::domain_error("resultant_lift_check: q must be positive");
  if (gcd_signed(lambda, q) != 1) throw std::domain_error("resultant_lift_check: gcd(lambda, q) != 1");
  if (f.evaluate_mod(lambda, q) != 0 || g.evaluate_mod(lambda, q) != 0)
    throw std::domain_error("resultant_lift_check: lambda is not a common root mod q");
  const BigInt res = resultant(f, g);
  return mpz_divisible_ui_p(res.get_mpz_t(), static_cast<unsigned long>(q)) != 0;
}

double resultant_height_rhs(double H, double sigma, double theta, int M, int N) {
  if (!(H > 1.0)) throw std::domain_error("resultant_height_rhs: H must exceed 1");
  const double exponent = (M - 1 + sigma) * (N - 1 + theta) - theta * sigma;
  return std::pow(H, exponent);
}

BigInt hadamard_bound_squared(const IntPolynomial& f, const IntPolynomial& g) {
  const IntMatrix s = sylvester(f, g);
  BigInt prod = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < s.size(); ++j) row += s.at(i, j) * s.at(i, j);
    prod *= row;
  }
  return prod;
}

std::pair<IntPolynomial, IntPolynomial> build_f_pair(std::span<const i64> v) {
  if (v.size() % 2 != 0) throw std::domain_error("build_f_pair: tuple length must be even");
  const std::size_t r = v.size() / 2;
  return {IntPolynomial::from_roots(v.first(r)), IntPolynomial::from_roots(v.subspan(r))};
}

IntPolynomial wronskian_combo(std::span<const i64> v) {
  const auto [f1, f2] = build_f_pair(v);
  return f1.derivative() * f2 - f1 * f2.derivative();
}

IntPolynomial build_Pv_kloosterman(std::span<const i64> v) {
  if (v.size() % 2 != 0) throw std::domain_error("build_Pv_kloosterman: tuple length must be even");
  const std::size_t k = v.size() / 2;
  IntPolynomial p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const IntPolynomial term = shifted_product(v, i);
    p = i < k ? p + term : p - term;
  }
  return p;
}

IntPolynomial build_Pv_mult(std::span<const i64> v) {
  if (v.size() % 2 != 0) throw std::domain_error("build_Pv_mult: tuple length must be even");
  const std::size_t r = v.size() / 2;
  std::vector<i64> neg(v.begin(), v.end());
  for (auto& x : neg) x = -x;
  const std::span<const i64> roots(neg);
  return IntPolynomial::from_roots(roots.first(r)) - IntPolynomial::from_roots(roots.subspan(r));
}

std::vector<BigInt> pv_coefficient_bounds(int k, i64 V) {
  std::vector<BigInt> out;
  const auto vv = to_big(V);
  for (int i = 0; i <= 2 * k - 2; ++i) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * k - 1), static_cast<unsigned long>(i + 1));
    out.push_back(BigInt(2 * k) * binom * big_pow(vv, static_cast<unsigned long>(i + 1)));
  }
  return out;
}

}  // namespace charsum
