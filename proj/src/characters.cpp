#include "charsum/characters.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace charsum {

namespace {

constexpr u64 kMaxEnumerationModulus = 100000;

u64 smallest_primitive_root_mod_p_squared(u64 p) {
  const u64 m = p * p;
  const u64 phi = p * (p - 1);
  const auto f = factorize(phi);
  for (u64 g = 2;; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (const auto& pp : f.factors) {
      if (powmod(g, phi / pp.prime, m) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

int valuation(u64 n, u64 p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

ComponentGroup make_component(u64 p, int k) {
  ComponentGroup c;
  c.p = p;
  c.k = k;
  c.modulus = PrimePower{p, k}.value();
  c.phi = c.modulus / p * (p - 1);
  c.log.assign(c.modulus, -1);
  if (p != 2) {
    c.generator = smallest_primitive_root_mod_p_squared(p) % c.modulus;
    c.angle_order = c.phi;
    u64 x = 1 % c.modulus;
    for (u64 m = 0; m < c.phi; ++m) {
      c.log[x] = static_cast<std::int64_t>(m);
      x = mulmod(x, c.generator, c.modulus);
    }
    if (c.modulus == 1) c.log[0] = 0;
  } else if (k == 1) {
    c.angle_order = 1;
    c.log[1] = 0;
  } else if (k == 2) {
    c.angle_order = 2;
    c.log[1] = 0;
    c.log[3] = 1;
  } else {
    const u64 half = c.modulus / 4;  // 2^{k-2}
    c.angle_order = half;
    for (u64 e = 0; e < 2; ++e) {
      u64 x = e == 0 ? 1 : c.modulus - 1;
      for (u64 m = 0; m < half; ++m) {
        c.log[x] = static_cast<std::int64_t>(e * half + m);
        x = mulmod(x, 5, c.modulus);
      }
    }
  }
  return c;
}

}  // namespace

UnitRootValue UnitRootValue::root(u64 numerator, u64 order) {
  if (order == 0) throw std::domain_error("UnitRootValue: order must be positive");
  UnitRootValue v;
  numerator %= order;
  const u64 g = std::gcd(numerator, order);
  v.numerator_ = numerator / g;
  v.order_ = order / g;
  return v;
}

UnitRootValue UnitRootValue::conj() const {
  if (is_zero()) return *this;
  return root(order_ - numerator_, order_);
}

std::complex<double> UnitRootValue::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(numerator_) / static_cast<double>(order_);
  return std::polar(1.0, theta);
}

UnitRootValue operator*(UnitRootValue a, UnitRootValue b) {
  if (a.is_zero() || b.is_zero()) return UnitRootValue::zero();
  const u64 d = std::lcm(a.order_, b.order_);
  return UnitRootValue::root(a.numerator_ * (d / a.order_) + b.numerator_ * (d / b.order_), d);
}

u64 ComponentGroup::angle(u64 index, u64 residue) const {
  const std::int64_t code = log[residue];
  if (code < 0) throw std::domain_error("ComponentGroup::angle: residue is not a unit");
  const u64 lg = static_cast<u64>(code);
  if (p != 2) return mulmod(index, lg, phi);
  if (k == 1) return 0;
  if (k == 2) return (index * lg) % 2;
  const u64 half = modulus / 4;
  const u64 eps = index / half, a = index % half;
  const u64 e = lg / half, m = lg % half;
  return (eps * e * (half / 2) + mulmod(a, m, half)) % half;
}

bool ComponentGroup::is_primitive(u64 index) const { return conductor(index) == modulus; }

u64 ComponentGroup::conductor(u64 index) const {
  if (p != 2) {
    if (index == 0) return 1;
    return PrimePower{p, k - valuation(index, p)}.value();
  }
  if (k == 1) return 1;
  if (k == 2) return index == 1 ? 4 : 1;
  const u64 half = modulus / 4;
  const u64 eps = index / half, a = index % half;
  if (a == 0) return eps ? 4 : 1;
  return PrimePower{2, k - valuation(a, 2)}.value();
}

DirichletGroup::DirichletGroup(u64 q) : q_(q) {
  for (const auto& [p, e] : factorize(q).factors) {
    comps_.push_back(make_component(p, e));
    phi_ *= comps_.back().phi;
    angle_order_ = std::lcm(angle_order_, comps_.back().angle_order);
  }
}

std::shared_ptr<const DirichletGroup> DirichletGroup::create(u64 q) {
  if (q == 0) throw std::domain_error("DirichletGroup: modulus must be positive");
  return std::shared_ptr<const DirichletGroup>(new DirichletGroup(q));
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const DirichletGroup> group, std::vector<u64> indices)
    : group_(std::move(group)), indices_(std::move(indices)) {
  const auto& comps = group_->components();
  if (indices_.size() != comps.size())
    throw std::domain_error("DirichletCharacter: need one index per prime-power component");
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (indices_[i] >= comps[i].phi) throw std::domain_error("DirichletCharacter: component index out of range");
}

DirichletCharacter DirichletCharacter::trivial(u64 q) {
  auto g = DirichletGroup::create(q);
  std::vector<u64> idx(g->components().size(), 0);
  return DirichletCharacter(std::move(g), std::move(idx));
}

DirichletCharacter DirichletCharacter::from_label(std::string_view label) {
  const auto colon = label.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("character label must look like q:i1,i2,...");
  auto parse_u64 = [](std::string_view s) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("bad integer in character label: " + std::string(s));
    return v;
  };
  const u64 q = parse_u64(label.substr(0, colon));
  auto group = DirichletGroup::create(q);
  std::vector<u64> idx;
  std::string_view rest = label.substr(colon + 1);
  if (group->components().empty()) {
    if (!rest.empty() && rest != "0") throw std::invalid_argument("modulus 1 has only the label 1:0");
    return DirichletCharacter(std::move(group), {});
  }
  while (true) {
    const auto comma = rest.find(',');
    idx.push_back(parse_u64(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return DirichletCharacter(std::move(group), std::move(idx));
}

std::int64_t DirichletCharacter::angle(i64 n) const {
  const u64 D = group_->angle_order();
  u64 t = 0;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    const auto& c = group_->components()[i];
    const u64 r = reduce(n, c.modulus);
    if (c.log[r] < 0) return -1;
    t = (t + c.angle(indices_[i], r) * (D / c.angle_order)) % D;
  }
  return static_cast<std::int64_t>(t);
}

UnitRootValue DirichletCharacter::operator()(i64 n) const {
  const std::int64_t t = angle(n);
  if (t < 0) return UnitRootValue::zero();
  return UnitRootValue::root(static_cast<u64>(t), group_->angle_order());
}

std::vector<UnitRootValue> DirichletCharacter::component_values(i64 n) const {
  std::vector<UnitRootValue> out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    const auto& c = group_->components()[i];
    const u64 r = reduce(n, c.modulus);
    out.push_back(c.log[r] < 0 ? UnitRootValue::zero() : UnitRootValue::root(c.angle(indices_[i], r), c.angle_order));
  }
  return out;
}

bool DirichletCharacter::is_primitive() const {
  for (std::size_t i = 0; i < indices_.size(); ++i)
    if (!group_->components()[i].is_primitive(indices_[i])) return false;
  return true;
}

bool DirichletCharacter::is_trivial() const {
  for (u64 i : indices_)
    if (i != 0) return false;
  return true;
}

u64 DirichletCharacter::conductor() const {
  u64 f = 1;
  for (std::size_t i = 0; i < indices_.size(); ++i) f *= group_->components()[i].conductor(indices_[i]);
  return f;
}

u64 DirichletCharacter::order() const {
  u64 ord = 1;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    const auto& c = group_->components()[i];
    u64 o = 1;
    if (c.p != 2) {
      o = c.phi / std::gcd(indices_[i], c.phi);
    } else if (c.k == 2) {
      o = indices_[i] == 1 ? 2 : 1;
    } else if (c.k >= 3) {
      const u64 half = c.modulus / 4;
      const u64 eps = indices_[i] / half, a = indices_[i] % half;
      o = std::lcm(eps ? u64{2} : u64{1}, half / std::gcd(a, half));
    }
    ord = std::lcm(ord, o);
  }
  return ord;
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<u64> idx = indices_;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto& c = group_->components()[i];
    if (c.p != 2) {
      idx[i] = (c.phi - idx[i]) % c.phi;
    } else if (c.k >= 3) {
      const u64 half = c.modulus / 4;
      const u64 eps = idx[i] / half, a = idx[i] % half;
      idx[i] = eps * half + (half - a) % half;
    }
  }
  return DirichletCharacter(group_, std::move(idx));
}

std::string DirichletCharacter::label() const {
  std::string s = std::to_string(modulus()) + ":";
  if (indices_.empty()) return s + "0";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(indices_[i]);
  }
  return s;
}

std::vector<DirichletCharacter> enumerate_characters(u64 q, bool primitive_only) {
  if (q > kMaxEnumerationModulus) throw std::domain_error("enumerate_characters: modulus beyond 10^5");
  auto group = DirichletGroup::create(q);
  std::vector<std::vector<u64>> choices;
  for (const auto& c : group->components()) {
    std::vector<u64> ok;
    for (u64 i = 0; i < c.phi; ++i)
      if (!primitive_only || c.is_primitive(i)) ok.push_back(i);
    if (ok.empty()) return {};
    choices.push_back(std::move(ok));
  }
  std::vector<DirichletCharacter> out;
  std::vector<std::size_t> pos(choices.size(), 0);
  while (true) {
    std::vector<u64> idx;
    for (std::size_t i = 0; i < pos.size(); ++i) idx.push_back(choices[i][pos[i]]);
    out.emplace_back(group, std::move(idx));
    // Odometer with the last component varying fastest (lexicographic order).
    std::size_t i = pos.size();
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (pos.empty()) return out;
  }
}

UnitRootValue eval(const DirichletCharacter& chi, i64 n) { return chi(n); }

u64 conductor(const DirichletCharacter& chi) { return chi.conductor(); }

CharacterTable::CharacterTable(const DirichletCharacter& chi)
    : angle_order_(chi.group().angle_order()), angles_(chi.modulus()), values_(chi.modulus()) {
  roots_.resize(angle_order_);
  for (u64 t = 0; t < angle_order_; ++t)
    roots_[t] = UnitRootValue::root(t, angle_order_).to_complex();
  for (u64 n = 0; n < chi.modulus(); ++n) {
    angles_[n] = chi.angle(static_cast<i64>(n));
    values_[n] = angles_[n] < 0 ? std::complex<double>{} : roots_[static_cast<u64>(angles_[n])];
  }
}

ExactUnitRootSum::ExactUnitRootSum(u64 order) : order_(order), counts_(order, 0) {
  if (order == 0) throw std::domain_error("ExactUnitRootSum: order must be positive");
}

void ExactUnitRootSum::add(UnitRootValue v) {
  if (v.is_zero()) return;
  if (order_ % v.order() != 0) throw std::domain_error("ExactUnitRootSum: value order does not divide sum order");
  add_angle(v.numerator() * (order_ / v.order()));
}

void ExactUnitRootSum::add_angle(u64 t, std::int64_t multiplicity) { counts_[t % order_] += multiplicity; }

bool ExactUnitRootSum::is_zero() const {
  // sum c_t x^t mod Phi_order(x); Phi is monic so the reduction stays integral.
  const auto phi = cyclotomic_polynomial(order_);
  std::vector<std::int64_t> r = counts_;
  const std::size_t deg = phi.size() - 1;
  for (std::size_t top = r.size(); top-- > deg;) {
    const std::int64_t lead = r[top];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) r[top - deg + i] -= lead * phi[i];
  }
  for (std::size_t i = 0; i < std::min(deg, r.size()); ++i)
    if (r[i] != 0) return false;
  return true;
}

std::complex<double> ExactUnitRootSum::to_complex() const {
  std::complex<double> s{};
  for (u64 t = 0; t < order_; ++t)
    if (counts_[t]) s += static_cast<double>(counts_[t]) * UnitRootValue::root(t, order_).to_complex();
  return s;
}

std::vector<std::int64_t> cyclotomic_polynomial(u64 n) {
  if (n == 0) throw std::domain_error("cyclotomic_polynomial: n must be positive");
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply the mu = +1 factors,
  // then divide out the mu = -1 factors exactly.
  const auto divs = divisors(n);
  auto mobius = [](u64 m) {
    int mu = 1;
    for (const auto& pp : factorize(m).factors) {
      if (pp.exponent > 1) return 0;
      mu = -mu;
    }
    return mu;
  };
  std::vector<std::int64_t> poly{1};
  for (u64 d : divs) {
    if (mobius(n / d) != 1) continue;
    std::vector<std::int64_t> next(poly.size() + d, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + d] += poly[i];
      next[i] -= poly[i];
    }
    poly = std::move(next);
  }
  for (u64 d : divs) {
    if (mobius(n / d) != -1) continue;
    // Exact division by x^d - 1: q_i = q_{i-d} - p_i, built from the top down.
    const std::size_t out_size = poly.size() - d;
    std::vector<std::int64_t> quot(out_size, 0);
    std::vector<std::int64_t> rem = poly;
    for (std::size_t top = poly.size(); top-- > d;) {
      const std::int64_t c = rem[top];
      quot[top - d] = c;
      rem[top] -= c;
      rem[top - d] += c;
    }
    poly = std::move(quot);
  }
  return poly;
}

}  // namespace charsum
