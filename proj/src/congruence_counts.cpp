#include "charsum/congruence_counts.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace charsum {

namespace {

constexpr u64 kHalfBudget = 100'000'000;
constexpr u64 kDirectBudget = 2'000'000'000;
constexpr u64 kDenseLimit = u64{1} << 22;

// Residue -> multiplicity, dense for small moduli.
class Histogram {
 public:
  explicit Histogram(u64 q) : dense_(q <= kDenseLimit) {
    if (dense_) counts_.assign(q, 0);
  }
  void add(u64 s) {
    if (dense_)
      ++counts_[s];
    else
      ++sparse_[s];
  }
  u64 get(u64 s) const {
    if (dense_) return counts_[s];
    const auto it = sparse_.find(s);
    return it == sparse_.end() ? 0 : it->second;
  }
  void merge(const Histogram& other) {
    if (dense_)
      for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    else
      for (const auto& [k, c] : other.sparse_) sparse_[k] += c;
  }

 private:
  bool dense_;
  std::vector<u64> counts_;
  std::unordered_map<u64, u64> sparse_;
};

using Lists = std::vector<std::vector<u64>>;

template <class Op, class F>
void enumerate(const Lists& lists, std::size_t at, std::size_t end, u64 acc, const Op& op, const F& f) {
  if (at == end) {
    f(acc);
    return;
  }
  for (u64 x : lists[at]) enumerate(lists, at + 1, end, op(acc, x), op, f);
}

// Sum over residues s of #{first-half tuples -> s} * #{second-half tuples -> s}.
template <class Op>
u64 match_halves(const Lists& lists, u64 q, u64 identity, const Op& op) {
  const std::size_t r = lists.size() / 2;
  Histogram first(q);
#pragma omp parallel
  {
    Histogram local(q);
#pragma omp for schedule(dynamic)
    for (std::size_t k = 0; k < lists[0].size(); ++k)
      enumerate(lists, 1, r, op(identity, lists[0][k]), op, [&](u64 s) { local.add(s); });
#pragma omp critical
    first.merge(local);
  }
  u64 count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (std::size_t k = 0; k < lists[r].size(); ++k)
    enumerate(lists, r + 1, 2 * r, op(identity, lists[r][k]), op, [&](u64 s) { count += first.get(s); });
  return count;
}

u64 half_volume(const Lists& lists, std::size_t from, std::size_t to) {
  u64 v = 1;
  for (std::size_t i = from; i < to; ++i) v *= lists[i].size();
  return v;
}

void check_shape(int r, u64 q, const TupleBox& box) {
  if (q == 0) throw std::domain_error("counter: modulus must be positive");
  if (r < 1 || box.dimension() != 2 * static_cast<std::size_t>(r))
    throw std::domain_error("counter: box dimension must equal 2r");
}

void check_half_budget(const TupleBox& box) {
  const std::size_t r = box.dimension() / 2;
  double a = 1, b = 1;
  for (std::size_t i = 0; i < r; ++i) {
    a *= static_cast<double>(box[i].size());
    b *= static_cast<double>(box[r + i].size());
  }
  if (std::max(a, b) > static_cast<double>(kHalfBudget))
    throw std::domain_error("counter: half-tuple count beyond budget");
}

// Inverses of lambda + v for the unit values of each coordinate.
Lists inverse_lists(u64 q, i64 lambda, const TupleBox& box) {
  Lists lists;
  for (const auto& iv : box.coords()) {
    std::vector<u64> xs;
    for (u64 k = 0; k < iv.size(); ++k) {
      const i64 x = lambda + iv.at(k);
      if (q == 1)
        xs.push_back(0);
      else if (gcd_signed(x, q) == 1)
        xs.push_back(mod_inverse(x, q));
    }
    lists.push_back(std::move(xs));
  }
  return lists;
}

// Extends idx[0..depth) over the remaining coordinates; solutions are tallied
// by whether all 2r value indices are distinct.
void split_walk(const std::vector<std::int64_t>& inv, u64 q, std::size_t r, std::vector<std::size_t>& idx,
                std::size_t depth, u64 sum, u64& distinct, u64& repeated) {
  if (depth == idx.size()) {
    if (sum != 0) return;
    std::vector<std::size_t> sorted(idx);
    std::sort(sorted.begin(), sorted.end());
    ++(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() ? distinct : repeated);
    return;
  }
  for (std::size_t k = 0; k < inv.size(); ++k) {
    if (inv[k] < 0) continue;
    const u64 x = static_cast<u64>(inv[k]);
    const u64 term = depth < r ? x : (q - x) % q;
    idx[depth] = k;
    split_walk(inv, q, r, idx, depth + 1, (sum + term) % q, distinct, repeated);
  }
}

}  // namespace

TupleBox::TupleBox(std::vector<Interval> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (c.step < 1) throw std::domain_error("TupleBox: interval step must be positive");
}

TupleBox TupleBox::symmetric(int r, i64 V) { return cube(r, -V, V); }

TupleBox TupleBox::cube(int r, i64 lo, i64 hi) {
  return TupleBox(std::vector<Interval>(2 * static_cast<std::size_t>(r), Interval{lo, hi, 1}));
}

u64 TupleBox::volume() const {
  if (coords_.empty()) return 0;
  u64 v = 1;
  for (const auto& c : coords_) v *= c.size();
  return v;
}

bool TupleBox::unit_stride() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Interval& c) { return c.step == 1; });
}

TupleBox TupleBox::swapped_halves() const {
  std::vector<Interval> c(coords_.begin() + half(), coords_.end());
  c.insert(c.end(), coords_.begin(), coords_.begin() + half());
  return TupleBox(std::move(c));
}

TupleBox TupleBox::negated() const {
  std::vector<Interval> c;
  for (const auto& iv : coords_) {
    if (iv.lo > iv.hi) {
      c.push_back(iv);
      continue;
    }
    const i64 last = iv.at(iv.size() - 1);
    c.push_back({-last, -iv.lo, iv.step});
  }
  return TupleBox(std::move(c));
}

std::string TupleBox::descriptor() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += 'x';
    out += '[' + std::to_string(coords_[i].lo) + ".." + std::to_string(coords_[i].hi);
    if (coords_[i].step != 1) out += ':' + std::to_string(coords_[i].step);
    out += ']';
  }
  return out;
}

std::string CountRecord::csv_header() { return "kind,r,q,lambda,box_descriptor,count,excluded"; }

std::string CountRecord::csv_row() const {
  return kind + ',' + std::to_string(r) + ',' + std::to_string(q) + ',' + std::to_string(lambda) + ',' + box + ',' +
         std::to_string(result.count) + ',' + std::to_string(result.excluded);
}

CountResult count_K(int r, u64 q, i64 lambda, const TupleBox& box) {
  check_shape(r, q, box);
  if (box.empty()) return {};
  check_half_budget(box);
  const Lists lists = inverse_lists(q, lambda, box);
  const auto add = [q](u64 a, u64 b) { return a + b >= q ? a + b - q : a + b; };
  const auto rr = static_cast<std::size_t>(r);
  const u64 admissible = half_volume(lists, 0, rr) * half_volume(lists, rr, 2 * rr);
  return {match_halves(lists, q, 0, add), box.volume() - admissible};
}

CountResult count_K(int r, u64 q, i64 lambda, i64 V) { return count_K(r, q, lambda, TupleBox::symmetric(r, V)); }

KSplit count_K_split(int r, u64 q, i64 lambda, i64 V) {
  const TupleBox box = TupleBox::symmetric(r, V);
  check_shape(r, q, box);
  if (box.empty()) return {};
  if (static_cast<double>(box.volume()) > static_cast<double>(kDirectBudget))
    throw std::domain_error("count_K_split: direct enumeration beyond budget");
  const auto n = static_cast<std::size_t>(2 * r);
  const auto width = static_cast<std::size_t>(2 * V + 1);
  // Inverse of lambda + v per value, -1 off units.
  std::vector<std::int64_t> inv(width, -1);
  for (std::size_t k = 0; k < width; ++k) {
    const i64 x = lambda - V + static_cast<i64>(k);
    if (q == 1)
      inv[k] = 0;
    else if (gcd_signed(x, q) == 1)
      inv[k] = static_cast<std::int64_t>(mod_inverse(x, q));
  }
  u64 distinct = 0, repeated = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : distinct, repeated)
  for (std::size_t k0 = 0; k0 < width; ++k0) {
    if (inv[k0] < 0) continue;
    std::vector<std::size_t> idx(n);
    idx[0] = k0;
    split_walk(inv, q, static_cast<std::size_t>(r), idx, 1, static_cast<u64>(inv[k0]), distinct, repeated);
  }
  u64 units = 0;
  for (auto x : inv) units += x >= 0;
  u64 admissible = 1;
  for (std::size_t i = 0; i < n; ++i) admissible *= units;
  return {distinct, repeated, box.volume() - admissible};
}

CountResult count_K_distinct(int r, u64 q, i64 lambda, i64 V) {
  const KSplit s = count_K_split(r, q, lambda, V);
  return {s.distinct, s.excluded};
}

CountResult count_K_repeated(int r, u64 q, i64 lambda, i64 V) {
  const KSplit s = count_K_split(r, q, lambda, V);
  return {s.repeated, s.excluded};
}

u64 count_Nv(u64 q, std::span<const i64> v) {
  if (q == 0) throw std::domain_error("count_Nv: modulus must be positive");
  const auto [f1, f2] = build_f_pair(v);
  const IntPolynomial w = wronskian_combo(v);
  const auto wc = w.reduce_mod(q);
  const std::size_t r = v.size() / 2;
  u64 count = 0;
  for (u64 lam = 0; lam < q; ++lam) {
    u64 a = 1 % q, b = 1 % q;
    for (std::size_t j = 0; j < r; ++j) {
      a = mulmod(a, reduce(static_cast<i64>(lam) - v[j], q), q);
      b = mulmod(b, reduce(static_cast<i64>(lam) - v[r + j], q), q);
    }
    if (gcd(mulmod(a, b, q), q) != 1) continue;
    u64 acc = 0;
    for (auto it = wc.rbegin(); it != wc.rend(); ++it) acc = (mulmod(acc, lam, q) + *it) % q;
    count += acc == 0;
  }
  return count;
}

BigInt compute_Aj(std::span<const i64> v, int j) {
  if (j < 1 || static_cast<std::size_t>(j) > v.size()) throw std::domain_error("compute_Aj: index out of range");
  BigInt out = 1;
  const i64 vj = v[static_cast<std::size_t>(j) - 1];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i + 1 != static_cast<std::size_t>(j)) out *= BigInt(static_cast<long>(vj)) - BigInt(static_cast<long>(v[i]));
  return out;
}

CountResult count_mult_cong(int r, u64 q, i64 lambda, const TupleBox& box) {
  check_shape(r, q, box);
  if (box.empty()) return {};
  check_half_budget(box);
  Lists lists;
  for (const auto& iv : box.coords()) {
    std::vector<u64> xs;
    for (u64 k = 0; k < iv.size(); ++k) xs.push_back(reduce(lambda + iv.at(k), q));
    lists.push_back(std::move(xs));
  }
  const auto mul = [q](u64 a, u64 b) { return mulmod(a, b, q); };
  return {match_halves(lists, q, 1 % q, mul), 0};
}

CountResult count_mult_cong(int r, u64 q, i64 lambda, i64 V) {
  return count_mult_cong(r, q, lambda, TupleBox::cube(r, 1, V));
}

std::vector<CountResult> count_K_boxed(int r, u64 q, i64 lambda, std::span<const TupleBox> boxes) {
  std::vector<const TupleBox*> live;
  for (const auto& b : boxes) {
    check_shape(r, q, b);
    if (!b.unit_stride()) throw std::domain_error("count_K_boxed: boxes must have unit stride");
    if (!b.empty()) live.push_back(&b);
  }
  if (!live.empty()) {
    const std::size_t n = live.front()->dimension();
    std::vector<Interval> hull(live.front()->coords());
    u64 total = 0;
    for (const auto* b : live) {
      total += b->volume();
      for (std::size_t i = 0; i < n; ++i) {
        hull[i].lo = std::min(hull[i].lo, (*b)[i].lo);
        hull[i].hi = std::max(hull[i].hi, (*b)[i].hi);
      }
    }
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b) {
        bool overlap = true;
        for (std::size_t i = 0; i < n && overlap; ++i)
          overlap = (*live[a])[i].lo <= (*live[b])[i].hi && (*live[b])[i].lo <= (*live[a])[i].hi;
        if (overlap) throw std::domain_error("count_K_boxed: boxes overlap");
      }
    if (total != TupleBox(hull).volume()) throw std::domain_error("count_K_boxed: boxes do not cover their hull");
  }
  std::vector<CountResult> out;
  out.reserve(boxes.size());
  for (const auto& b : boxes) out.push_back(count_K(r, q, lambda, b));
  return out;
}

std::vector<TupleBox> partition_box(const TupleBox& box, int parts) {
  if (parts < 1) throw std::domain_error("partition_box: parts must be positive");
  if (!box.unit_stride()) throw std::domain_error("partition_box: box must have unit stride");
  const std::size_t n = box.dimension();
  std::vector<std::vector<Interval>> pieces(n);
  for (std::size_t i = 0; i < n; ++i) {
    const i64 size = static_cast<i64>(box[i].size());
    for (i64 k = 0; k < parts; ++k)
      pieces[i].push_back({box[i].lo + k * size / parts, box[i].lo + (k + 1) * size / parts - 1, 1});
  }
  std::vector<TupleBox> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Interval> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(pieces[i][idx[i]]);
    out.emplace_back(std::move(c));
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == static_cast<std::size_t>(parts)) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

Sigma Sigma::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Sigma: zero denominator");
  BigRational x(num, den);
  x.canonicalize();
  Sigma s;
  s.num = x.get_num();
  s.den = x.get_den();
  return s;
}

Sigma Sigma::algebraic(IntPolynomial minpoly) {
  if (minpoly.degree() < 1) throw std::domain_error("Sigma: minimal polynomial must be nonconstant");
  if (minpoly.degree() == 1) return rational(-minpoly.coeff(0), minpoly.coeff(1));
  if (!passes_irreducibility_screen(minpoly))
    throw std::domain_error("Sigma: minimal polynomial is reducible over Q");
  Sigma s;
  s.minimal_polynomial = std::move(minpoly);
  return s;
}

std::string Sigma::to_string() const {
  if (minimal_polynomial) return "root of " + minimal_polynomial->to_string();
  return den == 1 ? num.get_str() : num.get_str() + "/" + den.get_str();
}

u64 count_J(int r, i64 V, const Sigma& sigma) {
  if (r < 1) throw std::domain_error("count_J: r must be positive");
  if (V < 0) return 0;
  if (sigma.minimal_polynomial && !passes_irreducibility_screen(*sigma.minimal_polynomial))
    throw std::domain_error("count_J: minimal polynomial is reducible over Q");
  const auto n = static_cast<std::size_t>(2 * r);
  const auto width = static_cast<u64>(2 * V + 1);
  u64 total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= width;
  // A rational sigma = a/b is a pole of 1/(sigma+v) exactly when b v + a = 0.
  auto is_pole = [&](i64 x) { return !sigma.minimal_polynomial && sigma.den * x + sigma.num == 0; };
  u64 count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (u64 t = 0; t < total; ++t) {
    std::vector<i64> v(n);
    u64 rest = t;
    bool pole = false;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<i64>(rest % width) - V;
      rest /= width;
      pole = pole || is_pole(v[i]);
    }
    if (pole) continue;
    const IntPolynomial p = build_Pv_kloosterman(v);
    if (p.is_zero())
      ++count;
    else if (sigma.minimal_polynomial)
      count += divides(*sigma.minimal_polynomial, p);
    else
      count += p.evaluate_homogeneous(sigma.num, sigma.den) == 0;
  }
  return count;
}

}  // namespace charsum
