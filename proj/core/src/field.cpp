#include "consta/field.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "field_data.hpp"

namespace consta {

// ---------------------------------------------------------------------------
// integer helpers

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

std::uint64_t multiplicative_order_mod(std::uint64_t q, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("multiplicative_order_mod: modulus 0");
  if (m == 1) return 1;
  if (std::gcd(q % m, m) != 1) throw std::invalid_argument("multiplicative_order_mod: q not a unit mod m");
  const auto qm = static_cast<unsigned __int128>(q % m);
  unsigned __int128 acc = qm;
  for (std::uint64_t k = 1;; ++k) {
    if (acc == 1) return k;
    acc = acc * qm % m;
  }
}

// ---------------------------------------------------------------------------
// level arithmetic

namespace detail {

namespace {
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
constexpr unsigned kMaxPolyLen = 128;
}  // namespace

std::uint64_t FieldData::add(std::size_t lvl, std::uint64_t x, std::uint64_t y) const {
  if (p == 2) return x ^ y;
  if (lvl == 0) {
    std::uint64_t s = x + y;
    return s >= p ? s - p : s;
  }
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < digits[lvl]; ++i) {
    std::uint64_t dx = x % p, dy = y % p;
    x /= p;
    y /= p;
    std::uint64_t s = dx + dy;
    if (s >= p) s -= p;
    out += s * place;
    place *= p;
  }
  return out;
}

std::uint64_t FieldData::neg(std::size_t lvl, std::uint64_t x) const {
  if (p == 2) return x;
  if (lvl == 0) return x == 0 ? 0 : p - x;
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < digits[lvl]; ++i) {
    std::uint64_t d = x % p;
    x /= p;
    out += (d == 0 ? 0 : p - d) * place;
    place *= p;
  }
  return out;
}

std::uint64_t FieldData::mul(std::size_t lvl, std::uint64_t x, std::uint64_t y) const {
  if (x == 0 || y == 0) return 0;
  if (x == 1) return y;
  if (y == 1) return x;
  if (lvl == 0) return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  const auto& t = tables[lvl];
  if (!t.exp.empty()) {
    std::uint64_t e = std::uint64_t{t.log[x]} + t.log[y];
    const std::uint64_t ord = size[lvl] - 1;
    if (e >= ord) e -= ord;
    return t.exp[e];
  }
  return mul_generic(lvl, x, y);
}

std::uint64_t FieldData::mul_generic(std::size_t lvl, std::uint64_t x, std::uint64_t y) const {
  const std::uint64_t Q = size[lvl - 1];
  const unsigned d = degrees[lvl - 1];
  std::array<std::uint64_t, kMaxPolyLen> a{}, b{}, prod{};
  for (unsigned i = 0; i < d; ++i) {
    a[i] = x % Q;
    x /= Q;
    b[i] = y % Q;
    y /= Q;
  }
  for (unsigned i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = add(lvl - 1, prod[i + j], mul(lvl - 1, a[i], b[j]));
    }
  }
  const auto& m = moduli[lvl - 1];
  for (unsigned k = 2 * d - 2; k >= d && k < kMaxPolyLen; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (m[j] == 0) continue;
      prod[k - d + j] = add(lvl - 1, prod[k - d + j], neg(lvl - 1, mul(lvl - 1, c, m[j])));
    }
  }
  std::uint64_t out = 0;
  for (unsigned i = d; i-- > 0;) out = out * Q + prod[i];
  return out;
}

std::uint64_t FieldData::pow(std::size_t lvl, std::uint64_t x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  const auto& t = lvl > 0 ? tables[lvl] : tables[0];
  if (lvl > 0 && !t.exp.empty()) {
    const std::uint64_t ord = size[lvl] - 1;
    auto r = static_cast<unsigned __int128>(t.log[x]) * (e % ord) % ord;
    return t.exp[static_cast<std::uint64_t>(r)];
  }
  std::uint64_t r = 1, b = x;
  while (e) {
    if (e & 1) r = mul(lvl, r, b);
    e >>= 1;
    if (e) b = mul(lvl, b, b);
  }
  return r;
}

std::uint64_t FieldData::inv(std::size_t lvl, std::uint64_t x) const {
  if (x == 0) throw std::domain_error("inverse of zero");
  if (lvl > 0 && !tables[lvl].exp.empty()) {
    const std::uint64_t ord = size[lvl] - 1;
    const std::uint64_t l = tables[lvl].log[x];
    return tables[lvl].exp[l == 0 ? 0 : ord - l];
  }
  return pow(lvl, x, size[lvl] - 2);
}

bool FieldData::same_tower(const FieldData& o) const {
  return p == o.p && degrees == o.degrees && moduli == o.moduli;
}

bool FieldData::has_prefix(const FieldData& sub) const {
  if (p != sub.p) return false;
  // degree-1 levels do not change indices, so they are skipped on both sides
  std::size_t i = 0, j = 0;
  for (;;) {
    while (i < degrees.size() && degrees[i] == 1) ++i;
    while (j < sub.degrees.size() && sub.degrees[j] == 1) ++j;
    if (j == sub.degrees.size()) return true;
    if (i == degrees.size()) return false;
    if (degrees[i] != sub.degrees[j] || moduli[i] != sub.moduli[j]) return false;
    ++i;
    ++j;
  }
}

namespace {

// Dense polynomials over one level of a tower, as vectors of element indices
// (constant term first, normalized). Only what the irreducibility test needs.
class LevelPoly {
 public:
  LevelPoly(const FieldData& f, std::size_t lvl) : f_(f), lvl_(lvl) {}

  using Vec = std::vector<std::uint64_t>;

  void trim(Vec& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  Vec mod(Vec a, const Vec& m) const {
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = f_.inv(lvl_, m.back());
    trim(a);
    while (a.size() > dm) {
      const std::uint64_t c = f_.mul(lvl_, a.back(), lead_inv);
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t j = 0; j <= dm; ++j)
        a[shift + j] = f_.add(lvl_, a[shift + j], f_.neg(lvl_, f_.mul(lvl_, c, m[j])));
      trim(a);
    }
    return a;
  }

  Vec mulmod(const Vec& a, const Vec& b, const Vec& m) const {
    if (a.empty() || b.empty()) return {};
    Vec prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        prod[i + j] = f_.add(lvl_, prod[i + j], f_.mul(lvl_, a[i], b[j]));
    }
    return mod(std::move(prod), m);
  }

  Vec powmod(Vec base, std::uint64_t e, const Vec& m) const {
    Vec r{1};
    base = mod(std::move(base), m);
    while (e) {
      if (e & 1) r = mulmod(r, base, m);
      e >>= 1;
      if (e) base = mulmod(base, base, m);
    }
    return r;
  }

  Vec gcd(Vec a, Vec b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Vec r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  /// Ben-Or: f of degree d is irreducible iff gcd(f, x^{Q^i} - x) = 1 for
  /// all 1 <= i <= d/2.
  bool irreducible(const Vec& f) const {
    const std::size_t d = f.size() - 1;
    if (d <= 1) return d == 1;
    if (f[0] == 0) return false;
    const std::uint64_t Q = f_.size[lvl_];
    Vec h{0, 1};
    for (std::size_t i = 1; i <= d / 2; ++i) {
      h = powmod(h, Q, f);
      Vec diff = h;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = f_.add(lvl_, diff[1], f_.neg(lvl_, 1));
      trim(diff);
      if (diff.empty()) return false;
      if (gcd(f, diff).size() > 1) return false;
    }
    return true;
  }

 private:
  const FieldData& f_;
  std::size_t lvl_;
};

std::uint64_t first_order_generator(const FieldData& f, std::size_t lvl) {
  const std::uint64_t N = f.size[lvl];
  if (N == 2) return 1;
  const auto factors = prime_factors(N - 1);
  for (std::uint64_t x = 2; x < N; ++x) {
    bool prim = true;
    for (auto r : factors)
      if (f.pow(lvl, x, (N - 1) / r) == 1) {
        prim = false;
        break;
      }
    if (prim) return x;
  }
  throw std::logic_error("no primitive element found");
}

void build_tables(FieldData& f, std::size_t lvl) {
  const std::uint64_t N = f.size[lvl];
  if (N > kTableLimit) return;
  const std::uint64_t g = first_order_generator(f, lvl);
  FieldData::Tables t;
  t.exp.resize(N - 1);
  t.log.assign(N, 0);
  std::uint64_t cur = 1;
  for (std::uint64_t i = 0; i + 1 < N; ++i) {
    t.exp[i] = static_cast<std::uint32_t>(cur);
    t.log[cur] = static_cast<std::uint32_t>(i);
    cur = f.mul_generic(lvl, cur, g);
  }
  f.tables[lvl] = std::move(t);
}

std::shared_ptr<FieldData> construct(std::uint64_t p, const std::vector<unsigned>& degrees) {
  auto f = std::make_shared<FieldData>();
  f->p = p;
  f->size.push_back(p);
  f->digits.push_back(1);
  f->tables.emplace_back();
  for (std::size_t lvl = 1; lvl <= degrees.size(); ++lvl) {
    const unsigned d = degrees[lvl - 1];
    const std::uint64_t Q = f->size[lvl - 1];
    // Canonical scan over monic polynomials y^d + c_{d-1} y^{d-1} + ... + c_0,
    // with (c_{d-1}, ..., c_0) read as a base-Q integer.
    LevelPoly lp(*f, lvl - 1);
    std::vector<std::uint64_t> modulus;
    const std::uint64_t count = ipow(Q, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> cand(d + 1);
      std::uint64_t rest = idx;
      for (unsigned i = 0; i < d; ++i) {
        cand[i] = rest % Q;
        rest /= Q;
      }
      cand[d] = 1;
      if (lp.irreducible(cand)) {
        modulus = std::move(cand);
        break;
      }
    }
    if (modulus.empty()) throw std::logic_error("no irreducible modulus found");
    f->degrees.push_back(d);
    f->moduli.push_back(std::move(modulus));
    f->size.push_back(count);
    f->digits.push_back(f->digits.back() * d);
    f->tables.emplace_back();
    build_tables(*f, lvl);
  }
  return f;
}

}  // namespace

const std::vector<std::uint64_t>& FieldData::group_order_factors() const {
  std::call_once(factors_once, [this] { factors = prime_factors(size.back() - 1); });
  return factors;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx build_field(std::uint64_t p, const std::vector<unsigned>& degrees) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("build_field: characteristic too large");
  if (degrees.empty()) throw std::invalid_argument("build_field: empty degree list");
  unsigned __int128 card = p;
  for (unsigned d : degrees) {
    if (d == 0) throw std::invalid_argument("build_field: extension degree 0");
    for (unsigned i = 1; i < d; ++i) {
      card *= p;
      if (card > FieldCtx::kMaxCardinality) break;
    }
    if (card > FieldCtx::kMaxCardinality) break;
  }
  if (card > FieldCtx::kMaxCardinality)
    throw std::invalid_argument("build_field: field exceeds the size cap of 2^62 elements");

  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::vector<unsigned>>, std::shared_ptr<const detail::FieldData>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(p, degrees);
  if (auto it = cache.find(key); it != cache.end()) return FieldCtx(it->second);
  std::shared_ptr<const detail::FieldData> data = detail::construct(p, degrees);
  cache.emplace(key, data);
  return FieldCtx(std::move(data));
}

std::uint64_t FieldCtx::characteristic() const { return data_->p; }
const std::vector<unsigned>& FieldCtx::degrees() const { return data_->degrees; }
const std::vector<std::vector<std::uint64_t>>& FieldCtx::moduli() const { return data_->moduli; }
std::uint64_t FieldCtx::cardinality() const { return data_->size.back(); }
unsigned FieldCtx::absolute_degree() const { return data_->digits.back(); }

FieldCtx FieldCtx::prefix(std::size_t lv) const {
  if (lv == 0 || lv > levels()) throw std::invalid_argument("FieldCtx::prefix: bad level count");
  if (lv == levels()) return *this;
  return build_field(data_->p, std::vector<unsigned>(degrees().begin(), degrees().begin() + static_cast<long>(lv)));
}

FieldCtx FieldCtx::extend(unsigned degree) const {
  auto d = degrees();
  d.push_back(degree);
  return build_field(data_->p, d);
}

bool FieldCtx::contains_subfield(const FieldCtx& sub) const { return data_->has_prefix(*sub.data_); }

FieldElem FieldCtx::make(std::uint64_t index) const {
  if (index >= cardinality()) throw std::invalid_argument("FieldCtx::make: index out of range");
  return FieldElem(data_.get(), index);
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return FieldElem(data_.get(), static_cast<std::uint64_t>(r));
}

FieldElem FieldCtx::from_digits(std::span<const std::uint64_t> digits) const {
  if (digits.size() != absolute_degree()) throw std::invalid_argument("from_digits: wrong digit count");
  std::uint64_t idx = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= data_->p) throw std::invalid_argument("from_digits: digit out of range");
    idx = idx * data_->p + digits[i];
  }
  return FieldElem(data_.get(), idx);
}

std::vector<std::uint64_t> FieldCtx::digits(const FieldElem& x) const {
  const FieldElem e = embed(x);
  std::vector<std::uint64_t> out(absolute_degree());
  std::uint64_t idx = e.index();
  for (auto& d : out) {
    d = idx % data_->p;
    idx /= data_->p;
  }
  return out;
}

FieldElem FieldCtx::embed(const FieldElem& x) const {
  if (!x.data_) throw std::invalid_argument("embed: null element");
  if (x.data_ == data_.get()) return x;
  if (!data_->has_prefix(*x.data_))
    throw std::invalid_argument("embed: element is not from a subfield of " + describe());
  return FieldElem(data_.get(), x.index_);
}

bool FieldCtx::lies_in(const FieldCtx& sub, const FieldElem& x) const {
  return embed(x).index() < sub.cardinality();
}

FieldElem FieldCtx::restrict_to(const FieldCtx& sub, const FieldElem& x) const {
  if (!contains_subfield(sub)) throw std::invalid_argument("restrict_to: not a subfield");
  const FieldElem e = embed(x);
  if (e.index() >= sub.cardinality())
    throw std::domain_error("restrict_to: element lies outside " + sub.describe());
  return sub.make(e.index());
}

const std::vector<std::uint64_t>& FieldCtx::group_order_factors() const { return data_->group_order_factors(); }

bool FieldCtx::operator==(const FieldCtx& o) const {
  if (data_ == o.data_) return true;
  if (!data_ || !o.data_) return false;
  return data_->same_tower(*o.data_);
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "GF(" << data_->p;
  if (absolute_degree() > 1) os << "^" << absolute_degree();
  os << ")";
  if (levels() > 1) {
    os << " tower [";
    for (std::size_t i = 0; i < levels(); ++i) os << (i ? "," : "") << degrees()[i];
    os << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FieldElem

namespace {

const detail::FieldData* common(const detail::FieldData* a, const detail::FieldData* b) {
  if (!a || !b) throw std::invalid_argument("arithmetic on a null field element");
  if (a == b) return a;
  if (a->has_prefix(*b)) return a;
  if (b->has_prefix(*a)) return b;
  throw std::invalid_argument("arithmetic on elements of unrelated fields");
}

}  // namespace

FieldCtx FieldElem::field() const {
  if (!data_) throw std::invalid_argument("null field element");
  return FieldCtx(data_->shared_from_this());
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  const auto* d = common(data_, o.data_);
  return {d, d->add(d->top(), index_, o.index_)};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  const auto* d = common(data_, o.data_);
  return {d, d->add(d->top(), index_, d->neg(d->top(), o.index_))};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  const auto* d = common(data_, o.data_);
  return {d, d->mul(d->top(), index_, o.index_)};
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::operator-() const {
  if (!data_) throw std::invalid_argument("null field element");
  return {data_, data_->neg(data_->top(), index_)};
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  if (!data_) throw std::invalid_argument("null field element");
  return {data_, data_->pow(data_->top(), index_, e)};
}

FieldElem FieldElem::pow_signed(std::int64_t e) const {
  if (e >= 0) return pow(static_cast<std::uint64_t>(e));
  return inv().pow(static_cast<std::uint64_t>(-e));
}

FieldElem FieldElem::inv() const {
  if (!data_) throw std::invalid_argument("null field element");
  return {data_, data_->inv(data_->top(), index_)};
}

std::vector<std::uint64_t> FieldElem::coefficients() const {
  const auto lvl = data_->top();
  const std::uint64_t Q = data_->size[lvl - 1];
  std::vector<std::uint64_t> out(data_->degrees[lvl - 1]);
  std::uint64_t idx = index_;
  for (auto& c : out) {
    c = idx % Q;
    idx /= Q;
  }
  return out;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (!data_ || !o.data_) return data_ == o.data_ && index_ == o.index_;
  common(data_, o.data_);
  return index_ == o.index_;
}

std::strong_ordering FieldElem::operator<=>(const FieldElem& o) const {
  if (data_ && o.data_) common(data_, o.data_);
  return index_ <=> o.index_;
}

// ---------------------------------------------------------------------------
// orders

std::uint64_t elem_order(const FieldElem& x) {
  if (x.is_zero()) throw std::domain_error("elem_order: zero has no multiplicative order");
  const FieldCtx ctx = x.field();
  std::uint64_t ord = ctx.cardinality() - 1;
  for (auto r : ctx.group_order_factors()) {
    while (ord % r == 0 && x.pow(ord / r).is_one()) ord /= r;
  }
  return ord;
}

FieldElem find_element_of_order(const FieldCtx& ctx, std::uint64_t e) {
  const std::uint64_t N = ctx.cardinality();
  if (e == 0 || (N - 1) % e != 0)
    throw std::invalid_argument("find_element_of_order: " + std::to_string(e) + " does not divide " +
                                std::to_string(N - 1));
  if (e == 1) return ctx.one();
  const auto e_factors = prime_factors(e);
  auto has_order_e = [&](const FieldElem& w) {
    if (!w.pow(e).is_one()) return false;
    for (auto r : e_factors)
      if (w.pow(e / r).is_one()) return false;
    return true;
  };

  constexpr std::uint64_t kSubgroupLimit = std::uint64_t{1} << 22;
  if (e <= kSubgroupLimit) {
    // The elements of order e are exactly the generators of the cyclic
    // subgroup mu_e; enumerate it and keep the smallest canonical index.
    FieldElem omega;
    for (std::uint64_t i = 1; i < N; ++i) {
      FieldElem w = ctx.make(i).pow((N - 1) / e);
      if (has_order_e(w)) {
        omega = w;
        break;
      }
    }
    FieldElem best = omega, cur = omega;
    for (std::uint64_t k = 2; k < e; ++k) {
      cur = cur * omega;
      if (std::gcd(k, e) == 1 && cur.index() < best.index()) best = cur;
    }
    return best;
  }
  constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 26;
  for (std::uint64_t i = 1; i < N && i < kScanLimit; ++i) {
    FieldElem w = ctx.make(i);
    if (has_order_e(w)) return w;
  }
  throw std::runtime_error("find_element_of_order: search limit exceeded");
}

}  // namespace consta
