#include "consta/cdft.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace consta {

CodeParams CodeParams::make(const FieldCtx& field, std::size_t n, const FieldElem& lambda) {
  if (n == 0 || n > kMaxLength)
    throw std::invalid_argument("code length must be in [1, " + std::to_string(kMaxLength) + "]");
  if (n % field.characteristic() == 0)
    throw std::invalid_argument("gcd(n, q) != 1: n = " + std::to_string(n) + ", q = " +
                                std::to_string(field.cardinality()));
  CodeParams p;
  p.field = field;
  p.n = n;
  p.lambda = field.embed(lambda);
  if (p.lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  p.q = field.cardinality();
  p.order_lambda = elem_order(p.lambda);
  p.m1 = multiplicative_order_mod(p.q, n);
  p.m2 = multiplicative_order_mod(p.q, n * p.order_lambda);
  return p;
}

// ---------------------------------------------------------------------------
// RootFamily

RootFamily::RootFamily(const FieldCtx& base, std::size_t n) : base_(base), n_(n), q_(base.cardinality()) {
  if (n == 0 || n % base.characteristic() == 0) throw std::invalid_argument("RootFamily: need gcd(n, q) = 1");
  delta_order_ = static_cast<std::uint64_t>(n) * (q_ - 1);
  splitting_degree_ = static_cast<unsigned>(multiplicative_order_mod(q_, delta_order_));
  splitting_ = base.extend(splitting_degree_);
  delta_ = find_element_of_order(splitting_, delta_order_);
  xi_ = delta_.pow(q_ - 1);
  xi_powers_.reserve(n);
  FieldElem cur = splitting_.one();
  for (std::size_t k = 0; k < n; ++k) {
    xi_powers_.push_back(cur);
    cur = cur * xi_;
  }
}

std::shared_ptr<const RootFamily> RootFamily::get(const FieldCtx& base, std::size_t n) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint64_t, std::vector<unsigned>, std::size_t>, std::shared_ptr<const RootFamily>>
      cache;
  auto key = std::make_tuple(base.characteristic(), base.degrees(), n);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto fam = std::make_shared<const RootFamily>(base, n);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(fam)).first->second;
}

const FieldElem& RootFamily::xi_pow(std::int64_t k) const {
  const auto m = static_cast<std::int64_t>(n_);
  std::int64_t r = k % m;
  if (r < 0) r += m;
  return xi_powers_[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------------------
// RootBasis

RootBasis::RootBasis(std::shared_ptr<const RootFamily> family, std::uint64_t s)
    : family_(std::move(family)), s_(s % family_->delta_order()) {
  const auto& fam = *family_;
  beta_ = fam.delta().pow(s_);
  lambda_ = fam.splitting().restrict_to(fam.base(), beta_.pow(fam.n()));
  const FieldElem target = beta_.pow(fam.q() - 1);
  bool found = false;
  for (std::size_t t = 0; t < fam.n(); ++t) {
    if (fam.xi_pow(static_cast<std::int64_t>(t)) == target) {
      t_ = t;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no Frobenius shift t with xi^t = beta^(q-1)");
  points_.reserve(fam.n());
  for (std::size_t j = 0; j < fam.n(); ++j) points_.push_back(fam.xi_pow(static_cast<std::int64_t>(j)) * beta_);
}

RootBasis RootBasis::canonical(std::shared_ptr<const RootFamily> family, const FieldElem& lambda) {
  const FieldElem lam = family->splitting().embed(lambda);
  if (lam.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  const FieldElem step = family->delta().pow(family->n());
  FieldElem cur = family->splitting().one();
  for (std::uint64_t s = 0; s + 1 < family->q() || s == 0; ++s) {
    if (cur == lam) return RootBasis(std::move(family), s);
    cur = cur * step;
  }
  throw std::invalid_argument("lambda is not in the base field");
}

RootBasis RootBasis::with_exponent(std::shared_ptr<const RootFamily> family, std::uint64_t s) {
  return RootBasis(std::move(family), s);
}

RootBasis RootBasis::inverse() const {
  const std::uint64_t ord = family_->delta_order();
  return RootBasis(family_, (ord - s_) % ord);
}

RootBasis RootBasis::times(const RootBasis& other) const {
  if (family_ != other.family_) throw std::invalid_argument("RootBasis::times: bases from different families");
  return RootBasis(family_, (s_ + other.s_) % family_->delta_order());
}

RootBasis RootBasis::power(unsigned i) const {
  const auto ord = static_cast<unsigned __int128>(family_->delta_order());
  return RootBasis(family_, static_cast<std::uint64_t>(static_cast<unsigned __int128>(s_) * i % ord));
}

CodeParams RootBasis::params() const { return CodeParams::make(base(), n(), lambda_); }

RootBasis build_basis(const CodeParams& params) {
  return RootBasis::canonical(RootFamily::get(params.field, params.n), params.lambda);
}

// ---------------------------------------------------------------------------
// transforms

Spectrum forward(const Vec& a, const RootBasis& basis) {
  const std::size_t n = basis.n();
  if (a.size() != n) throw std::invalid_argument("forward: vector length must equal n");
  const FieldCtx& ext = basis.splitting();
  Vec coeffs;
  coeffs.reserve(n);
  for (const auto& c : a) coeffs.push_back(ext.embed(c));
  Vec out;
  out.reserve(n);
  for (const auto& w : basis.points()) {
    FieldElem acc = ext.zero();
    for (std::size_t i = n; i-- > 0;) acc = acc * w + coeffs[i];
    out.push_back(acc);
  }
  return Spectrum{std::move(out), basis};
}

Vec inverse(const Spectrum& spectrum) {
  const RootBasis& basis = spectrum.basis;
  const std::size_t n = basis.n();
  if (spectrum.values.size() != n) throw std::invalid_argument("inverse: spectrum length must equal n");
  const FieldCtx& ext = basis.splitting();
  const auto& fam = *basis.family();
  const FieldElem n_inv = ext.from_int(static_cast<std::int64_t>(n)).inv();
  const FieldElem beta_inv = basis.beta().inv();
  Vec out;
  out.reserve(n);
  FieldElem scale = n_inv;  // (n beta^i)^{-1}
  for (std::size_t i = 0; i < n; ++i) {
    FieldElem acc = ext.zero();
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = -static_cast<std::int64_t>((i * j) % n);
      acc += ext.embed(spectrum.values[j]) * fam.xi_pow(e);
    }
    out.push_back(acc * scale);
    scale = scale * beta_inv;
  }
  return out;
}

bool is_rational_spectrum(const Spectrum& spectrum) {
  const RootBasis& basis = spectrum.basis;
  const std::size_t n = basis.n();
  if (spectrum.values.size() != n) throw std::invalid_argument("is_rational_spectrum: length must equal n");
  const std::uint64_t q = basis.q();
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = static_cast<std::size_t>((q % n * j + basis.t()) % n);
    if (!(spectrum.values[j].pow(q) == spectrum.values[k])) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> affine_orbits(const RootBasis& basis) {
  const std::size_t n = basis.n();
  const std::size_t qm = static_cast<std::size_t>(basis.q() % n);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit;
    std::size_t j = start;
    while (!seen[j]) {
      seen[j] = true;
      orbit.push_back(j);
      j = (qm * j + basis.t()) % n;
    }
    if (j != start) throw std::logic_error("affine map is not a permutation of Z_n");
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<Poly> factor_xn_minus_lambda(const RootBasis& basis) {
  const FieldCtx& ext = basis.splitting();
  std::vector<Poly> out;
  for (const auto& orbit : affine_orbits(basis)) {
    Poly f = Poly::constant(ext, ext.one());
    for (auto k : orbit) f = f * Poly::linear(ext, basis.points()[k]);
    try {
      out.push_back(f.restrict_to(basis.base()));
    } catch (const std::domain_error&) {
      throw std::logic_error("orbit factor has a coefficient outside the base field; the root basis is inconsistent");
    }
  }
  return out;
}

ZnSet spectral_support(const Poly& a, const RootBasis& basis) {
  std::vector<std::int64_t> idx;
  const auto& pts = basis.points();
  for (std::size_t j = 0; j < pts.size(); ++j)
    if (!a.eval(pts[j]).is_zero()) idx.push_back(static_cast<std::int64_t>(j));
  return ZnSet(basis.n(), idx);
}

ZnSet spectral_support(const Vec& a, const RootBasis& basis) {
  if (a.size() != basis.n()) throw std::invalid_argument("spectral_support: vector length must equal n");
  const Spectrum s = forward(a, basis);
  std::vector<std::int64_t> idx;
  for (std::size_t j = 0; j < s.values.size(); ++j)
    if (!s.values[j].is_zero()) idx.push_back(static_cast<std::int64_t>(j));
  return ZnSet(basis.n(), idx);
}

}  // namespace consta
