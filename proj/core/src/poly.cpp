#include "consta/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace consta {

namespace {

const FieldCtx& wider(const FieldCtx& a, const FieldCtx& b) {
  if (a.data() == b.data() || a.contains_subfield(b)) return a;
  if (b.contains_subfield(a)) return b;
  throw std::invalid_argument("polynomials over unrelated fields");
}

}  // namespace

Poly::Poly(FieldCtx field, const Vec& coeffs) : field_(std::move(field)) {
  c_.reserve(coeffs.size());
  for (const auto& c : coeffs) c_.push_back(field_.embed(c));
  normalize();
}

Poly Poly::from_ints(const FieldCtx& field, const std::vector<std::int64_t>& coeffs) {
  Vec v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return Poly(field, v);
}

Poly Poly::constant(const FieldCtx& field, const FieldElem& c) { return Poly(field, Vec{c}); }

Poly Poly::monomial(const FieldCtx& field, const FieldElem& c, std::size_t k) {
  Vec v(k + 1, field.zero());
  v[k] = c;
  return Poly(field, v);
}

Poly Poly::linear(const FieldCtx& field, const FieldElem& root) {
  return Poly(field, Vec{-field.embed(root), field.one()});
}

Poly Poly::x_n_minus(const FieldCtx& field, std::size_t n, const FieldElem& lambda) {
  Vec v(n + 1, field.zero());
  v[0] = -field.embed(lambda);
  v[n] = v[n] + field.one();
  return Poly(field, v);
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem Poly::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

FieldElem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(lead().inv());
}

Poly Poly::operator+(const Poly& o) const {
  const FieldCtx& f = wider(field_, o.field_);
  Vec v(std::max(c_.size(), o.c_.size()), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return Poly(f, v);
}

Poly Poly::operator-(const Poly& o) const {
  const FieldCtx& f = wider(field_, o.field_);
  Vec v(std::max(c_.size(), o.c_.size()), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return Poly(f, v);
}

Poly Poly::operator-() const {
  Vec v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(-c);
  return Poly(field_, v);
}

Poly Poly::operator*(const Poly& o) const {
  const FieldCtx& f = wider(field_, o.field_);
  if (is_zero() || o.is_zero()) return Poly(f);
  Vec v(c_.size() + o.c_.size() - 1, f.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Poly(f, v);
}

Poly Poly::scaled(const FieldElem& s) const {
  Vec v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * s);
  return Poly(field_, v);
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  Vec v(k, field_.zero());
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(field_, v);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldCtx& f = wider(a.field(), b.field());
  Vec r = a.c_;
  for (auto& c : r) c = f.embed(c);
  const int db = b.degree();
  if (a.degree() < db) return {Poly(f), a.embed(f)};
  Vec q(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
  const FieldElem lead_inv = b.lead().inv();
  for (int k = a.degree(); k >= db; --k) {
    const FieldElem c = r[static_cast<std::size_t>(k)] * lead_inv;
    q[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(f, q), Poly(f, r)};
}

FieldElem Poly::eval(const FieldElem& x) const {
  FieldElem acc = x.field().contains_subfield(field_) ? x.field().zero() : field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::embed(const FieldCtx& ext) const { return Poly(ext, c_); }

Poly Poly::restrict_to(const FieldCtx& sub) const {
  Vec v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(field_.restrict_to(sub, c));
  return Poly(sub, v);
}

Vec Poly::to_vector(std::size_t n) const {
  if (degree() >= static_cast<int>(n))
    throw std::invalid_argument("to_vector: degree " + std::to_string(degree()) + " does not fit length " +
                                std::to_string(n));
  Vec v(n, field_.zero());
  std::copy(c_.begin(), c_.end(), v.begin());
  return v;
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].is_one();
    if (!unit || i == 0) os << c_[i].index();
    if (i > 0) os << (unit ? "" : "*") << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both arguments are zero");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly reciprocal(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
  Vec v(a.coeffs().rbegin(), a.coeffs().rend());
  return Poly(a.field(), v);
}

Poly reduce_constacyclic(const Poly& a, std::size_t n, const FieldElem& lambda) {
  if (n == 0) throw std::invalid_argument("reduce_constacyclic: n must be positive");
  const FieldCtx& f = a.field();
  if (a.degree() < static_cast<int>(n)) return a;
  Vec v(n, f.zero());
  // x^{qn + r} = lambda^q x^r
  FieldElem lam_pow = f.one();
  const FieldElem lam = f.embed(lambda);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i > 0 && i % n == 0) lam_pow = lam_pow * lam;
    v[i % n] += a.coeffs()[i] * lam_pow;
  }
  return Poly(f, v);
}

Poly mul_mod_constacyclic(const Poly& a, const Poly& b, std::size_t n, const FieldElem& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("mul_mod_constacyclic: lambda must be nonzero");
  if (a.degree() >= static_cast<int>(n) || b.degree() >= static_cast<int>(n))
    throw std::invalid_argument("mul_mod_constacyclic: operand degree must be below n");
  const FieldCtx& f = a.field();
  const FieldElem lam = f.embed(lambda);
  Vec v(n, f.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      FieldElem term = a.coeffs()[i] * b.coeffs()[j];
      if (i + j >= n) term = term * lam;
      v[(i + j) % n] += term;
    }
  }
  return Poly(f, v);
}

Vec schur(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("schur: length mismatch");
  Vec out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

}  // namespace consta
