#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "consta/field.hpp"

namespace consta {

using Vec = std::vector<FieldElem>;

/// Dense univariate polynomial over a FieldCtx. Coefficient i multiplies x^i;
/// the list never has trailing zeros, so the zero polynomial is empty.
class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(FieldCtx field) : field_(std::move(field)) {}
  /// Coefficients are embedded into `field` (they may come from a subfield).
  Poly(FieldCtx field, const Vec& coeffs);

  /// Prime-field convenience: integers are reduced mod p.
  static Poly from_ints(const FieldCtx& field, const std::vector<std::int64_t>& coeffs);
  static Poly constant(const FieldCtx& field, const FieldElem& c);
  static Poly monomial(const FieldCtx& field, const FieldElem& c, std::size_t k);
  /// x - root
  static Poly linear(const FieldCtx& field, const FieldElem& root);
  /// x^n - lambda
  static Poly x_n_minus(const FieldCtx& field, std::size_t n, const FieldElem& lambda);

  const FieldCtx& field() const noexcept { return field_; }
  const Vec& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  FieldElem lead() const;
  /// Coefficient of x^i (zero beyond the degree).
  FieldElem coeff(std::size_t i) const;

  Poly monic() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const FieldElem& s) const;
  /// Multiply by x^k.
  Poly shifted(std::size_t k) const;
  Poly operator%(const Poly& m) const { return divmod(*this, m).second; }
  /// Euclidean quotient.
  Poly operator/(const Poly& m) const { return divmod(*this, m).first; }
  bool divides(const Poly& a) const { return (a % *this).is_zero(); }

  /// Quotient and remainder; throws std::domain_error when dividing by zero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  /// Horner evaluation; the result lives in whichever field is larger.
  FieldElem eval(const FieldElem& x) const;

  Poly embed(const FieldCtx& ext) const;
  /// Throws std::domain_error if some coefficient lies outside `sub`.
  Poly restrict_to(const FieldCtx& sub) const;

  /// Length-n coefficient vector. Requires deg < n.
  Vec to_vector(std::size_t n) const;

  bool operator==(const Poly& o) const;

  std::string to_string() const;

 private:
  void normalize();

  FieldCtx field_;
  Vec c_;
};

/// Monic gcd via Euclid. Throws std::invalid_argument when both are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Coefficients reversed over deg(a). Throws for a = 0.
Poly reciprocal(const Poly& a);

/// a mod (x^n - lambda).
Poly reduce_constacyclic(const Poly& a, std::size_t n, const FieldElem& lambda);

/// a * b reduced by x^n = lambda. Requires deg a, deg b < n and lambda != 0.
Poly mul_mod_constacyclic(const Poly& a, const Poly& b, std::size_t n, const FieldElem& lambda);

/// Component-wise product of equal-length vectors.
Vec schur(const Vec& a, const Vec& b);

}  // namespace consta
