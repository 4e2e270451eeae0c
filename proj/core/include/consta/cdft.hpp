#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "consta/field.hpp"
#include "consta/poly.hpp"
#include "consta/zn.hpp"

namespace consta {

/// Ambient data of a lambda-constacyclic code of length n over F_q.
struct CodeParams {
  FieldCtx field;
  std::size_t n = 0;
  FieldElem lambda;

  std::uint64_t q = 0;
  std::uint64_t order_lambda = 0;  // multiplicative order of lambda
  std::uint64_t m1 = 0;            // ord_n(q)
  std::uint64_t m2 = 0;            // ord_{n * order_lambda}(q)

  /// Validates gcd(n, q) = 1, lambda != 0, 1 <= n <= kMaxLength.
  static CodeParams make(const FieldCtx& field, std::size_t n, const FieldElem& lambda);

  static constexpr std::size_t kMaxLength = 4096;
};

/// Roots shared by every constacyclic code of length n over a fixed F_q.
///
/// delta has order n(q-1) in F_{q^M}, M = ord_{n(q-1)}(q), and xi = delta^(q-1)
/// is the fixed primitive n-th root of unity. Because every element of F_q^*
/// has order dividing q-1, each n-th root beta of each lambda can be taken as a
/// power of delta, so all bases of one family share xi and live in one field.
class RootFamily {
 public:
  /// Memoized per (field, n).
  static std::shared_ptr<const RootFamily> get(const FieldCtx& base, std::size_t n);

  const FieldCtx& base() const noexcept { return base_; }
  const FieldCtx& splitting() const noexcept { return splitting_; }
  std::size_t n() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return q_; }
  /// Degree of the splitting field over F_q.
  unsigned splitting_degree() const noexcept { return splitting_degree_; }
  std::uint64_t delta_order() const noexcept { return delta_order_; }
  const FieldElem& delta() const noexcept { return delta_; }
  const FieldElem& xi() const noexcept { return xi_; }
  /// xi^k for any integer k.
  const FieldElem& xi_pow(std::int64_t k) const;

  RootFamily(const FieldCtx& base, std::size_t n);

 private:
  FieldCtx base_;
  FieldCtx splitting_;
  std::size_t n_;
  std::uint64_t q_;
  unsigned splitting_degree_;
  std::uint64_t delta_order_;
  FieldElem delta_;
  FieldElem xi_;
  Vec xi_powers_;
};

/// A choice beta = delta^s of an n-th root of lambda, with the Frobenius shift
/// t defined by xi^t = beta^(q-1).
class RootBasis {
 public:
  /// beta = delta^s for the smallest s >= 0 with delta^(sn) = lambda.
  static RootBasis canonical(std::shared_ptr<const RootFamily> family, const FieldElem& lambda);
  /// beta = delta^s; lambda is then beta^n.
  static RootBasis with_exponent(std::shared_ptr<const RootFamily> family, std::uint64_t s);

  /// Basis for beta^{-1} (over lambda^{-1}).
  RootBasis inverse() const;
  /// Basis for beta * other.beta (over lambda_1 lambda_2).
  RootBasis times(const RootBasis& other) const;
  /// Basis for beta^i.
  RootBasis power(unsigned i) const;

  const std::shared_ptr<const RootFamily>& family() const noexcept { return family_; }
  std::size_t n() const noexcept { return family_->n(); }
  std::uint64_t q() const noexcept { return family_->q(); }
  const FieldCtx& base() const noexcept { return family_->base(); }
  const FieldCtx& splitting() const noexcept { return family_->splitting(); }
  const FieldElem& delta() const noexcept { return family_->delta(); }
  const FieldElem& xi() const noexcept { return family_->xi(); }
  const FieldElem& beta() const noexcept { return beta_; }
  const FieldElem& lambda() const noexcept { return lambda_; }
  std::uint64_t exponent() const noexcept { return s_; }
  std::size_t t() const noexcept { return t_; }
  /// Evaluation points xi^j * beta, j = 0..n-1.
  const Vec& points() const noexcept { return points_; }

  CodeParams params() const;

  bool operator==(const RootBasis& o) const { return family_ == o.family_ && s_ == o.s_; }

 private:
  RootBasis(std::shared_ptr<const RootFamily> family, std::uint64_t s);

  std::shared_ptr<const RootFamily> family_;
  std::uint64_t s_ = 0;
  FieldElem beta_;
  FieldElem lambda_;
  std::size_t t_ = 0;
  Vec points_;
};

/// Canonical basis for the given parameters.
RootBasis build_basis(const CodeParams& params);

struct Spectrum {
  Vec values;
  RootBasis basis;
};

/// A_j = sum_i a_i (xi^j beta)^i. Entries of `a` may lie in F_q or in the
/// splitting field.
Spectrum forward(const Vec& a, const RootBasis& basis);
/// a_i = (n beta^i)^{-1} sum_j A_j xi^{-ij}, over the splitting field.
Vec inverse(const Spectrum& spectrum);

/// True iff A_j^q = A_{qj+t} for every j.
bool is_rational_spectrum(const Spectrum& spectrum);

/// Orbits of j -> qj + t on Z_n, ordered by least element; each orbit is
/// listed in iteration order starting from its least element.
std::vector<std::vector<std::size_t>> affine_orbits(const RootBasis& basis);

/// One monic factor over F_q per affine orbit: prod_{k in K} (x - xi^k beta).
/// Throws std::logic_error if a coefficient falls outside F_q.
std::vector<Poly> factor_xn_minus_lambda(const RootBasis& basis);

/// {j : a(xi^j beta) != 0}
ZnSet spectral_support(const Vec& a, const RootBasis& basis);
ZnSet spectral_support(const Poly& a, const RootBasis& basis);

}  // namespace consta
