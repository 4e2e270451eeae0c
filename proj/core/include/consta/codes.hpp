#pragma once

#include <optional>
#include <string>
#include <vector>

#include "consta/cdft.hpp"
#include "consta/poly.hpp"
#include "consta/zn.hpp"

namespace consta {

/// A lambda-constacyclic code <g>, g monic and dividing x^n - lambda, together
/// with the root basis its complete generating set G is taken against.
class ConstaCode {
 public:
  const RootBasis& basis() const noexcept { return basis_; }
  const Poly& generator() const noexcept { return g_; }
  /// G = {j : g(xi^j beta) != 0}
  const ZnSet& generating_set() const noexcept { return G_; }

  std::size_t n() const noexcept { return basis_.n(); }
  std::size_t dim() const noexcept { return G_.size(); }
  const FieldElem& lambda() const noexcept { return basis_.lambda(); }
  const FieldCtx& field() const noexcept { return basis_.base(); }
  bool is_zero() const noexcept { return G_.empty(); }
  bool is_full() const noexcept { return G_.size() == n(); }

  /// Same ambient space and same generator (bases may differ).
  bool same_code(const ConstaCode& o) const;

 private:
  friend ConstaCode code_from_generator(const RootBasis&, const Poly&);
  friend ConstaCode code_from_generating_set(const RootBasis&, const ZnSet&);
  ConstaCode(RootBasis basis, Poly g, ZnSet G) : basis_(std::move(basis)), g_(std::move(g)), G_(std::move(G)) {}

  RootBasis basis_;
  Poly g_;
  ZnSet G_;
};

/// Thrown by code_from_generating_set when Z_n \ G is not closed under
/// j -> qj + t. `element` is a member of the complement whose image leaves it.
class ClosureViolation : public std::invalid_argument {
 public:
  ClosureViolation(std::size_t element, std::size_t image);
  std::size_t element;
  std::size_t image;
};

ConstaCode code_from_generator(const RootBasis& basis, const Poly& g);
ConstaCode code_from_generator(const CodeParams& params, const Poly& g);
/// Generator prod_{k not in G} (x - xi^k beta).
ConstaCode code_from_generating_set(const RootBasis& basis, const ZnSet& G);

struct DualResult {
  ZnSet set;        // -(Z_n \ G), against beta^{-1}
  ConstaCode code;  // <((x^n - lambda)/g)^*>, monic, over lambda^{-1}
};
DualResult dual_generating_set(const ConstaCode& c);

/// p(x) = sum_{i < n/v} alpha^i x^{iv}; trivial (p = 1) when v = n.
struct PatternPoly {
  std::size_t n = 1;
  std::size_t v = 1;
  FieldElem alpha;

  bool trivial() const noexcept { return v == n; }
  Poly to_poly(const FieldCtx& field) const;
  /// Pattern of the i-th Schur power: alpha replaced by alpha^i.
  PatternPoly schur_power(unsigned i) const;
  bool operator==(const PatternPoly& o) const { return n == o.n && v == o.v && alpha == o.alpha; }
};

PatternPoly trivial_pattern(const FieldCtx& field, std::size_t n);

/// Pattern polynomial from the smallest coset of G. Throws for the zero code.
PatternPoly pattern_polynomial(const ConstaCode& c);

/// The length-v code generated by g/p made monic, over x^v - alpha^{-1}. Throws for non-degenerate codes.
ConstaCode core_code(const ConstaCode& c);

/// Product via G_1 + G_2 against (xi, beta_1 beta_2).
ConstaCode schur_product_sumset(const ConstaCode& c1, const ConstaCode& c2);

/// Product via gcd({g o x^j g_2} u {x^n - lambda_1 lambda_2}) with g = g_1 s mod
/// (x^n - lambda_1). s defaults to 1 and must be coprime to (x^n - lambda_1)/g_1.
ConstaCode schur_product_gcd(const ConstaCode& c1, const ConstaCode& c2, const std::optional<Poly>& s = std::nullopt);

/// i-th Schur power via the iterated sumset iG against beta^i. i >= 1.
ConstaCode schur_power(const ConstaCode& c, unsigned i);

/// Generator of the i-th power of a degenerate code in the factored form
/// g_bar_i(x) * p^{o i}(x), made monic, with g_bar_i the generator of the
/// core's i-th power.
Poly schur_power_factored(const ConstaCode& c, unsigned i);

struct DimensionSequence {
  std::vector<std::size_t> dims;  // dim C^{o1}, ..., dim C^{or}
  unsigned regularity = 0;        // first i with dim C^{oi} = dim C^{o(i+1)}
  bool fills = false;             // final dimension is n
};
DimensionSequence dimension_sequence(const ConstaCode& c);

/// p_1 o p_2: v = lcm(v_1, v_2), alpha = alpha_1^{v/v_1} alpha_2^{v/v_2}.
PatternPoly pattern_of_product(const ConstaCode& c1, const ConstaCode& c2);

/// k_1 + k_2 > n implies the product is the full space.
struct FillBySize {
  bool applies = false;
  bool holds = true;
};
FillBySize fill_by_size(const ConstaCode& c1, const ConstaCode& c2);

/// (n-1)/(k-1) for prime n, 2v/k otherwise. Throws for k < 2.
double regularity_bound(std::size_t n, std::size_t k, std::size_t v);

struct BoundsReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t v = 0;
  bool degenerate = false;
  DimensionSequence sequence;

  FillBySize square_fill;  // 2k > n => C o C = F_q^n

  struct Regularity {
    bool applicable = false;  // k >= 2
    bool n_prime = false;
    double bound = 0.0;
    bool holds = false;  // r <= bound
  } regularity;

  struct FourierCover {
    bool applicable = false;
    double bias = 0.0;
    double value = 0.0;  // only meaningful when applicable
    std::string status;
  } fourier;
};
BoundsReport bounds_report(const ConstaCode& c);

/// All monic divisors of x^n - lambda, ordered by degree then coefficients.
std::vector<Poly> monic_divisors(const RootBasis& basis);

}  // namespace consta
