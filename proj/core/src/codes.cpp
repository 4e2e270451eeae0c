#include "consta/codes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace consta {

namespace {

void require_compatible(const ConstaCode& a, const ConstaCode& b) {
  if (a.n() != b.n()) throw std::invalid_argument("codes have different lengths");
  if (!(a.field() == b.field())) throw std::invalid_argument("codes are over different fields");
  if (a.basis().family() != b.basis().family())
    throw std::invalid_argument("codes do not share a root family (xi differs)");
}

}  // namespace

ClosureViolation::ClosureViolation(std::size_t e, std::size_t img)
    : std::invalid_argument("complement of the generating set is not closed under j -> qj + t: " + std::to_string(e) +
                            " maps to " + std::to_string(img)),
      element(e),
      image(img) {}

bool ConstaCode::same_code(const ConstaCode& o) const {
  return n() == o.n() && lambda() == o.lambda() && g_ == o.g_;
}

ConstaCode code_from_generator(const RootBasis& basis, const Poly& g) {
  const FieldCtx& f = basis.base();
  Poly gb;
  try {
    gb = g.restrict_to(f);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("generator has coefficients outside " + f.describe());
  }
  if (!gb.is_monic()) throw std::invalid_argument("generator must be monic");
  const Poly modulus = Poly::x_n_minus(f, basis.n(), basis.lambda());
  if (!gb.divides(modulus)) throw std::invalid_argument("generator does not divide x^n - lambda");
  ZnSet G = spectral_support(gb, basis);
  if (G.size() != basis.n() - static_cast<std::size_t>(gb.degree()))
    throw std::logic_error("generating set size disagrees with n - deg g");
  return ConstaCode(basis, std::move(gb), std::move(G));
}

ConstaCode code_from_generator(const CodeParams& params, const Poly& g) {
  return code_from_generator(build_basis(params), g);
}

ConstaCode code_from_generating_set(const RootBasis& basis, const ZnSet& G) {
  const std::size_t n = basis.n();
  if (G.modulus() != n) throw std::invalid_argument("generating set modulus differs from n");
  const ZnSet zeros = G.complement();
  const std::size_t qm = static_cast<std::size_t>(basis.q() % n);
  for (auto k : zeros.elements()) {
    const std::size_t img = (qm * k + basis.t()) % n;
    if (!zeros.contains(static_cast<std::int64_t>(img))) throw ClosureViolation(k, img);
  }
  const FieldCtx& ext = basis.splitting();
  Poly g = Poly::constant(ext, ext.one());
  for (auto k : zeros.elements()) g = g * Poly::linear(ext, basis.points()[k]);
  Poly gb;
  try {
    gb = g.restrict_to(basis.base());
  } catch (const std::domain_error&) {
    throw std::logic_error("generator built from a closed set left the base field");
  }
  return ConstaCode(basis, std::move(gb), G);
}

DualResult dual_generating_set(const ConstaCode& c) {
  ZnSet set = c.generating_set().complement().negated();
  const Poly h = Poly::x_n_minus(c.field(), c.n(), c.lambda()) / c.generator();
  ConstaCode dual = code_from_generator(c.basis().inverse(), reciprocal(h).monic());
  return DualResult{std::move(set), std::move(dual)};
}

// ---------------------------------------------------------------------------
// patterns

Poly PatternPoly::to_poly(const FieldCtx& field) const {
  Vec v(n - this->v + 1, field.zero());
  FieldElem a = field.one();
  for (std::size_t i = 0; i < n / this->v; ++i) {
    v[i * this->v] = a;
    a = a * field.embed(alpha);
  }
  return Poly(field, v);
}

PatternPoly PatternPoly::schur_power(unsigned i) const { return PatternPoly{n, v, alpha.pow(i)}; }

PatternPoly trivial_pattern(const FieldCtx& field, std::size_t n) { return PatternPoly{n, n, field.one()}; }

PatternPoly pattern_polynomial(const ConstaCode& c) {
  if (c.is_zero()) throw std::invalid_argument("pattern_polynomial: zero code");
  const std::size_t n = c.n();
  const ZnSet& A = c.generating_set();
  const std::size_t lo = A.min();
  std::size_t d = n;
  for (auto a : A.elements()) d = std::gcd(d, a - lo);
  if (d == 1) return trivial_pattern(c.field(), n);
  const std::size_t v = n / d;
  const Poly& g = c.generator();
  return PatternPoly{n, v, g.coeff(v) / g.coeff(0)};
}

ConstaCode core_code(const ConstaCode& c) {
  const PatternPoly pat = pattern_polynomial(c);
  if (pat.trivial()) throw std::invalid_argument("core_code: code is non-degenerate");
  const FieldCtx& f = c.field();
  const Poly p = pat.to_poly(f);
  auto [gbar, rem] = divmod(c.generator(), p);
  if (!rem.is_zero()) throw std::logic_error("pattern polynomial does not divide the generator");
  // x^n - lambda = p(x) * (x^v - lambda')
  auto [cof_raw, rem2] = divmod(Poly::x_n_minus(f, c.n(), c.lambda()), p);
  const Poly cof = cof_raw.monic();
  if (!rem2.is_zero() || cof.degree() != static_cast<int>(pat.v))
    throw std::logic_error("pattern polynomial does not divide x^n - lambda");
  for (std::size_t i = 1; i < pat.v; ++i)
    if (!cof.coeff(i).is_zero()) throw std::logic_error("cofactor of the pattern is not of the form x^v - c");
  const FieldElem core_lambda = -cof.coeff(0);
  return code_from_generator(CodeParams::make(f, pat.v, core_lambda), gbar.monic());
}

// ---------------------------------------------------------------------------
// products and powers

ConstaCode schur_product_sumset(const ConstaCode& c1, const ConstaCode& c2) {
  require_compatible(c1, c2);
  return code_from_generating_set(c1.basis().times(c2.basis()), sumset(c1.generating_set(), c2.generating_set()));
}

ConstaCode schur_product_gcd(const ConstaCode& c1, const ConstaCode& c2, const std::optional<Poly>& s) {
  require_compatible(c1, c2);
  const FieldCtx& f = c1.field();
  const std::size_t n = c1.n();
  const Poly mult = s ? s->restrict_to(f) : Poly::constant(f, f.one());
  const Poly check = Poly::x_n_minus(f, n, c1.lambda()) / c1.generator();
  if (mult.is_zero() || poly_gcd(mult, check).degree() != 0)
    throw std::invalid_argument("schur_product_gcd: s must be coprime to (x^n - lambda_1)/g_1");

  const Vec g = reduce_constacyclic(c1.generator() * mult, n, c1.lambda()).to_vector(n);
  const FieldElem lambda3 = c1.lambda() * c2.lambda();
  Poly acc = Poly::x_n_minus(f, n, lambda3);
  const Poly& g2 = c2.generator();
  const std::size_t k2 = c2.dim();
  for (std::size_t j = 0; j < k2; ++j) {
    const Poly term(f, schur(g, g2.shifted(j).to_vector(n)));
    acc = poly_gcd(acc, term);
    if (acc.degree() == 0) break;
  }
  return code_from_generator(c1.basis().times(c2.basis()), acc);
}

ConstaCode schur_power(const ConstaCode& c, unsigned i) {
  if (i == 0) throw std::invalid_argument("schur_power: exponent must be at least 1");
  return code_from_generating_set(c.basis().power(i), iterated_sumset(c.generating_set(), i));
}

Poly schur_power_factored(const ConstaCode& c, unsigned i) {
  if (i == 0) throw std::invalid_argument("schur_power_factored: exponent must be at least 1");
  const PatternPoly pat = pattern_polynomial(c);
  if (pat.trivial()) throw std::invalid_argument("schur_power_factored: code is non-degenerate");
  const ConstaCode core = core_code(c);
  const Poly core_power = schur_power(core, i).generator();
  return (core_power * pat.schur_power(i).to_poly(c.field())).monic();
}

DimensionSequence dimension_sequence(const ConstaCode& c) {
  if (c.is_zero()) throw std::invalid_argument("dimension_sequence: zero code");
  DimensionSequence out;
  ZnSet cur = c.generating_set();
  out.dims.push_back(cur.size());
  for (;;) {
    ZnSet next = sumset(cur, c.generating_set());
    if (next.size() == cur.size()) break;
    out.dims.push_back(next.size());
    cur = std::move(next);
  }
  out.regularity = static_cast<unsigned>(out.dims.size());
  out.fills = out.dims.back() == c.n();
  return out;
}

PatternPoly pattern_of_product(const ConstaCode& c1, const ConstaCode& c2) {
  require_compatible(c1, c2);
  const PatternPoly p1 = pattern_polynomial(c1);
  const PatternPoly p2 = pattern_polynomial(c2);
  const std::size_t n = c1.n();
  if (p1.trivial() || p2.trivial()) return trivial_pattern(c1.field(), n);
  const std::size_t v = std::lcm(p1.v, p2.v);
  if (v == n) return trivial_pattern(c1.field(), n);
  return PatternPoly{n, v, p1.alpha.pow(v / p1.v) * p2.alpha.pow(v / p2.v)};
}

FillBySize fill_by_size(const ConstaCode& c1, const ConstaCode& c2) {
  FillBySize out;
  out.applies = c1.dim() + c2.dim() > c1.n();
  if (out.applies) out.holds = schur_product_sumset(c1, c2).is_full();
  return out;
}

double regularity_bound(std::size_t n, std::size_t k, std::size_t v) {
  if (k < 2) throw std::invalid_argument("regularity bound needs k >= 2");
  if (is_prime(n)) return static_cast<double>(n - 1) / static_cast<double>(k - 1);
  return 2.0 * static_cast<double>(v) / static_cast<double>(k);
}

BoundsReport bounds_report(const ConstaCode& c) {
  if (c.is_zero()) throw std::invalid_argument("bounds_report: zero code");
  BoundsReport r;
  r.n = c.n();
  r.k = c.dim();
  const PatternPoly pat = pattern_polynomial(c);
  r.v = pat.v;
  r.degenerate = !pat.trivial();
  r.sequence = dimension_sequence(c);
  r.square_fill = fill_by_size(c, c);

  if (r.k >= 2) {
    r.regularity.applicable = true;
    r.regularity.n_prime = is_prime(r.n);
    r.regularity.bound = regularity_bound(r.n, r.k, r.v);
    r.regularity.holds = static_cast<double>(r.sequence.regularity) <= r.regularity.bound;
  }

  auto& fc = r.fourier;
  fc.bias = fourier_bias(c.generating_set());
  if (r.degenerate) {
    fc.status = "not applicable: code is degenerate";
  } else if (fc.bias == 0.0) {
    fc.status = "not applicable: Fourier bias is zero";
  } else {
    const double log_ratio = std::log(static_cast<double>(r.n) / static_cast<double>(r.k));
    const double denom = std::log(fc.bias) - log_ratio;
    if (denom <= 0.0) {
      fc.status = "not applicable: log(bias) - log(n/k) <= 0";
    } else {
      fc.applicable = true;
      fc.value = std::max(3.0, (2.0 * std::log(fc.bias) - log_ratio) / denom);
      fc.status = "as-printed";
    }
  }
  return r;
}

std::vector<Poly> monic_divisors(const RootBasis& basis) {
  const auto factors = factor_xn_minus_lambda(basis);
  if (factors.size() > 20) throw std::invalid_argument("monic_divisors: too many irreducible factors");
  const FieldCtx& f = basis.base();
  std::vector<Poly> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << factors.size()); ++mask) {
    Poly d = Poly::constant(f, f.one());
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (mask & (std::size_t{1} << i)) d = d * factors[i];
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end(),
                                        [](const FieldElem& x, const FieldElem& y) { return x.index() < y.index(); });
  });
  return out;
}

}  // namespace consta
