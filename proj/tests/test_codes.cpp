#include <doctest.h>

#include "consta/codes.hpp"
#include "consta/oracle.hpp"
#include "consta/verify.hpp"
#include "support.hpp"

using namespace consta;

namespace {

const FieldCtx& F(std::uint64_t p) {
  static std::map<std::uint64_t, FieldCtx> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, build_field(p, {1})).first;
  return it->second;
}

ConstaCode code(std::uint64_t p, std::size_t n, std::int64_t lambda, std::vector<std::int64_t> g) {
  const FieldCtx& f = F(p);
  return code_from_generator(CodeParams::make(f, n, f.from_int(lambda)), Poly::from_ints(f, g));
}

Poly P(std::uint64_t p, std::vector<std::int64_t> c) { return Poly::from_ints(F(p), c); }

}  // namespace

TEST_CASE("codes from generators") {
  const auto c = code(3, 4, 2, {2, 1, 1});
  CHECK(c.generating_set() == ZnSet(4, {2, 3}));
  CHECK(c.dim() == 2);
  CHECK(code(3, 4, 2, {1}).is_full());
  CHECK(code(3, 4, 2, {1, 0, 0, 0, 1}).is_zero());
  CHECK_THROWS_AS(code(3, 4, 2, {1, 1}), std::invalid_argument);     // x + 1 does not divide x^4 - 2
  CHECK_THROWS_AS(code(3, 4, 2, {1, 2, 2}), std::invalid_argument);  // not monic
}

TEST_CASE("codes from generating sets") {
  const auto c = code(3, 4, 2, {2, 1, 1});
  CHECK(code_from_generating_set(c.basis(), ZnSet(4, {2, 3})).generator() == P(3, {2, 1, 1}));
  CHECK(code_from_generating_set(c.basis(), ZnSet::full(4)).generator() == P(3, {1}));
  try {
    code_from_generating_set(c.basis(), ZnSet(4, {0, 1, 2}));
    FAIL("closure violation not detected");
  } catch (const ClosureViolation& e) {
    CHECK(e.element == 3);
    CHECK(e.image == 2);
  }
}

TEST_CASE("duals") {
  const auto ham = code(2, 7, 1, {1, 1, 0, 1});
  CHECK(ham.generating_set() == ZnSet(7, {0, 3, 5, 6}));
  const DualResult d = dual_generating_set(ham);
  CHECK(d.set == ZnSet(7, {3, 5, 6}));
  CHECK(d.code.dim() == 3);
  CHECK(d.code.generating_set() == d.set);
  CHECK(oracle_dual(ham).basis.same_span(generator_matrix(F(2), 7, d.code.generator())));

  CHECK(dual_generating_set(code(2, 7, 1, {1})).set.empty());
  CHECK(dual_generating_set(code(2, 7, 1, {1, 0, 0, 0, 0, 0, 0, 1})).set == ZnSet::full(7));

  const auto neg = code(3, 4, 2, {2, 1, 1});
  const DualResult dn = dual_generating_set(neg);
  CHECK(dn.code.lambda() == F(3).from_int(2).inv());
  CHECK(dn.code.generating_set() == dn.set);
}

TEST_CASE("pattern polynomials") {
  const auto deg = code(5, 4, 1, {1, 0, 1});
  CHECK(deg.generating_set() == ZnSet(4, {0, 2}));
  const PatternPoly p = pattern_polynomial(deg);
  CHECK(p.v == 2);
  CHECK(p.alpha.is_one());
  CHECK(p.to_poly(F(5)) == P(5, {1, 0, 1}));
  CHECK(pattern_polynomial(code(3, 4, 2, {2, 1, 1})).trivial());
  CHECK(pattern_polynomial(code(3, 4, 2, {1})).trivial());
  CHECK_THROWS_AS(pattern_polynomial(code(3, 4, 2, {1, 0, 0, 0, 1})), std::invalid_argument);
}

TEST_CASE("core codes") {
  const auto core = core_code(code(5, 4, 1, {1, 0, 1}));
  CHECK(core.n() == 2);
  CHECK(core.is_full());
  // (1 + x^4)(x - 1) over x^8 - 1: core <x - 1> of length 4
  const auto c = code(5, 8, 1, {-1, 1, 0, 0, -1, 1});
  const PatternPoly pat = pattern_polynomial(c);
  CHECK(pat.v == 4);
  CHECK(pat.alpha.is_one());
  const auto cc = core_code(c);
  CHECK(cc.n() == 4);
  CHECK(cc.generator() == P(5, {-1, 1}));
  CHECK(cc.dim() == 3);
  CHECK(cc.lambda() == pat.alpha.inv());
  CHECK_THROWS_AS(core_code(code(3, 4, 2, {2, 1, 1})), std::invalid_argument);
}

TEST_CASE("a code generated by its own pattern has a full core") {
  // 1 + 2x^2 + 4x^4 divides x^6 - 2 over F_5
  const PatternPoly pat{6, 2, F(5).from_int(2)};
  const auto c = code_from_generator(CodeParams::make(F(5), 6, F(5).from_int(2)), pat.to_poly(F(5)).monic());
  CHECK(pattern_polynomial(c) == pat);
  const auto core = core_code(c);
  CHECK(core.is_full());
  CHECK(core.lambda() == F(5).from_int(2).inv());
}

TEST_CASE("schur products by sumset and gcd") {
  const auto c = code(3, 4, 2, {2, 1, 1});
  const auto sq = schur_product_sumset(c, c);
  CHECK(sq.generating_set() == ZnSet(4, {0, 1, 2}));
  CHECK(sq.generator() == P(3, {-1, 1}));
  CHECK(sq.lambda().is_one());
  CHECK(schur_product_gcd(c, c).generator() == sq.generator());

  const auto ham = code(2, 7, 1, {1, 1, 0, 1});
  CHECK(schur_product_sumset(ham, ham).is_full());
  CHECK(schur_product_gcd(ham, ham).is_full());

  const auto full = code(3, 4, 1, {1});
  CHECK(schur_product_sumset(c, full).generator() == P(3, {1}));
  CHECK(schur_product_gcd(c, full).generator() == P(3, {1}));

  const auto zero = code(3, 4, 2, {1, 0, 0, 0, 1});
  CHECK(schur_product_gcd(zero, c).is_zero());
  CHECK(schur_product_gcd(zero, c).generator() == Poly::x_n_minus(F(3), 4, F(3).one()));
  CHECK(schur_product_sumset(zero, c).is_zero());

  CHECK_THROWS_AS(schur_product_sumset(c, code(3, 5, 1, {1})), std::invalid_argument);
}

TEST_CASE("gcd method with a multiplier") {
  const auto c = code(3, 8, 1, {2, 1});  // x - 1
  const Poly check = Poly::x_n_minus(F(3), 8, F(3).one()) / c.generator();
  for (const auto& s : {P(3, {1, 1}), P(3, {2, 0, 1}), P(3, {1, 1, 1, 1})}) {
    if (poly_gcd(s, check).degree() != 0) {
      CHECK_THROWS_AS(schur_product_gcd(c, c, s), std::invalid_argument);
      continue;
    }
    CHECK(schur_product_gcd(c, c, s).generator() == schur_product_sumset(c, c).generator());
  }
  // x + 1 shares the root -1 with the check polynomial
  CHECK_THROWS_AS(schur_product_gcd(c, c, P(3, {1, 1})), std::invalid_argument);
}

TEST_CASE("schur powers and dimension sequences") {
  const auto deg = code(5, 4, 1, {1, 0, 1});
  for (unsigned i = 1; i <= 4; ++i) CHECK(schur_power(deg, i).generator() == deg.generator());
  const auto c = code(3, 4, 2, {2, 1, 1});
  CHECK(schur_power(c, 1).generator() == c.generator());
  CHECK(schur_power(c, 3).is_full());
  CHECK_THROWS_AS(schur_power(c, 0), std::invalid_argument);

  const DimensionSequence s = dimension_sequence(c);
  CHECK(s.dims == std::vector<std::size_t>{2, 3, 4});
  CHECK(s.regularity == 3);
  CHECK(s.fills);
  const DimensionSequence full = dimension_sequence(code(3, 4, 2, {1}));
  CHECK(full.dims == std::vector<std::size_t>{4});
  CHECK(full.regularity == 1);
  const DimensionSequence d = dimension_sequence(deg);
  CHECK(d.dims == std::vector<std::size_t>{2});
  CHECK(d.regularity == 1);
  CHECK_FALSE(d.fills);
}

TEST_CASE("factored powers of degenerate codes") {
  const auto c = code(5, 8, 1, {-1, 1, 0, 0, -1, 1});
  for (unsigned i = 1; i <= 4; ++i) CHECK(schur_power_factored(c, i) == schur_power(c, i).generator());
  CHECK_THROWS_AS(schur_power_factored(code(3, 4, 2, {2, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("patterns of products") {
  const auto deg = code(5, 4, 1, {1, 0, 1});
  const PatternPoly p = pattern_of_product(deg, deg);
  CHECK(p.v == 2);
  CHECK(p.alpha.is_one());
  CHECK(pattern_of_product(deg, code(5, 4, 1, {1})).trivial());

  const FieldCtx& f = F(5);
  // p divides x^n - alpha^{-n/v}
  const PatternPoly p1{8, 2, f.from_int(2)}, p2{8, 4, f.from_int(3)};
  const auto c1 = code_from_generator(CodeParams::make(f, 8, f.one()), p1.to_poly(f).monic());
  const auto c2 = code_from_generator(CodeParams::make(f, 8, f.from_int(4)), p2.to_poly(f).monic());
  CHECK(pattern_polynomial(c1) == p1);
  CHECK(pattern_polynomial(c2) == p2);
  const PatternPoly p3 = pattern_of_product(c1, c2);
  CHECK(p3.v == 4);
  CHECK(p3.alpha == f.from_int(2));  // 2^2 * 3
  CHECK(pattern_polynomial(schur_product_sumset(c1, c2)) == p3);
}

TEST_CASE("bounds report") {
  const BoundsReport r = bounds_report(code(3, 4, 2, {2, 1, 1}));
  CHECK(r.k == 2);
  CHECK(r.v == 4);
  CHECK_FALSE(r.degenerate);
  CHECK(r.regularity.applicable);
  CHECK_FALSE(r.regularity.n_prime);
  CHECK(r.regularity.bound == doctest::Approx(4.0));
  CHECK(r.regularity.holds);
  CHECK_FALSE(r.square_fill.applies);

  const BoundsReport h = bounds_report(code(2, 7, 1, {1, 1, 0, 1}));
  CHECK(h.regularity.n_prime);
  CHECK(h.regularity.bound == doctest::Approx(2.0));
  CHECK(h.sequence.regularity == 2);
  CHECK(h.regularity.holds);
  CHECK(h.square_fill.applies);
  CHECK(h.square_fill.holds);

  // k1 + k2 = n: no conclusion is drawn
  const auto ham = code(2, 7, 1, {1, 1, 0, 1});
  const auto c3 = code(2, 7, 1, {1, 0, 1, 1, 1});  // (x + 1)(x^3 + x + 1), k = 3
  CHECK(c3.dim() == 3);
  CHECK_FALSE(fill_by_size(ham, c3).applies);

  CHECK_THROWS_AS(regularity_bound(7, 1, 7), std::invalid_argument);
  CHECK_THROWS_AS(bounds_report(code(2, 7, 1, {1, 0, 0, 0, 0, 0, 0, 1})), std::invalid_argument);

  // the fourier cover estimate never applies: the bias is at most k/n
  CHECK_FALSE(r.fourier.applicable);
  CHECK(bounds_report(code(5, 4, 1, {1, 0, 1})).fourier.status == "not applicable: code is degenerate");
}

TEST_CASE("printed regularity bound is exceeded for prime n and large k") {
  // <x + 1> over F_2 of length 7: k = 6, r = 2, (n-1)/(k-1) = 1.2
  const BoundsReport r = bounds_report(code(2, 7, 1, {1, 1}));
  CHECK(r.k == 6);
  CHECK(r.sequence.regularity == 2);
  CHECK(r.regularity.bound == doctest::Approx(1.2));
  CHECK_FALSE(r.regularity.holds);
}

TEST_CASE("monic divisors") {
  const RootBasis b = build_basis(CodeParams::make(F(2), 7, F(2).one()));
  const auto divs = monic_divisors(b);
  CHECK(divs.size() == 8);
  CHECK(divs.front() == P(2, {1}));
  CHECK(divs.back() == Poly::x_n_minus(F(2), 7, F(2).one()));
  for (const auto& d : divs) CHECK(d.divides(Poly::x_n_minus(F(2), 7, F(2).one())));
}

TEST_CASE("verification grid") {
  VerifyOptions opt;
  opt.q_values = {2, 3, 4};
  opt.n_max = 7;
  const VerifyReport rep = run_verification(opt);
  CHECK(rep.pairs_checked > 0);
  for (const auto& [name, t] : rep.checks) {
    CAPTURE(name);
    CHECK(t.checked > 0);
    if (name != "code.regularity_bound") CHECK(t.failed == 0);
  }
  opt.inject_fault = true;
  CHECK(run_verification(opt).checks.at("product.sumset_equals_gcd").failed == 1);

  VerifyOptions tiny;
  tiny.n_max = 1;
  CHECK(run_verification(tiny).ok());

  VerifyOptions big;
  big.n_max = 40;
  CHECK_THROWS_AS(run_verification(big), std::invalid_argument);
  big.n_max = 5;
  big.q_values = {6};
  CHECK_THROWS_AS(run_verification(big), std::invalid_argument);
}
