#include <doctest.h>

#include "consta/poly.hpp"
#include "support.hpp"

using namespace consta;
using namespace consta::testing;

namespace {

Poly random_poly(const FieldCtx& f, int deg) { return Poly(f, random_vec(f, static_cast<std::size_t>(deg + 1))); }

}  // namespace

TEST_CASE("construction normalizes") {
  const FieldCtx f = build_field(3, {1});
  CHECK(Poly::from_ints(f, {1, 2, 0, 3}).degree() == 1);
  CHECK(Poly::from_ints(f, {0, 0}).is_zero());
  CHECK(Poly(f).degree() == Poly::kZeroDegree);
  CHECK(Poly::from_ints(f, {-1}) == Poly::from_ints(f, {2}));
  CHECK(Poly::x_n_minus(f, 4, f.from_int(2)) == Poly::from_ints(f, {1, 0, 0, 0, 1}));
  CHECK(Poly::linear(f, f.from_int(1)) == Poly::from_ints(f, {2, 1}));
}

TEST_CASE("division identity") {
  for (std::uint64_t p : {2, 3, 7}) {
    const FieldCtx f = build_field(p, {1});
    for (int i = 0; i < 100; ++i) {
      const Poly a = random_poly(f, 9), b = random_poly(f, 4);
      if (b.is_zero()) continue;
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
  const FieldCtx f = build_field(3, {1});
  CHECK_THROWS_AS(divmod(Poly::from_ints(f, {1}), Poly(f)), std::domain_error);
}

TEST_CASE("gcd") {
  const FieldCtx f = build_field(3, {1});
  // gcd(x^2 + x + 1, 2x + x^2, x^4 - 1) = x + 2
  const Poly g = poly_gcd(poly_gcd(Poly::from_ints(f, {1, 1, 1}), Poly::from_ints(f, {0, 2, 1})),
                          Poly::x_n_minus(f, 4, f.one()));
  CHECK(g == Poly::from_ints(f, {2, 1}));
  for (int i = 0; i < 100; ++i) {
    const Poly c = random_poly(f, 2), a = random_poly(f, 4) * c, b = random_poly(f, 3) * c;
    if (a.is_zero() && b.is_zero()) continue;
    const Poly d = poly_gcd(a, b);
    CHECK(d.is_monic());
    CHECK(d.divides(a));
    CHECK(d.divides(b));
    if (!c.is_zero()) CHECK(d.degree() >= c.degree());
  }
  CHECK(poly_gcd(Poly::from_ints(f, {0, 2}), Poly(f)) == Poly::from_ints(f, {0, 1}));
  CHECK(poly_gcd(Poly::from_ints(f, {1, 2, 2}), Poly::from_ints(f, {1})) == Poly::from_ints(f, {1}));
  CHECK_THROWS_AS(poly_gcd(Poly(f), Poly(f)), std::invalid_argument);
}

TEST_CASE("reciprocal") {
  const FieldCtx f = build_field(2, {1});
  CHECK(reciprocal(Poly::from_ints(f, {1, 1, 0, 1})) == Poly::from_ints(f, {1, 0, 1, 1}));
  CHECK(reciprocal(Poly::from_ints(f, {1})) == Poly::from_ints(f, {1}));
  const FieldCtx f3 = build_field(3, {1});
  CHECK(reciprocal(Poly::from_ints(f3, {1, 2, 0, 1})) == Poly::from_ints(f3, {1, 0, 2, 1}));
  CHECK_THROWS_AS(reciprocal(Poly(f)), std::invalid_argument);
}

TEST_CASE("constacyclic multiplication") {
  const FieldCtx f = build_field(3, {1});
  const FieldElem lam = f.from_int(2);
  CHECK(mul_mod_constacyclic(Poly::from_ints(f, {0, 1}), Poly::from_ints(f, {0, 0, 0, 1}), 4, lam) ==
        Poly::from_ints(f, {2}));
  CHECK(mul_mod_constacyclic(Poly::from_ints(f, {2, 1, 1}), Poly::from_ints(f, {0, 1}), 4, lam) ==
        Poly::from_ints(f, {0, 2, 1, 1}));
  for (int i = 0; i < 100; ++i) {
    const Poly a = random_poly(f, 3), b = random_poly(f, 3);
    const Poly direct = (a * b) % Poly::x_n_minus(f, 4, lam);
    CHECK(mul_mod_constacyclic(a, b, 4, lam) == direct);
    CHECK(reduce_constacyclic(a * b, 4, lam) == direct);
  }
  CHECK_THROWS_AS(mul_mod_constacyclic(Poly::from_ints(f, {0, 0, 0, 0, 1}), Poly::from_ints(f, {1}), 4, lam),
                  std::invalid_argument);
  CHECK_THROWS_AS(mul_mod_constacyclic(Poly::from_ints(f, {1}), Poly::from_ints(f, {1}), 4, f.zero()),
                  std::invalid_argument);
}

TEST_CASE("schur product of vectors") {
  const FieldCtx f = build_field(3, {1});
  const Vec a = Poly::from_ints(f, {2, 1, 1}).to_vector(4);
  CHECK(Poly(f, schur(a, a)) == Poly::from_ints(f, {1, 1, 1}));
  CHECK(schur(a, Vec(4, f.one())) == a);
  CHECK(Poly(f, schur(a, Vec(4, f.zero()))).is_zero());
  CHECK_THROWS_AS(schur(a, Vec(3, f.zero())), std::invalid_argument);
}

TEST_CASE("evaluation in an extension") {
  const FieldCtx f3 = build_field(3, {1});
  const FieldCtx f9 = build_field(3, {2});
  // x^2 + 1 vanishes at y
  const Poly a = Poly::from_ints(f3, {1, 0, 1});
  CHECK(a.eval(f9.make(3)).is_zero());
  CHECK(a.eval(f3.from_int(1)) == f3.from_int(2));
  const Poly b = Poly::linear(f9, f9.make(3)) * Poly::linear(f9, f9.make(6));
  CHECK(b.restrict_to(f3) == a);
  CHECK_THROWS_AS(Poly::linear(f9, f9.make(3)).restrict_to(f3), std::domain_error);
}
