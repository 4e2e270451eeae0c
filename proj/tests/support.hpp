#pragma once

// Brute-force references shared by the unit tests. None of these use the
// library's own arithmetic beyond element construction.

#include <cstdint>
#include <random>
#include <vector>

#include "consta/field.hpp"
#include "consta/poly.hpp"

namespace consta::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20241015);
  return g;
}

inline FieldElem random_elem(const FieldCtx& f) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.cardinality() - 1);
  return f.make(d(rng()));
}

inline FieldElem random_nonzero(const FieldCtx& f) {
  std::uniform_int_distribution<std::uint64_t> d(1, f.cardinality() - 1);
  return f.make(d(rng()));
}

inline Vec random_vec(const FieldCtx& f, std::size_t n) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_elem(f));
  return v;
}

// Schoolbook product in F_p[y]/(m(y)) on digit vectors, for a one-level tower.
inline std::uint64_t naive_mul(const FieldCtx& f, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t p = f.characteristic();
  const auto& m = f.moduli()[0];  // monic, constant first
  const std::size_t d = m.size() - 1;
  std::vector<std::uint64_t> x(d), y(d), z(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  for (std::size_t k = 2 * d; k-- > d;) {
    const std::uint64_t c = z[k];
    if (!c) continue;
    for (std::size_t j = 0; j <= d; ++j) z[k - d + j] = (z[k - d + j] + (p - c) * m[j]) % p;
  }
  std::uint64_t out = 0;
  for (std::size_t i = d; i-- > 0;) out = out * p + z[i];
  return out;
}

inline std::uint64_t naive_order(const FieldCtx& f, std::uint64_t a) {
  std::uint64_t cur = a, e = 1;
  while (cur != 1) {
    cur = naive_mul(f, cur, a);
    ++e;
  }
  return e;
}

// Every monic polynomial of the given degree over f.
inline std::vector<Poly> all_monic(const FieldCtx& f, int degree) {
  std::vector<Poly> out;
  const std::uint64_t q = f.cardinality();
  std::uint64_t total = 1;
  for (int i = 0; i < degree; ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vec c;
    std::uint64_t r = code;
    for (int i = 0; i < degree; ++i, r /= q) c.push_back(f.make(r % q));
    c.push_back(f.one());
    out.emplace_back(f, c);
  }
  return out;
}

// No monic factor of degree 1..deg/2.
inline bool brute_irreducible(const Poly& a) {
  for (int d = 1; 2 * d <= a.degree(); ++d)
    for (const auto& m : all_monic(a.field(), d))
      if (m.divides(a)) return false;
  return a.degree() >= 1;
}

}  // namespace consta::testing
