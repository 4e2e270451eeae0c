#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "consta/zn.hpp"
#include "support.hpp"

using namespace consta;

namespace {

ZnSet random_set(std::size_t n) {
  std::vector<std::int64_t> e;
  for (std::size_t i = 0; i < n; ++i)
    if (testing::rng()() % 3 == 0) e.push_back(static_cast<std::int64_t>(i));
  return ZnSet(n, e);
}

ZnSet brute_sumset(const ZnSet& a, const ZnSet& b) {
  std::vector<std::int64_t> e;
  for (auto x : a.elements())
    for (auto y : b.elements()) e.push_back(static_cast<std::int64_t>(x + y));
  return ZnSet(a.modulus(), e);
}

// Least coset a + H of a subgroup H containing A, by trying every subgroup.
ZnSet brute_smallest_coset(const ZnSet& a) {
  const std::size_t n = a.modulus();
  ZnSet best = ZnSet::full(n);
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const ZnSet h = ZnSet::generated(n, static_cast<std::int64_t>(d));
    const ZnSet c = h.translated(static_cast<std::int64_t>(a.min()));
    bool covers = true;
    for (auto x : a.elements()) covers = covers && c.contains(static_cast<std::int64_t>(x));
    if (covers && c.size() < best.size()) best = c;
  }
  return best;
}

}  // namespace

TEST_CASE("sumset examples") {
  CHECK(sumset(ZnSet(7, {0, 3, 5, 6}), ZnSet(7, {0, 3, 5, 6})) == ZnSet::full(7));
  CHECK(sumset(ZnSet(5, {0}), ZnSet(5, {0})) == ZnSet(5, {0}));
  CHECK(sumset(ZnSet(6, {1, 4}), ZnSet(6, {0})) == ZnSet(6, {1, 4}));
  CHECK(iterated_sumset(ZnSet(4, {2, 3}), 2) == ZnSet(4, {0, 1, 2}));
  CHECK(iterated_sumset(ZnSet(4, {2, 3}), 3) == ZnSet::full(4));
  CHECK(iterated_sumset(ZnSet(9, {2, 5}), 1) == ZnSet(9, {2, 5}));
  CHECK_THROWS_AS(sumset(ZnSet(4, {1}), ZnSet(5, {1})), std::invalid_argument);
  CHECK_THROWS_AS(iterated_sumset(ZnSet(4, {1}), 0), std::invalid_argument);
}

TEST_CASE("sumset matches pairwise enumeration") {
  for (std::size_t n = 1; n <= 16; ++n)
    for (int t = 0; t < 20; ++t) {
      const ZnSet a = random_set(n), b = random_set(n);
      CHECK(sumset(a, b) == brute_sumset(a, b));
    }
}

TEST_CASE("set operations") {
  CHECK(ZnSet(5, {-1, 7, 2}) == ZnSet(5, {2, 4}));
  CHECK(ZnSet(7, {1, 2, 4}).negated() == ZnSet(7, {3, 5, 6}));
  CHECK(ZnSet(7, {0, 3, 5, 6}).complement() == ZnSet(7, {1, 2, 4}));
  CHECK(ZnSet(4, {0, 1}).translated(3) == ZnSet(4, {3, 0}));
  CHECK(ZnSet::generated(12, 8) == ZnSet(12, {0, 4, 8}));
  CHECK_THROWS_AS(ZnSet(4).min(), std::invalid_argument);
  CHECK_THROWS_AS(ZnSet(0), std::invalid_argument);
}

TEST_CASE("smallest coset") {
  const Coset c = smallest_coset(ZnSet(8, {1, 3}));
  CHECK(c.offset == 1);
  CHECK(c.subgroup == ZnSet(8, {0, 2, 4, 6}));
  CHECK(c.step() == 2);
  CHECK(smallest_coset(ZnSet(4, {0, 2})).subgroup == ZnSet(4, {0, 2}));
  const Coset single = smallest_coset(ZnSet(9, {5}));
  CHECK(single.offset == 5);
  CHECK(single.subgroup == ZnSet(9, {0}));
  for (std::size_t n = 1; n <= 16; ++n)
    for (int t = 0; t < 20; ++t) {
      const ZnSet a = random_set(n);
      if (a.empty()) continue;
      CHECK(smallest_coset(a).elements() == brute_smallest_coset(a));
    }
}

TEST_CASE("fourier bias") {
  CHECK(fourier_bias(ZnSet::full(6)) == doctest::Approx(0.0));
  CHECK(fourier_bias(ZnSet(2, {0})) == doctest::Approx(0.5));
  CHECK(fourier_bias(ZnSet(2, {0, 1})) == doctest::Approx(0.0));
  CHECK(fourier_bias(ZnSet(1, {0})) == 0.0);
  for (std::size_t n = 2; n <= 12; ++n) {
    const ZnSet a = random_set(n);
    double best = 0;
    for (std::size_t r = 1; r < n; ++r) {
      std::complex<double> s = 0;
      for (auto x : a.elements())
        s += std::exp(std::complex<double>(0, -2 * std::numbers::pi * double(x * r) / double(n)));
      best = std::max(best, std::abs(s) / double(n));
    }
    CHECK(fourier_bias(a) == doctest::Approx(best));
    // the indicator never exceeds its density
    CHECK(fourier_bias(a) <= double(a.size()) / double(n) + 1e-12);
  }
}
