#include "consta/zn.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace consta {

namespace {

std::size_t reduce(std::int64_t a, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  std::int64_t r = a % m;
  return static_cast<std::size_t>(r < 0 ? r + m : r);
}

ZnSet from_mask(std::size_t n, const std::vector<bool>& mask) {
  std::vector<std::int64_t> e;
  for (std::size_t i = 0; i < n; ++i)
    if (mask[i]) e.push_back(static_cast<std::int64_t>(i));
  return ZnSet(n, e);
}

}  // namespace

ZnSet::ZnSet(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("ZnSet: modulus must be positive");
}

ZnSet::ZnSet(std::size_t n, std::initializer_list<std::int64_t> elems)
    : ZnSet(n, std::vector<std::int64_t>(elems)) {}

ZnSet::ZnSet(std::size_t n, const std::vector<std::int64_t>& elems) : ZnSet(n) {
  elems_.reserve(elems.size());
  for (auto a : elems) elems_.push_back(reduce(a, n));
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

ZnSet ZnSet::full(std::size_t n) { return from_mask(n, std::vector<bool>(n, true)); }

ZnSet ZnSet::generated(std::size_t n, std::int64_t g) {
  const std::size_t d = std::gcd(reduce(g, n), n);
  std::vector<std::int64_t> e;
  for (std::size_t i = 0; i < n; i += d) e.push_back(static_cast<std::int64_t>(i));
  return ZnSet(n, e);
}

bool ZnSet::contains(std::int64_t a) const {
  return std::binary_search(elems_.begin(), elems_.end(), reduce(a, n_));
}

std::size_t ZnSet::min() const {
  if (elems_.empty()) throw std::invalid_argument("ZnSet::min of empty set");
  return elems_.front();
}

ZnSet ZnSet::complement() const {
  std::vector<bool> mask(n_, true);
  for (auto a : elems_) mask[a] = false;
  return from_mask(n_, mask);
}

ZnSet ZnSet::negated() const {
  std::vector<std::int64_t> e;
  for (auto a : elems_) e.push_back(-static_cast<std::int64_t>(a));
  return ZnSet(n_, e);
}

ZnSet ZnSet::translated(std::int64_t shift) const {
  std::vector<std::int64_t> e;
  for (auto a : elems_) e.push_back(static_cast<std::int64_t>(a) + shift);
  return ZnSet(n_, e);
}

ZnSet sumset(const ZnSet& a, const ZnSet& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("sumset: modulus mismatch");
  const std::size_t n = a.modulus();
  std::vector<bool> mask(n, false);
  for (auto x : a.elements())
    for (auto y : b.elements()) mask[(x + y) % n] = true;
  return from_mask(n, mask);
}

ZnSet iterated_sumset(const ZnSet& a, unsigned t) {
  if (t == 0) throw std::invalid_argument("iterated_sumset: t must be at least 1");
  ZnSet acc = a;
  for (unsigned i = 1; i < t; ++i) acc = sumset(acc, a);
  return acc;
}

std::size_t Coset::step() const {
  const auto& e = subgroup.elements();
  return e.size() > 1 ? e[1] : subgroup.modulus();
}

Coset smallest_coset(const ZnSet& a) {
  if (a.empty()) throw std::invalid_argument("smallest_coset: empty set");
  const std::size_t n = a.modulus();
  const std::size_t base = a.min();
  std::size_t d = n;
  for (auto x : a.elements()) d = std::gcd(d, x - base);
  return Coset{base, ZnSet::generated(n, static_cast<std::int64_t>(d))};
}

double fourier_bias(const ZnSet& a) {
  const std::size_t n = a.modulus();
  double best = 0.0;
  for (std::size_t r = 1; r < n; ++r) {
    std::complex<double> acc{0.0, 0.0};
    for (auto x : a.elements()) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((x * r) % n) / static_cast<double>(n);
      acc += std::polar(1.0, angle);
    }
    best = std::max(best, std::abs(acc) / static_cast<double>(n));
  }
  return best;
}

}  // namespace consta
