#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace consta {

/// Subset of the cyclic group Z_n, kept sorted and duplicate-free.
class ZnSet {
 public:
  explicit ZnSet(std::size_t n = 1);
  ZnSet(std::size_t n, std::initializer_list<std::int64_t> elems);
  ZnSet(std::size_t n, const std::vector<std::int64_t>& elems);

  static ZnSet full(std::size_t n);
  /// The subgroup generated by g.
  static ZnSet generated(std::size_t n, std::int64_t g);

  std::size_t modulus() const noexcept { return n_; }
  const std::vector<std::size_t>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(std::int64_t a) const;
  std::size_t min() const;

  ZnSet complement() const;
  /// {-a : a in A}
  ZnSet negated() const;
  /// {a + shift : a in A}
  ZnSet translated(std::int64_t shift) const;

  bool operator==(const ZnSet&) const = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> elems_;
};

/// A + B. Throws std::invalid_argument on modulus mismatch.
ZnSet sumset(const ZnSet& a, const ZnSet& b);

/// tA = A + ... + A (t times), t >= 1.
ZnSet iterated_sumset(const ZnSet& a, unsigned t);

struct Coset {
  std::size_t offset;
  ZnSet subgroup;

  /// offset + subgroup as a set.
  ZnSet elements() const { return subgroup.translated(static_cast<std::int64_t>(offset)); }
  /// Generator d of the subgroup <d> (d divides n).
  std::size_t step() const;
};

/// SC(A) = min(A) + <A - A>, the least coset containing A. A must be nonempty.
Coset smallest_coset(const ZnSet& a);

/// max over nonzero r of |(1/n) sum_{a in A} exp(-2 pi i a r / n)|; 0 when n = 1.
double fourier_bias(const ZnSet& a);

}  // namespace consta
