#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace consta {

namespace detail {
struct FieldData;
}

class FieldCtx;

/// Element of a finite field tower.
///
/// An element is stored as its canonical index: the flat base-p digit vector
/// of its coefficients (least significant level-0 digit first) read as an
/// integer. Canonical order of elements is therefore plain integer order on
/// the index, and a subfield element keeps its index when embedded into any
/// tower extending it.
///
/// A FieldElem refers to its field without owning it; the FieldCtx it came
/// from must outlive it. Contexts are memoized by build_field, so in practice
/// they live for the whole process.
class FieldElem {
 public:
  FieldElem() = default;

  const detail::FieldData* data() const noexcept { return data_; }
  FieldCtx field() const;
  std::uint64_t index() const noexcept { return index_; }

  bool is_zero() const noexcept { return index_ == 0; }
  bool is_one() const noexcept { return index_ == 1; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  FieldElem pow(std::uint64_t e) const;
  FieldElem pow_signed(std::int64_t e) const;
  FieldElem inv() const;

  /// Coefficients over the level below (indices in that level's field).
  std::vector<std::uint64_t> coefficients() const;

  bool operator==(const FieldElem& o) const;
  std::strong_ordering operator<=>(const FieldElem& o) const;

 private:
  friend class FieldCtx;
  FieldElem(const detail::FieldData* d, std::uint64_t idx) : data_(d), index_(idx) {}

  const detail::FieldData* data_ = nullptr;
  std::uint64_t index_ = 0;
};

/// Immutable handle to a field tower F_p ⊂ F_p^{d1} ⊂ F_p^{d1 d2} ⊂ ...
class FieldCtx {
 public:
  /// Largest cardinality accepted by build_field.
  static constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 62;

  FieldCtx() = default;

  std::uint64_t characteristic() const;
  const std::vector<unsigned>& degrees() const;
  /// Per level, the monic modulus as level-below indices, constant term first.
  const std::vector<std::vector<std::uint64_t>>& moduli() const;
  std::uint64_t cardinality() const;
  /// Total degree over F_p.
  unsigned absolute_degree() const;
  std::size_t levels() const { return degrees().size(); }

  /// The tower truncated to its first `levels` levels.
  FieldCtx prefix(std::size_t levels) const;
  /// This tower with one more level of the given degree on top.
  FieldCtx extend(unsigned degree) const;
  /// True if `sub` is a prefix of this tower (so its elements embed by index).
  bool contains_subfield(const FieldCtx& sub) const;

  FieldElem zero() const { return make(0); }
  FieldElem one() const { return make(1); }
  /// Element with the given canonical index.
  FieldElem make(std::uint64_t index) const;
  /// Image of an integer under Z -> F_p.
  FieldElem from_int(std::int64_t v) const;
  /// Element from its flat base-p digits (least significant first).
  FieldElem from_digits(std::span<const std::uint64_t> digits) const;
  std::vector<std::uint64_t> digits(const FieldElem& x) const;

  /// Re-home an element of a prefix tower (or an equal tower) into this one.
  FieldElem embed(const FieldElem& x) const;
  /// Inverse of embed; throws std::domain_error if x is outside `sub`.
  FieldElem restrict_to(const FieldCtx& sub, const FieldElem& x) const;
  bool lies_in(const FieldCtx& sub, const FieldElem& x) const;

  /// Prime factors of cardinality - 1 (computed once, on demand).
  const std::vector<std::uint64_t>& group_order_factors() const;

  bool operator==(const FieldCtx& o) const;
  const detail::FieldData* data() const noexcept { return data_.get(); }
  explicit operator bool() const noexcept { return static_cast<bool>(data_); }

  std::string describe() const;

 private:
  friend class FieldElem;
  friend FieldCtx build_field(std::uint64_t, const std::vector<unsigned>&);
  explicit FieldCtx(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

/// Build (or fetch the memoized) tower over F_p with the given extension
/// degrees. Each level's modulus is the first monic irreducible polynomial in
/// canonical order over the level below. Throws std::invalid_argument if p is
/// not prime, a degree is 0, or the cardinality exceeds kMaxCardinality.
FieldCtx build_field(std::uint64_t p, const std::vector<unsigned>& degrees);

/// Smallest e >= 1 with x^e = 1.
std::uint64_t elem_order(const FieldElem& x);

/// First element of multiplicative order exactly e in canonical order.
FieldElem find_element_of_order(const FieldCtx& ctx, std::uint64_t e);

// Integer helpers shared across modules.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned e);
/// Multiplicative order of q modulo m (m >= 1, gcd(q, m) = 1).
std::uint64_t multiplicative_order_mod(std::uint64_t q, std::uint64_t m);

}  // namespace consta
