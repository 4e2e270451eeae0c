#pragma once

// Internal representation of a field tower. Level 0 is F_p; level l (1-based)
// is the extension of level l-1 by degrees[l-1]. Elements at every level are
// canonical indices.

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace consta::detail {

struct FieldData : std::enable_shared_from_this<FieldData> {
  struct Tables {
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
  };

  std::uint64_t p = 0;
  std::vector<unsigned> degrees;
  std::vector<std::vector<std::uint64_t>> moduli;
  std::vector<std::uint64_t> size;    // size[l] = cardinality of level l
  std::vector<unsigned> digits;       // digits[l] = degree of level l over F_p
  std::vector<Tables> tables;         // exp/log tables for small levels

  std::size_t top() const { return degrees.size(); }

  std::uint64_t add(std::size_t lvl, std::uint64_t x, std::uint64_t y) const;
  std::uint64_t neg(std::size_t lvl, std::uint64_t x) const;
  std::uint64_t mul(std::size_t lvl, std::uint64_t x, std::uint64_t y) const;
  std::uint64_t mul_generic(std::size_t lvl, std::uint64_t x, std::uint64_t y) const;
  std::uint64_t pow(std::size_t lvl, std::uint64_t x, std::uint64_t e) const;
  std::uint64_t inv(std::size_t lvl, std::uint64_t x) const;

  bool same_tower(const FieldData& o) const;
  bool has_prefix(const FieldData& sub) const;

  const std::vector<std::uint64_t>& group_order_factors() const;

  mutable std::once_flag factors_once;
  mutable std::vector<std::uint64_t> factors;
};

}  // namespace consta::detail
