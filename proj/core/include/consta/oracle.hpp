#pragma once

#include <cstddef>
#include <vector>

#include "consta/codes.hpp"
#include "consta/field.hpp"
#include "consta/poly.hpp"

// Brute-force linear algebra used as ground truth for the spectral code paths.
// Nothing in here touches the transform or root bases.

namespace consta {

/// Rows of length-`cols` vectors over a field.
class MatrixOverFq {
 public:
  MatrixOverFq(FieldCtx field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  const FieldCtx& field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  void add_row(Vec row);

  /// Reduced echelon form with pivots taken from the right: each nonzero row
  /// ends in a 1 at its pivot column, all other rows are zero in that column,
  /// and rows are listed by ascending pivot. Read as polynomials (entry i is
  /// the coefficient of x^i) the first row is the unique monic element of
  /// least degree in the row space.
  MatrixOverFq echelon() const;
  std::size_t rank() const { return echelon().rows().size(); }
  /// Basis of {x : <x, row> = 0 for every row}, in echelon form.
  MatrixOverFq nullspace() const;
  bool in_span(const Vec& v) const;

  /// Same row space.
  bool same_span(const MatrixOverFq& o) const;

 private:
  FieldCtx field_;
  std::size_t cols_;
  std::vector<Vec> rows_;
};

/// Rows x^j g for 0 <= j < n - deg g.
MatrixOverFq generator_matrix(const FieldCtx& field, std::size_t n, const Poly& g);

struct OracleProduct {
  std::size_t dim = 0;
  Poly generator;  // x^n - lambda_1 lambda_2 when the span is zero
  MatrixOverFq span;
};

/// Span of all pairwise Schur products of the two generator matrices.
OracleProduct oracle_schur_product(const ConstaCode& c1, const ConstaCode& c2);

/// First (v, alpha) over divisors v < n ascending and alpha in canonical order
/// with sum alpha^i x^{iv} dividing g; trivial otherwise.
PatternPoly oracle_pattern(const ConstaCode& c);

struct OracleDual {
  std::size_t dim = 0;
  MatrixOverFq basis;
};
OracleDual oracle_dual(const ConstaCode& c);

/// True if every row's image under (c_0..c_{n-1}) -> (lambda c_{n-1}, c_0, ..)
/// lies in the row space.
bool span_shift_closed(const MatrixOverFq& m, const FieldElem& lambda);

}  // namespace consta
