#include "consta/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace consta {

namespace {

// Column of the last nonzero entry, or cols if the row is zero.
std::size_t last_nonzero(const Vec& row) {
  for (std::size_t i = row.size(); i-- > 0;)
    if (!row[i].is_zero()) return i;
  return row.size();
}

bool is_zero_row(const Vec& row) {
  return std::all_of(row.begin(), row.end(), [](const FieldElem& x) { return x.is_zero(); });
}

}  // namespace

void MatrixOverFq::add_row(Vec row) {
  if (row.size() != cols_) throw std::invalid_argument("MatrixOverFq: row length mismatch");
  for (auto& x : row) x = field_.embed(x);
  rows_.push_back(std::move(row));
}

MatrixOverFq MatrixOverFq::echelon() const {
  std::vector<Vec> m = rows_;
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = cols_; c-- > 0 && r < m.size();) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const FieldElem inv = m[r][c].inv();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldElem f = m[i][c];
      for (std::size_t j = 0; j < cols_; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  MatrixOverFq out(field_, cols_);
  // pivots were found right to left; list rows by ascending pivot
  for (std::size_t i = r; i-- > 0;) out.rows_.push_back(std::move(m[i]));
  return out;
}

bool MatrixOverFq::in_span(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("in_span: length mismatch");
  const MatrixOverFq e = echelon();
  Vec w;
  w.reserve(v.size());
  for (const auto& x : v) w.push_back(field_.embed(x));
  for (const auto& row : e.rows_) {
    const std::size_t p = last_nonzero(row);
    if (w[p].is_zero()) continue;
    const FieldElem f = w[p];
    for (std::size_t j = 0; j < cols_; ++j) w[j] -= f * row[j];
  }
  return is_zero_row(w);
}

bool MatrixOverFq::same_span(const MatrixOverFq& o) const {
  if (cols_ != o.cols_) return false;
  const auto a = echelon();
  const auto b = o.echelon();
  return a.rows_ == b.rows_;
}

MatrixOverFq MatrixOverFq::nullspace() const {
  const MatrixOverFq e = echelon();
  std::vector<bool> is_pivot(cols_, false);
  std::vector<std::size_t> pivot_of_row;
  for (const auto& row : e.rows_) {
    const std::size_t p = last_nonzero(row);
    is_pivot[p] = true;
    pivot_of_row.push_back(p);
  }
  MatrixOverFq out(field_, cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols_, field_.zero());
    x[f] = field_.one();
    for (std::size_t i = 0; i < e.rows_.size(); ++i) x[pivot_of_row[i]] = -e.rows_[i][f];
    out.rows_.push_back(std::move(x));
  }
  return out.echelon();
}

MatrixOverFq generator_matrix(const FieldCtx& field, std::size_t n, const Poly& g) {
  MatrixOverFq m(field, n);
  if (g.is_zero() || g.degree() >= static_cast<int>(n)) return m;
  for (std::size_t j = 0; j + static_cast<std::size_t>(g.degree()) < n; ++j) m.add_row(g.shifted(j).to_vector(n));
  return m;
}

OracleProduct oracle_schur_product(const ConstaCode& c1, const ConstaCode& c2) {
  if (c1.n() != c2.n()) throw std::invalid_argument("oracle_schur_product: lengths differ");
  if (!(c1.field() == c2.field())) throw std::invalid_argument("oracle_schur_product: fields differ");
  const FieldCtx& f = c1.field();
  const std::size_t n = c1.n();
  const MatrixOverFq m1 = generator_matrix(f, n, c1.generator());
  const MatrixOverFq m2 = generator_matrix(f, n, c2.generator());
  MatrixOverFq prod(f, n);
  for (const auto& a : m1.rows())
    for (const auto& b : m2.rows()) prod.add_row(schur(a, b));
  OracleProduct out{0, Poly(f), prod.echelon()};
  out.dim = out.span.rows().size();
  if (out.dim == 0)
    out.generator = Poly::x_n_minus(f, n, c1.lambda() * c2.lambda());
  else
    out.generator = Poly(f, out.span.rows().front());
  return out;
}

PatternPoly oracle_pattern(const ConstaCode& c) {
  if (c.is_zero()) throw std::invalid_argument("oracle_pattern: zero code");
  const FieldCtx& f = c.field();
  const std::size_t n = c.n();
  for (std::size_t v = 1; v < n; ++v) {
    if (n % v) continue;
    for (std::uint64_t idx = 1; idx < f.cardinality(); ++idx) {
      const PatternPoly cand{n, v, f.make(idx)};
      if (cand.to_poly(f).divides(c.generator())) return cand;
    }
  }
  return trivial_pattern(f, n);
}

OracleDual oracle_dual(const ConstaCode& c) {
  const MatrixOverFq g = generator_matrix(c.field(), c.n(), c.generator());
  OracleDual out{0, g.nullspace()};
  out.dim = out.basis.rows().size();
  return out;
}

bool span_shift_closed(const MatrixOverFq& m, const FieldElem& lambda) {
  const std::size_t n = m.cols();
  const FieldElem lam = m.field().embed(lambda);
  for (const auto& row : m.rows()) {
    Vec s(n, m.field().zero());
    for (std::size_t i = 0; i + 1 < n; ++i) s[i + 1] = row[i];
    s[0] = lam * row[n - 1];
    if (!m.in_span(s)) return false;
  }
  return true;
}

}  // namespace consta
