#include "nilcomm/exactalg/linalg.hpp"

#include <stdexcept>

namespace nilcomm {

template <class K>
RowEchelon<K> rref(Matrix<K> m, PivotRule rule) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  K factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pick = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      pick = i;
      if (rule == PivotRule::first_nonzero) break;
    }
    if (pick == rows) continue;
    if (pick != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(pick, j));
    const K inv = m.field().one() / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank();
}

template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m) {
  const auto echelon = rref(m);
  const auto& red = echelon.reduced;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : echelon.pivot_columns) is_pivot[c] = true;
  std::vector<Vec<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<K> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < echelon.pivot_columns.size(); ++i) v[echelon.pivot_columns[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
K determinant(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<K> a = m;
  const std::size_t n = a.rows();
  K det = m.field().one();
  K factor;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pick = n;
    for (std::size_t i = c; i < n; ++i)
      if (!is_zero(a(i, c))) {
        pick = i;
        break;
      }
    if (pick == n) return m.field().zero();
    if (pick != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pick, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      factor = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n, m.field());
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<K>::identity(n, m.field()));
  const auto echelon = rref(aug);
  if (echelon.rank() < n || echelon.pivot_columns[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  return echelon.reduced.block(0, n, n, n);
}

template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  Matrix<K> aug(m.rows(), m.cols() + 1, m.field());
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  const auto echelon = rref(aug);
  if (!echelon.pivot_columns.empty() && echelon.pivot_columns.back() == m.cols()) return std::nullopt;
  Vec<K> x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < echelon.pivot_columns.size(); ++i)
    x[echelon.pivot_columns[i]] = echelon.reduced(i, m.cols());
  return x;
}

template <class K>
bool is_nilpotent(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("nilpotency of a non-square matrix");
  // m is nilpotent iff m^(2^k) = 0 for 2^k >= n.
  Matrix<K> p = m;
  for (std::size_t reach = 1; reach < m.rows(); reach *= 2) {
    if (p.is_zero()) return true;
    p = p * p;
  }
  return p.is_zero();
}

template <class K>
std::vector<std::size_t> rank_sequence(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("rank sequence of a non-square matrix");
  std::vector<std::size_t> ranks{m.rows()};
  Matrix<K> p = m;
  while (true) {
    const std::size_t r = rank(p);
    if (r == ranks.back()) break;
    ranks.push_back(r);
    if (r == 0) break;
    p = p * m;
  }
  return ranks;
}

template <class K>
std::size_t span_rank(const std::vector<Vec<K>>& vectors, const Field<K>& field) {
  if (vectors.empty()) return 0;
  return rank(Matrix<K>::from_rows(vectors, field));
}

template <class K>
bool same_span(const std::vector<Vec<K>>& a, const std::vector<Vec<K>>& b, const Field<K>& field) {
  const std::size_t ra = span_rank(a, field), rb = span_rank(b, field);
  if (ra != rb) return false;
  std::vector<Vec<K>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both, field) == ra;
}

template <class K>
Matrix<K> char_poly_gradient(const Matrix<K>& x, unsigned j) {
  if (!x.is_square()) throw std::invalid_argument("gradient of a non-square matrix");
  if (j == 0) throw std::invalid_argument("power-trace index starts at 1");
  const auto p = x.field().characteristic();
  if (p != 0 && p <= x.rows())
    throw std::domain_error("power-trace differentials need characteristic 0 or greater than the matrix size");
  return power(x, j - 1).transpose() * x.field().from_int(j);
}

template <class K>
Vec<K> flatten(const Matrix<K>& m) {
  Vec<K> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

template <class K>
Matrix<K> unflatten(const Vec<K>& v, std::size_t rows, std::size_t cols, const Field<K>& field) {
  if (v.size() != rows * cols) throw std::invalid_argument("vector length does not match shape");
  Matrix<K> m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

#define NILCOMM_INSTANTIATE(K)                                                                 \
  template RowEchelon<K> rref(Matrix<K>, PivotRule);                                         \
  template std::size_t rank(const Matrix<K>&);                                               \
  template std::vector<Vec<K>> kernel_basis(const Matrix<K>&);                               \
  template K determinant(const Matrix<K>&);                                                  \
  template Matrix<K> inverse(const Matrix<K>&);                                              \
  template std::optional<Vec<K>> solve(const Matrix<K>&, const Vec<K>&);                     \
  template bool is_nilpotent(const Matrix<K>&);                                              \
  template std::vector<std::size_t> rank_sequence(const Matrix<K>&);                         \
  template std::size_t span_rank(const std::vector<Vec<K>>&, const Field<K>&);               \
  template bool same_span(const std::vector<Vec<K>>&, const std::vector<Vec<K>>&, const Field<K>&); \
  template Matrix<K> char_poly_gradient(const Matrix<K>&, unsigned);                         \
  template Vec<K> flatten(const Matrix<K>&);                                                 \
  template Matrix<K> unflatten(const Vec<K>&, std::size_t, std::size_t, const Field<K>&);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
