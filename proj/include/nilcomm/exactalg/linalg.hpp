#pragma once

#include <optional>
#include <vector>

#include "nilcomm/exactalg/matrix.hpp"

namespace nilcomm {

// Which row supplies the pivot during elimination. The reduced form does not
// depend on this; the option exists so callers can check that.
enum class PivotRule { first_nonzero, last_nonzero };

template <class K>
struct RowEchelon {
  Matrix<K> reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

template <class K>
RowEchelon<K> rref(Matrix<K> m, PivotRule rule = PivotRule::first_nonzero);

template <class K>
std::size_t rank(const Matrix<K>& m);

// Basis of {v : m v = 0}, one vector per free column, in increasing column order.
template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m);

template <class K>
K determinant(const Matrix<K>& m);

// Throws std::domain_error on a singular input.
template <class K>
Matrix<K> inverse(const Matrix<K>& m);

// Some solution of m x = b, if there is one.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b);

template <class K>
bool is_nilpotent(const Matrix<K>& m);

// Ranks of m^0, m^1, ... up to the first power where the rank stops dropping.
template <class K>
std::vector<std::size_t> rank_sequence(const Matrix<K>& m);

// Dimension of the span of the given vectors (all of one length).
template <class K>
std::size_t span_rank(const std::vector<Vec<K>>& vectors, const Field<K>& field);

template <class K>
bool same_span(const std::vector<Vec<K>>& a, const std::vector<Vec<K>>& b, const Field<K>& field);

// Coefficient matrix of the functional xi -> j * tr(X^(j-1) xi), so that the
// functional equals sum_{a,b} G(a,b) xi(a,b). Requires characteristic 0 or > n.
template <class K>
Matrix<K> char_poly_gradient(const Matrix<K>& x, unsigned j);

template <class K>
Vec<K> flatten(const Matrix<K>& m);

template <class K>
Matrix<K> unflatten(const Vec<K>& v, std::size_t rows, std::size_t cols, const Field<K>& field);

// Basis of {sum c_i B_i : sum c_i map(B_i) = 0} for a linear `map` returning a
// vector of fixed length.
template <class K, class Map>
std::vector<Matrix<K>> kernel_in_span(const std::vector<Matrix<K>>& basis, const Field<K>& field, Map&& map) {
  if (basis.empty()) return {};
  std::vector<Vec<K>> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(map(b));
  Matrix<K> system(images.front().size(), basis.size(), field);
  for (std::size_t c = 0; c < images.size(); ++c) system.set_column(c, images[c]);
  std::vector<Matrix<K>> out;
  for (const auto& coeffs : kernel_basis(system)) {
    Matrix<K> m(basis.front().rows(), basis.front().cols(), field);
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      if (!is_zero(coeffs[c])) m += basis[c] * coeffs[c];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace nilcomm
