#pragma once

#include <vector>

#include "nilcomm/exactalg/matrix.hpp"
#include "nilcomm/partitions/partitions.hpp"

namespace nilcomm {

// Position of Jordan-chain vectors f^i_j inside K^n when the chains are laid out
// consecutively after `offset` leading basis vectors. Indices i, j are 1-based,
// positions 0-based.
class BlockLayout {
 public:
  BlockLayout(std::vector<int> sizes, int offset = 0);

  const std::vector<int>& sizes() const { return sizes_; }
  int blocks() const { return static_cast<int>(sizes_.size()); }
  int size(int i) const { return sizes_.at(i - 1); }
  int dimension() const { return dimension_; }
  std::size_t position(int i, int j) const;

 private:
  std::vector<int> sizes_;
  std::vector<int> starts_;
  int dimension_;
};

// Nilpotent matrix with f^i_j -> f^i_{j-1} (and f^i_1 -> 0) for the given block sizes.
template <class K>
Matrix<K> block_jordan(const std::vector<int>& sizes, const Field<K>& field);

template <class K>
Matrix<K> jordan_matrix(const Partition& lambda, const Field<K>& field) {
  return block_jordan(lambda.parts(), field);
}

// Head block first, then the tail blocks; lies in the stabiliser of the first basis line.
template <class K>
Matrix<K> jordan_matrix(const MarkedPartition& lambda, const Field<K>& field) {
  return block_jordan(lambda.block_sizes(), field);
}

// Normal form for the two-step flag: e_1 followed by the alpha-chains g^i_j, with
// g^1_1 -> eps e_1 and g^{i}_1 -> e_1 for the marked chain i when l > 0.
template <class K>
Matrix<K> jordan_matrix(const MarkedPartition2& mu, const Field<K>& field);

// Throws std::domain_error if x is not nilpotent.
template <class K>
Partition jordan_type(const Matrix<K>& x);

// Invertible g whose columns are Jordan chains of x, so g^-1 x g = jordan_matrix(jordan_type(x)).
template <class K>
Matrix<K> jordan_basis(const Matrix<K>& x);

}  // namespace nilcomm
