#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilcomm/exactalg/matrix.hpp"

namespace nilcomm {

// Stabiliser in gl_n of the standard flag V_{i_1} < ... < V_{i_k} = K^n, where
// V_i is spanned by the first i basis vectors. Stored as the chain (i_1, ..., i_k).
class FlagAlgebra {
 public:
  FlagAlgebra(int n, std::vector<int> chain);

  static FlagAlgebra full(int n);
  // Stabiliser of V_k; k = 0 or k = n gives gl_n.
  static FlagAlgebra parabolic(int k, int n);
  // Stabiliser of V_1 < ... < V_k.
  static FlagAlgebra nested(int k, int n);
  // "gl:n", "p<k>:n", "q<k>:n" or "flag:i1,i2,...,n".
  static FlagAlgebra parse(const std::string& name);

  int n() const { return n_; }
  const std::vector<int>& chain() const { return chain_; }
  int dim() const;
  // 0-based index of the diagonal block holding basis vector r (0-based).
  int block_of(int r) const;
  // Whether entry (r, c) may be nonzero.
  bool allows(int r, int c) const { return block_of(r) <= block_of(c); }
  // (start, size) of each diagonal block.
  std::vector<std::pair<int, int>> blocks() const;
  std::vector<std::pair<int, int>> free_positions() const;
  std::string name() const;

  template <class K>
  bool contains(const Matrix<K>& m) const {
    if (m.rows() != static_cast<std::size_t>(n_) || m.cols() != static_cast<std::size_t>(n_)) return false;
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (!allows(r, c) && !is_zero(m(r, c))) return false;
    return true;
  }

  template <class K>
  std::vector<Matrix<K>> basis(const Field<K>& field) const {
    std::vector<Matrix<K>> out;
    for (auto [r, c] : free_positions()) out.push_back(Matrix<K>::unit(n_, n_, r, c, field));
    return out;
  }

  bool operator==(const FlagAlgebra&) const = default;

 private:
  int n_;
  std::vector<int> chain_;
};

}  // namespace nilcomm
