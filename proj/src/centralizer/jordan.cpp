#include "nilcomm/centralizer/jordan.hpp"

#include <numeric>
#include <stdexcept>

#include "nilcomm/exactalg/linalg.hpp"

namespace nilcomm {

BlockLayout::BlockLayout(std::vector<int> sizes, int offset) : sizes_(std::move(sizes)) {
  int start = offset;
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("Jordan blocks must have positive size");
    starts_.push_back(start);
    start += s;
  }
  dimension_ = start;
}

std::size_t BlockLayout::position(int i, int j) const {
  if (i < 1 || i > blocks() || j < 1 || j > sizes_[i - 1]) throw std::out_of_range("chain index out of range");
  return static_cast<std::size_t>(starts_[i - 1] + j - 1);
}

template <class K>
Matrix<K> block_jordan(const std::vector<int>& sizes, const Field<K>& field) {
  const BlockLayout layout(sizes);
  Matrix<K> m(layout.dimension(), layout.dimension(), field);
  for (int i = 1; i <= layout.blocks(); ++i)
    for (int j = 2; j <= layout.size(i); ++j) m(layout.position(i, j - 1), layout.position(i, j)) = field.one();
  return m;
}

template <class K>
Matrix<K> jordan_matrix(const MarkedPartition2& mu, const Field<K>& field) {
  validate(mu);
  const BlockLayout layout(mu.alpha.block_sizes(), 1);
  Matrix<K> m(layout.dimension(), layout.dimension(), field);
  for (int i = 1; i <= layout.blocks(); ++i)
    for (int j = 2; j <= layout.size(i); ++j) m(layout.position(i, j - 1), layout.position(i, j)) = field.one();
  if (mu.eps == 1) m(0, layout.position(1, 1)) = field.one();
  if (mu.l > 0) m(0, layout.position(mu.marked_index(), 1)) = field.one();
  return m;
}

template <class K>
Partition jordan_type(const Matrix<K>& x) {
  const auto ranks = rank_sequence(x);
  if (ranks.back() != 0) throw std::domain_error("matrix is not nilpotent");
  // ranks[k-1] - ranks[k] counts the blocks of size at least k.
  std::vector<int> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
  return Partition(at_least).conjugate();
}

template <class K>
Matrix<K> jordan_basis(const Matrix<K>& x) {
  const Partition type = jordan_type(x);
  const std::size_t n = x.rows();
  const auto& field = x.field();
  if (n == 0) return Matrix<K>(0, 0, field);
  const int depth = type.part(1);

  // kernels[s] is a basis of ker x^s.
  std::vector<std::vector<Vec<K>>> kernels(depth + 1);
  for (int s = 1; s <= depth; ++s) kernels[s] = kernel_basis(power(x, s));

  struct Chain {
    int length;
    Vec<K> head;
  };
  std::vector<Chain> chains;
  for (int s = depth; s >= 1; --s) {
    std::vector<Vec<K>> span = kernels[s - 1];
    for (const auto& c : chains) {
      Vec<K> v = c.head;
      for (int t = c.length; t > s; --t) v = x * v;
      span.push_back(std::move(v));
    }
    std::size_t r = span_rank(span, field);
    for (const auto& cand : kernels[s]) {
      span.push_back(cand);
      const std::size_t r2 = span_rank(span, field);
      if (r2 > r) {
        chains.push_back({s, cand});
        r = r2;
      } else {
        span.pop_back();
      }
    }
  }

  Matrix<K> g(n, n, field);
  std::size_t col = 0;
  for (const auto& c : chains) {
    // f_j = x^(length - j) head, written bottom (j = 1) first.
    std::vector<Vec<K>> chain(c.length);
    chain[c.length - 1] = c.head;
    for (int j = c.length - 1; j >= 1; --j) chain[j - 1] = x * chain[j];
    for (const auto& v : chain) g.set_column(col++, v);
  }
  if (col != n || inverse(g) * x * g != jordan_matrix(type, field))
    throw std::logic_error("Jordan basis construction failed");
  return g;
}

#define NILCOMM_INSTANTIATE(K)                                               \
  template Matrix<K> block_jordan(const std::vector<int>&, const Field<K>&); \
  template Matrix<K> jordan_matrix(const MarkedPartition2&, const Field<K>&); \
  template Partition jordan_type(const Matrix<K>&);                          \
  template Matrix<K> jordan_basis(const Matrix<K>&);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
