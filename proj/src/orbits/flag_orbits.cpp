#include "nilcomm/orbits/flag_orbits.hpp"

#include <stdexcept>

#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/exactalg/linalg.hpp"

namespace nilcomm {

template <class K>
bool nilpotent_in_flag(const Matrix<K>& x, const FlagAlgebra& w) {
  if (!w.contains(x)) throw std::invalid_argument("matrix is not in " + w.name());
  for (auto [start, size] : w.blocks())
    if (!is_nilpotent(x.block(start, start, size, size))) return false;
  return true;
}

template <class K>
Matrix<K> transpose_duality(const Matrix<K>& x) {
  const int n = static_cast<int>(x.rows());
  if (!x.is_square() || n == 0) throw std::invalid_argument("duality needs a square matrix");
  if (!FlagAlgebra::parabolic(1, n).contains(x) && !FlagAlgebra::parabolic(n - 1, n).contains(x))
    throw std::invalid_argument("duality is defined on p_{1,n} and p_{n-1,n}");
  Matrix<K> out(n, n, x.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = -x(n - 1 - j, n - 1 - i);
  return out;
}

namespace {

template <class K>
Vec<K> row_times(const Vec<K>& row, const Matrix<K>& m) {
  return m.transpose() * row;
}

template <class K>
Vec<K> first_row_tail(const Matrix<K>& x) {
  const auto row = x.row(0);
  return Vec<K>(row.begin() + 1, row.end());
}

// Right action of the unit group of the commutant of a Jordan matrix on a row
// vector of first-chain coordinates, recording the accumulated product.
template <class K>
class ChainMoves {
 public:
  ChainMoves(const BlockLayout& layout, Vec<K> row, const Field<K>& field)
      : layout_(layout), field_(field), row_(std::move(row)), h_(Matrix<K>::identity(layout.dimension(), field)) {}

  const K& head(int i) const { return row_[layout_.position(i, 1)]; }
  const Matrix<K>& product() const { return h_; }

  // Coordinate of chain a is added, times c, to chain b (needs size b <= size a).
  void add(int a, int b, const K& c) { apply(shift(a, b) * c + Matrix<K>::identity(layout_.dimension(), field_)); }

  void scale(int a, const K& s) {
    apply(shift(a, a) * (s - field_.one()) + Matrix<K>::identity(layout_.dimension(), field_));
  }

  void swap(int a, int b) {
    if (a == b) return;
    if (layout_.size(a) != layout_.size(b)) throw std::logic_error("swapping chains of different lengths");
    Matrix<K> p = Matrix<K>::identity(layout_.dimension(), field_);
    for (int j = 1; j <= layout_.size(a); ++j) {
      const auto pa = layout_.position(a, j), pb = layout_.position(b, j);
      p(pa, pa) = p(pb, pb) = field_.zero();
      p(pa, pb) = p(pb, pa) = field_.one();
    }
    apply(p);
  }

 private:
  Matrix<K> shift(int a, int b) const {
    if (layout_.size(b) > layout_.size(a)) throw std::logic_error("shift from a shorter chain");
    Matrix<K> e(layout_.dimension(), layout_.dimension(), field_);
    for (int j = 1; j <= layout_.size(b); ++j) e(layout_.position(a, j), layout_.position(b, j)) = field_.one();
    return e;
  }

  void apply(const Matrix<K>& e) {
    row_ = row_times(row_, e);
    h_ = h_ * e;
  }

  const BlockLayout& layout_;
  Field<K> field_;
  Vec<K> row_;
  Matrix<K> h_;
};

// Conjugates x = [[0, r], [0, J]] (J = block_jordan(layout)) by [[1, u], [0, 1]] so that r
// only has first-chain coordinates. Returns the conjugating element and updates r.
template <class K>
Matrix<K> clear_chain_tails(Vec<K>& row, const BlockLayout& layout, const Field<K>& field) {
  Matrix<K> u = Matrix<K>::identity(layout.dimension() + 1, field);
  for (int i = 1; i <= layout.blocks(); ++i)
    for (int j = 2; j <= layout.size(i); ++j) {
      u(0, 1 + layout.position(i, j - 1)) = -row[layout.position(i, j)];
      row[layout.position(i, j)] = field.zero();
    }
  return u;
}

template <class K>
Matrix<K> with_leading_one(const Matrix<K>& h) {
  Matrix<K> g = Matrix<K>::identity(h.rows() + 1, h.field());
  g.set_block(1, 1, h);
  return g;
}

}  // namespace

template <class K>
P1Normal<K> normalize_p1(const Matrix<K>& x) {
  const int n = static_cast<int>(x.rows());
  const auto& field = x.field();
  if (!x.is_square() || n == 0 || !FlagAlgebra::parabolic(1, n).contains(x) || !is_nilpotent(x))
    throw std::invalid_argument("expected a nilpotent element of p_{1,n}");
  if (n == 1) return {MarkedPartition(1, Partition{}), Matrix<K>::identity(1, field)};

  const int m = n - 1;
  const Matrix<K> x3 = x.block(1, 1, m, m);
  const Partition mu = jordan_type(x3);
  const BlockLayout layout(mu.parts());
  const Matrix<K> b3 = jordan_basis(x3);

  Matrix<K> g = with_leading_one(inverse(b3));
  Vec<K> row = row_times(first_row_tail(x), b3);
  g = clear_chain_tails(row, layout, field) * g;

  // The largest chain length carrying a nonzero first coordinate decides the orbit.
  int top = 0;
  for (int i = 1; i <= layout.blocks(); ++i)
    if (!is_zero(row[layout.position(i, 1)])) {
      top = i;
      break;
    }
  if (top == 0) {
    MarkedPartition label(1, mu);
    return {label, g};
  }
  int first = top;
  while (first > 1 && mu.part(first - 1) == mu.part(top)) --first;

  ChainMoves<K> moves(layout, row, field);
  moves.swap(top, first);
  moves.scale(first, field.one() / moves.head(first));
  for (int i = 1; i <= layout.blocks(); ++i)
    if (i != first && !is_zero(moves.head(i))) moves.add(first, i, -moves.head(i));
  g = with_leading_one(inverse(moves.product())) * g;

  // Reorder the basis: e_1, then the chain hanging below it, then the others.
  std::vector<std::size_t> order{0};
  for (int j = 1; j <= layout.size(first); ++j) order.push_back(1 + layout.position(first, j));
  for (int i = 1; i <= layout.blocks(); ++i)
    if (i != first)
      for (int j = 1; j <= layout.size(i); ++j) order.push_back(1 + layout.position(i, j));
  Matrix<K> perm(n, n, field);
  for (int k = 0; k < n; ++k) perm(k, order[k]) = field.one();
  g = perm * g;

  MarkedPartition label(mu.part(first) + 1, mu.without(first));
  if (g * x != jordan_matrix(label, field) * g) throw std::logic_error("p1 normal form verification failed");
  return {label, g};
}

template <class K>
Q2Normal<K> normalize_q2(const Matrix<K>& x) {
  const int n = static_cast<int>(x.rows());
  const auto& field = x.field();
  if (!x.is_square() || n < 2 || !FlagAlgebra::nested(2, n).contains(x) || !is_nilpotent(x))
    throw std::invalid_argument("expected a nilpotent element of q_{2,n}");

  const int m = n - 1;
  const auto lower = normalize_p1(x.block(1, 1, m, m));
  const MarkedPartition& alpha = lower.label;
  const BlockLayout layout(alpha.block_sizes());

  Matrix<K> g = with_leading_one(lower.conjugator);
  Vec<K> row = row_times(first_row_tail(x), inverse(lower.conjugator));
  g = clear_chain_tails(row, layout, field) * g;

  ChainMoves<K> moves(layout, row, field);
  // Chains 2..d may be mixed among themselves (longer into shorter) and chain 1 may
  // feed any chain not longer than itself; nothing may feed chain 1.
  int top = 0;
  for (int i = 2; i <= layout.blocks(); ++i)
    if (!is_zero(moves.head(i)) && (top == 0 || layout.size(i) > layout.size(top))) top = i;

  int l = 0;
  if (top != 0) {
    int first = 2;
    while (layout.size(first) != layout.size(top)) ++first;
    moves.swap(top, first);
    moves.scale(first, field.one() / moves.head(first));
    for (int i = 2; i <= layout.blocks(); ++i)
      if (i != first && !is_zero(moves.head(i))) moves.add(first, i, -moves.head(i));
    l = layout.size(first);
    if (!is_zero(moves.head(1)) && l <= alpha.head) {
      moves.add(1, first, -field.one() / moves.head(1));
      l = 0;
    }
  }
  int eps = 0;
  if (!is_zero(moves.head(1))) {
    moves.scale(1, field.one() / moves.head(1));
    eps = 1;
  }
  g = with_leading_one(inverse(moves.product())) * g;

  MarkedPartition2 label(alpha, l, eps);
  if (g * x != jordan_matrix(label, field) * g) throw std::logic_error("q2 normal form verification failed");
  return {label, g};
}

template <class K>
std::optional<Matrix<K>> conjugating_element(const std::vector<std::pair<Matrix<K>, Matrix<K>>>& pairs,
                                             const FlagAlgebra& w, std::uint64_t seed, int budget) {
  if (pairs.empty()) throw std::invalid_argument("nothing to conjugate");
  const auto& field = pairs.front().first.field();
  for (const auto& [x, t] : pairs)
    if (!w.contains(x) || !w.contains(t)) throw std::invalid_argument("matrices must lie in " + w.name());

  const auto intertwiners = kernel_in_span(w.basis(field), field, [&](const Matrix<K>& b) {
    Vec<K> v;
    for (const auto& [x, t] : pairs) {
      const auto part = flatten(b * x - t * b);
      v.insert(v.end(), part.begin(), part.end());
    }
    return v;
  });
  if (intertwiners.empty()) return std::nullopt;

  Rng rng(seed);
  const std::size_t n = pairs.front().first.rows();
  for (int attempt = 0; attempt < budget; ++attempt) {
    Matrix<K> g(n, n, field);
    for (const auto& b : intertwiners) g += b * field.random(rng);
    if (!is_zero(determinant(g))) return g;
  }
  return std::nullopt;
}

#define NILCOMM_INSTANTIATE(K)                                                                                    \
  template bool nilpotent_in_flag(const Matrix<K>&, const FlagAlgebra&);                                          \
  template Matrix<K> transpose_duality(const Matrix<K>&);                                                         \
  template P1Normal<K> normalize_p1(const Matrix<K>&);                                                            \
  template Q2Normal<K> normalize_q2(const Matrix<K>&);                                                            \
  template std::optional<Matrix<K>> conjugating_element(const std::vector<std::pair<Matrix<K>, Matrix<K>>>&, \
                                                        const FlagAlgebra&, std::uint64_t, int);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
