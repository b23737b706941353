#include "nilcomm/hilbert/sampling.hpp"

#include "nilcomm/centralizer/centralizer.hpp"
#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/exactalg/linalg.hpp"
#include "nilcomm/orbits/tangent.hpp"
#include "nilcomm/partitions/partitions.hpp"

namespace nilcomm {

namespace {

template <class K>
std::pair<Matrix<K>, Matrix<K>> unitriangular_factors(const FlagAlgebra& w, const Field<K>& field, Rng& rng, int bound) {
  const int n = w.n();
  Matrix<K> upper = Matrix<K>::identity(n, field), lower = Matrix<K>::identity(n, field);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r < c) upper(r, c) = field.from_int(uniform_int(rng, -bound, bound));
      else if (r > c && w.allows(r, c)) lower(r, c) = field.from_int(uniform_int(rng, -bound, bound));
    }
  return {upper, lower};
}

// Inverse of a unitriangular matrix by back substitution, avoiding general elimination.
template <class K>
Matrix<K> unitriangular_inverse(const Matrix<K>& m, bool upper) {
  const std::size_t n = m.rows();
  Matrix<K> inv = Matrix<K>::identity(n, m.field());
  // Solve m * inv = I column by column.
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t r = upper ? n - 1 - step : step;
      K s = r == col ? m.field().one() : m.field().zero();
      for (std::size_t k = 0; k < n; ++k) {
        const bool beyond = upper ? k > r : k < r;
        if (beyond && !is_zero(m(r, k))) s -= m(r, k) * inv(k, col);
      }
      inv(r, col) = s;
    }
  return inv;
}

Partition random_partition(int n, Rng& rng) {
  const auto all = enumerate_partitions(n);
  return all[uniform_int(rng, 0, static_cast<std::int64_t>(all.size()) - 1)];
}

}  // namespace

template <class K>
std::pair<Matrix<K>, Matrix<K>> random_unimodular_pair(const FlagAlgebra& w, const Field<K>& field, Rng& rng,
                                                       int bound) {
  const auto [upper, lower] = unitriangular_factors(w, field, rng, bound);
  return {upper * lower, unitriangular_inverse(lower, false) * unitriangular_inverse(upper, true)};
}

template <class K>
Matrix<K> random_unimodular(const FlagAlgebra& w, const Field<K>& field, Rng& rng, int bound) {
  return random_unimodular_pair(w, field, rng, bound).first;
}

template <class K>
std::pair<Matrix<K>, Matrix<K>> random_commuting_nilpotent_pair(int n, const Field<K>& field, Rng& rng) {
  const auto x = jordan_matrix(random_partition(n, rng), field);
  const auto y = sample_nilpotent_in_centralizer(x, FlagAlgebra::full(n), rng);
  const auto [g, ginv] = random_unimodular_pair(FlagAlgebra::full(n), field, rng);
  return {g * x * ginv, g * y * ginv};
}

template <class K>
CommutingTriple<K> random_cyclic_triple(const FlagAlgebra& w, const Field<K>& field, Rng& rng) {
  const int n = w.n();
  const FlagAlgebra borel = FlagAlgebra::nested(n, n);
  while (true) {
    const auto x = jordan_matrix(random_partition(n, rng), field);
    const auto strict = kernel_in_span(centralizer_solve(x, borel), field, [&](const Matrix<K>& m) {
      Vec<K> diag;
      for (int i = 0; i < n; ++i) diag.push_back(m(i, i));
      return diag;
    });
    Matrix<K> y(n, n, field);
    for (const auto& b : strict) y += b * field.random(rng);
    const auto v = find_cyclic_vector(x, y, rng(), CyclicSearch{8, false});
    if (!v) continue;
    const auto [g, ginv] = random_unimodular_pair(w, field, rng);
    return {g * x * ginv, g * y * ginv, g * *v};
  }
}

#define NILCOMM_INSTANTIATE(K)                                                                                   \
  template Matrix<K> random_unimodular(const FlagAlgebra&, const Field<K>&, Rng&, int);                         \
  template std::pair<Matrix<K>, Matrix<K>> random_unimodular_pair(const FlagAlgebra&, const Field<K>&, Rng&, int); \
  template std::pair<Matrix<K>, Matrix<K>> random_commuting_nilpotent_pair(int, const Field<K>&, Rng&);        \
  template CommutingTriple<K> random_cyclic_triple(const FlagAlgebra&, const Field<K>&, Rng&);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
