#include "nilcomm/orbits/tangent.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilcomm/centralizer/centralizer.hpp"
#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/exactalg/linalg.hpp"

namespace nilcomm {

template <class K>
int tangent_dim(const Matrix<K>& x, const Matrix<K>& y, const FlagAlgebra& w, NilpotencyEquations equations) {
  const auto& field = x.field();
  const std::size_t n = x.rows();
  if (!w.contains(x) || !w.contains(y)) throw std::invalid_argument("pair must lie in " + w.name());
  if (!commutator(x, y).is_zero()) throw std::invalid_argument("pair does not commute");
  if (!is_nilpotent(x) || !is_nilpotent(y)) throw std::invalid_argument("pair is not nilpotent");
  const auto p = field.characteristic();
  if (p != 0 && p <= n) throw std::domain_error("tangent computation needs characteristic 0 or greater than n");

  // Regions on which power traces are imposed, as (start, size).
  std::vector<std::pair<int, int>> regions;
  if (equations == NilpotencyEquations::per_block) regions = w.blocks();
  else regions = {{0, static_cast<int>(n)}};

  // Powers of the restrictions, indexed [region][j-1].
  auto powers_of = [&](const Matrix<K>& m) {
    std::vector<std::vector<Matrix<K>>> out;
    for (auto [s, size] : regions) {
      const auto b = m.block(s, s, size, size);
      std::vector<Matrix<K>> pw{Matrix<K>::identity(size, field)};
      for (int j = 1; j < size; ++j) pw.push_back(pw.back() * b);
      out.push_back(std::move(pw));
    }
    return out;
  };
  const auto xp = powers_of(x), yp = powers_of(y);

  const auto positions = w.free_positions();
  std::size_t trace_rows = 0;
  for (auto [s, size] : regions) trace_rows += size;
  const std::size_t rows = n * n + 2 * trace_rows;
  Matrix<K> system(rows, 2 * positions.size(), field);

  for (std::size_t k = 0; k < positions.size(); ++k) {
    const auto [r, c] = positions[k];
    const auto e = Matrix<K>::unit(n, n, r, c, field);
    // xi = e contributes [e, y]; eta = e contributes [x, e].
    const auto from_xi = flatten(commutator(e, y));
    const auto from_eta = flatten(commutator(x, e));
    for (std::size_t i = 0; i < n * n; ++i) {
      system(i, k) = from_xi[i];
      system(i, positions.size() + k) = from_eta[i];
    }
    // d tr(b^j)(e_rc) is proportional to (b^(j-1))_{cr} when r, c lie in the region.
    std::size_t row = n * n;
    for (std::size_t g = 0; g < regions.size(); ++g) {
      const auto [s, size] = regions[g];
      const bool inside = r >= s && r < s + size && c >= s && c < s + size;
      for (int j = 1; j <= size; ++j, ++row) {
        if (!inside) continue;
        system(row, k) = xp[g][j - 1](c - s, r - s);
        system(row + trace_rows, positions.size() + k) = yp[g][j - 1](c - s, r - s);
      }
    }
  }
  return static_cast<int>(2 * positions.size() - rank(system));
}

template <class K>
Matrix<K> sample_nilpotent_in_centralizer(const Matrix<K>& x, const FlagAlgebra& w, Rng& rng) {
  const auto& field = x.field();
  const Partition type = jordan_type(x);
  // In gl_n the closed-form centraliser of a Jordan matrix avoids the linear solve.
  const bool jordan_in_gl = w == FlagAlgebra::full(w.n()) && x == jordan_matrix(type, field);
  const Matrix<K> g = jordan_in_gl ? Matrix<K>::identity(x.rows(), field) : jordan_basis(x);
  const Matrix<K> ginv = jordan_in_gl ? g : inverse(g);
  const auto centralizer =
      jordan_in_gl ? CentralizerBasis<K>(type.parts(), field).matrices() : centralizer_solve(x, w);
  const auto nil = kernel_in_span(centralizer, field, [&](const Matrix<K>& y) {
    Vec<K> v;
    for (const auto& [value, m] : pr_red(jordan_in_gl ? y : ginv * y * g, type.parts()))
      for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b <= a; ++b) v.push_back(m(a, b));
    return v;
  });
  Matrix<K> y(x.rows(), x.cols(), field);
  for (const auto& b : nil) y += b * field.random(rng);
  return y;
}

bool TangentCheck::matched() const { return std::find(observed.begin(), observed.end(), expected) != observed.end(); }

bool TangentCheck::bounded_below() const {
  return std::all_of(observed.begin(), observed.end(), [&](int d) { return d >= expected; });
}

template <class K>
TangentCheck tangent_certificate(const ComponentRecord<K>& record, std::uint64_t seed, int attempts) {
  TangentCheck check{record.dimension, {}};
  Rng rng(seed);
  for (int a = 0; a < attempts; ++a) {
    const auto y = sample_nilpotent_in_centralizer(record.representative, record.ambient, rng);
    check.observed.push_back(tangent_dim(record.representative, y, record.ambient));
    if (check.observed.back() == check.expected) break;
  }
  return check;
}

#define NILCOMM_INSTANTIATE(K)                                                                              \
  template int tangent_dim(const Matrix<K>&, const Matrix<K>&, const FlagAlgebra&, NilpotencyEquations); \
  template Matrix<K> sample_nilpotent_in_centralizer(const Matrix<K>&, const FlagAlgebra&, Rng&);         \
  template TangentCheck tangent_certificate(const ComponentRecord<K>&, std::uint64_t, int);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
