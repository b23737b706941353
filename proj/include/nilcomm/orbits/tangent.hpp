#pragma once

#include <cstdint>
#include <vector>

#include "nilcomm/exactalg/flag_algebra.hpp"
#include "nilcomm/exactalg/matrix.hpp"
#include "nilcomm/orbits/components.hpp"

namespace nilcomm {

// How nilpotency of x in w is linearised. `per_block` uses the power traces of
// each diagonal block of w, which cut out the nilpotent cone of w reducedly.
// `whole_matrix` uses tr(x^j) for j <= n only; inside a proper flag algebra
// those equations are not reduced, so the resulting tangent spaces are larger.
enum class NilpotencyEquations { per_block, whole_matrix };

// Dimension of the Zariski tangent space at (x, y) of the scheme of commuting
// nilpotent pairs in w: pairs (xi, eta) in w^2 with [xi, y] + [x, eta] = 0 and
// the differentials of the nilpotency equations vanishing. Needs characteristic
// 0 or greater than n.
template <class K>
int tangent_dim(const Matrix<K>& x, const Matrix<K>& y, const FlagAlgebra& w,
                NilpotencyEquations equations = NilpotencyEquations::per_block);

// Random nilpotent element of the centraliser of x in w: its reduced blocks are
// strictly upper triangular in a Jordan basis of x. When every block size of x
// occurs once this samples the whole nilpotent part of the centraliser.
template <class K>
Matrix<K> sample_nilpotent_in_centralizer(const Matrix<K>& x, const FlagAlgebra& w, Rng& rng);

struct TangentCheck {
  int expected;
  std::vector<int> observed;  // one per attempt, in order
  bool matched() const;
  bool bounded_below() const;
};

// Tangent dimensions at up to `attempts` points (representative, random y),
// stopping at the first that equals the recorded component dimension.
template <class K>
TangentCheck tangent_certificate(const ComponentRecord<K>& record, std::uint64_t seed, int attempts = 8);

}  // namespace nilcomm
