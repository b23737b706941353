#pragma once

#include <utility>

#include "nilcomm/exactalg/flag_algebra.hpp"
#include "nilcomm/exactalg/matrix.hpp"
#include "nilcomm/hilbert/correspondence.hpp"

namespace nilcomm {

// Random element of the group of w with integer entries and integral inverse:
// an upper unitriangular factor times a block-diagonal lower unitriangular one,
// off-diagonal entries in [-bound, bound].
template <class K>
Matrix<K> random_unimodular(const FlagAlgebra& w, const Field<K>& field, Rng& rng, int bound = 2);

// g in the group of w together with g^-1.
template <class K>
std::pair<Matrix<K>, Matrix<K>> random_unimodular_pair(const FlagAlgebra& w, const Field<K>& field, Rng& rng,
                                                       int bound = 2);

// Commuting nilpotent n x n pair: a Jordan matrix of uniformly chosen type, a
// random nilpotent element of its centraliser, both conjugated by a random
// unimodular matrix.
template <class K>
std::pair<Matrix<K>, Matrix<K>> random_commuting_nilpotent_pair(int n, const Field<K>& field, Rng& rng);

// Cyclic triple with x, y in w: a Jordan matrix of random type and a random
// strictly upper triangular element of its centraliser, retried until a cyclic
// vector is found, then conjugated by a random element of the group of w.
template <class K>
CommutingTriple<K> random_cyclic_triple(const FlagAlgebra& w, const Field<K>& field, Rng& rng);

}  // namespace nilcomm
