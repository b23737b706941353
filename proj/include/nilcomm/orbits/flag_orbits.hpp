#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilcomm/exactalg/flag_algebra.hpp"
#include "nilcomm/exactalg/matrix.hpp"
#include "nilcomm/partitions/partitions.hpp"

namespace nilcomm {

// For x in w: x is nilpotent iff every diagonal block of x is.
template <class K>
bool nilpotent_in_flag(const Matrix<K>& x, const FlagAlgebra& w);

// x -> -s x^T s^-1 with s reversing the basis. Sends p_{k,n} to p_{n-k,n}; an
// involutive Lie algebra isomorphism. Throws unless x lies in p_{1,n} or p_{n-1,n}.
template <class K>
Matrix<K> transpose_duality(const Matrix<K>& x);

template <class K>
struct P1Normal {
  MarkedPartition label;
  Matrix<K> conjugator;  // g in P_{1,n} with g x g^-1 = jordan_matrix(label)
};

template <class K>
struct Q2Normal {
  MarkedPartition2 label;
  Matrix<K> conjugator;  // g in Q_{2,n} with g x g^-1 = jordan_matrix(label)
};

// Orbit label of a nilpotent x in p_{1,n}, with an explicit conjugating element.
// Throws std::invalid_argument if x is not a nilpotent element of p_{1,n}.
template <class K>
P1Normal<K> normalize_p1(const Matrix<K>& x);

template <class K>
MarkedPartition classify_p1(const Matrix<K>& x) {
  return normalize_p1(x).label;
}

// Same for the stabiliser of V_1 < V_2 (n >= 2).
template <class K>
Q2Normal<K> normalize_q2(const Matrix<K>& x);

template <class K>
MarkedPartition2 classify_q2(const Matrix<K>& x) {
  return normalize_q2(x).label;
}

// Invertible g in the group of w with g x_i g^-1 = t_i for every pair, found by
// sampling the linear space of intertwiners. Nullopt if no sample within the
// budget is invertible (in particular when none exists).
template <class K>
std::optional<Matrix<K>> conjugating_element(const std::vector<std::pair<Matrix<K>, Matrix<K>>>& pairs,
                                             const FlagAlgebra& w, std::uint64_t seed, int budget = 32);

template <class K>
std::optional<Matrix<K>> conjugating_element(const Matrix<K>& x, const Matrix<K>& t, const FlagAlgebra& w,
                                             std::uint64_t seed, int budget = 32) {
  return conjugating_element<K>({{x, t}}, w, seed, budget);
}

}  // namespace nilcomm
