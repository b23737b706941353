#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilcomm/exactalg/flag_algebra.hpp"
#include "nilcomm/exactalg/matrix.hpp"
#include "nilcomm/hilbert/ideal.hpp"

namespace nilcomm {

// Commuting nilpotent x, y acting on K^n together with a vector v.
template <class K>
struct CommutingTriple {
  Matrix<K> x;
  Matrix<K> y;
  Vec<K> v;

  int n() const { return static_cast<int>(x.rows()); }
  // Throws invalid_argument unless x, y are commuting nilpotent n x n and v has length n.
  void validate() const;
};

struct Cyclicity {
  bool cyclic;
  // Monomials m, increasing in the graded order, whose vectors m(x, y) v are
  // independent of those of smaller monomials. Division closed, of size rank.
  std::vector<Monomial> staircase;
};

template <class K>
Cyclicity is_cyclic(const CommutingTriple<K>& t);

// {P : P(x, y) v = 0}, of colength n and cap n. Throws invalid_argument if t is not cyclic.
template <class K>
StaircaseIdeal<K> evaluation_ideal(const CommutingTriple<K>& t, MonomialOrder order = MonomialOrder::graded);

// For a cyclic triple with x, y in w, the ideals {P : P(x, y) v in V_i} for
// i = 0 and each proper step i of the flag of w, in that order. The chain is
// increasing, starts with the evaluation ideal and has colengths n - i.
template <class K>
std::vector<StaircaseIdeal<K>> nested_ideals(const CommutingTriple<K>& t, const FlagAlgebra& w,
                                             MonomialOrder order = MonomialOrder::graded);

template <class K>
struct FlaggedTriple {
  CommutingTriple<K> triple;
  FlagAlgebra algebra;
};

// Inverse construction for an increasing chain J = I_0 < I_1 < ... < I_r of ideals
// of strictly decreasing positive colength, all with the same monomial order. The
// triple is multiplication by x and y on K[x,y]/J with v the class of 1, written in
// a basis whose first n - colength(I_j) vectors span I_j/J for every j. The matrices
// lie in the stabiliser of that flag, which is returned alongside.
template <class K>
FlaggedTriple<K> pair_from_chain(const std::vector<StaircaseIdeal<K>>& chain);

// Two-step case: J inside I with colength(J) = n, colength(I) = n - k. The result lies in p_{k,n}.
template <class K>
CommutingTriple<K> pair_from_ideals(const StaircaseIdeal<K>& i, const StaircaseIdeal<K>& j, int k);

// The unique g with g x g^-1 = x', g y g^-1 = y' and g v = v', when it exists and
// lies in the group of w. Both triples must be cyclic.
template <class K>
std::optional<Matrix<K>> triple_conjugator(const CommutingTriple<K>& from, const CommutingTriple<K>& to,
                                           const FlagAlgebra& w);

template <class K>
struct RoundTrip {
  std::vector<StaircaseIdeal<K>> chain;
  FlaggedTriple<K> rebuilt;
  std::optional<Matrix<K>> conjugator;
  bool passed = false;
  std::string failure;  // first failed condition when !passed
};

// Cyclic triple -> nested ideals -> triple again. Passes when the chain has
// colengths n - i at the steps of w with each ideal inside the next, the rebuilt
// triple lies in w, and a conjugator in the group of w carries t to it (checked
// entrywise, not taken on trust).
template <class K>
RoundTrip<K> round_trip(const CommutingTriple<K>& t, const FlagAlgebra& w, MonomialOrder order = MonomialOrder::graded);

struct CyclicSearch {
  int random_trials = 32;
  // Over a prime field, scan every vector after the trials fail (at most 2^20 of them).
  bool exhaustive = false;
};

// A cyclic vector for (x, y): random trials, then sums of one or two basis
// vectors, then optionally an exhaustive scan. nullopt is only a proof of absence
// after an exhaustive scan.
template <class K>
std::optional<Vec<K>> find_cyclic_vector(const Matrix<K>& x, const Matrix<K>& y, std::uint64_t seed,
                                         const CyclicSearch& search = {});

// Invertible g such that g^-1 x g and g^-1 y g are strictly upper triangular.
template <class K>
Matrix<K> simultaneous_flag(const Matrix<K>& x, const Matrix<K>& y);

template <class K>
nlohmann::json triple_to_json(const CommutingTriple<K>& t);

template <class K>
CommutingTriple<K> triple_from_json(const nlohmann::json& j, const Field<K>& field);

}  // namespace nilcomm
