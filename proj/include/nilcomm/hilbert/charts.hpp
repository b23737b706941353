#pragma once

#include <vector>

#include "nilcomm/hilbert/ideal.hpp"

namespace nilcomm {

template <class K>
struct IdealPair {
  StaircaseIdeal<K> fine;    // colength n
  StaircaseIdeal<K> coarse;  // expected to contain `fine`
  bool contained;            // fine is inside coarse
};

// I_n = (x^{n-1}, yx + sum_{i=2}^{n-2} a_i x^i, y^2 + sum_{i=2}^{n-2} a_i y x^{i-1} + b x^{n-2})
// and the colength-k ideal (x^k, y + sum_{i=2}^{n-2} a_i x^{i-1} - c x^{k-1}), which is
// (x^k, y - c x^{k-1}) after the change of coordinates y -> y - sum a_i x^{i-1}
// that straightens I_n. `a` holds a_2, ..., a_{n-2}; needs 2 <= k <= n - 2.
template <class K>
IdealPair<K> family_In_Ik(int n, int k, const Vec<K>& a, const K& b, const K& c, const Field<K>& field,
                          MonomialOrder order = MonomialOrder::graded);

// Coordinates on the cell of the punctual Hilbert scheme attached to the
// partition (2^a, 1^{b-a}), n = a + b. For b = a the ideal is
// (x^a, y^2 + sum_{i=1}^{a-1} (c_i x^i + d_i x^i y)), so c and d have a - 1 entries
// and e is empty. For b > a the generators are
//   P0 = x^b,
//   P1 = y x^a + sum_{i=1}^{b-a-1} c_i x^{a+i},
//   P2 = y^2 + sum_{i=1}^{b-a-1} c_i y x^i + sum_{i=1}^{a-1} d_i (y x^i + sum_{j=1}^{b-a-1} c_j x^{i+j})
//        + sum_{i=b-a}^{b-1} e_i x^i,
// with b - a - 1, a - 1 and a entries in c, d, e.
template <class K>
struct CellParameters {
  Vec<K> c;
  Vec<K> d;
  Vec<K> e;
};

// Parameters of the right sizes for the cell (a, b), drawn with field.random.
template <class K>
CellParameters<K> random_cell_parameters(int a, int b, const Field<K>& field, Rng& rng);

template <class K>
std::vector<LocalPoly<K>> bb_cell_generators(int a, int b, const CellParameters<K>& params, const Field<K>& field);

template <class K>
StaircaseIdeal<K> bb_cell_ideal(int a, int b, const CellParameters<K>& params, const Field<K>& field,
                                MonomialOrder order = MonomialOrder::graded);

// For b - a >= 2: the cell ideal (P0, P1, P2) of colength n together with
// (P0/x, P1/x + t x^{b-1}, P2) of colength n - 2.
template <class K>
IdealPair<K> nested_zt_family(int a, int b, const CellParameters<K>& params, const K& t, const Field<K>& field,
                              MonomialOrder order = MonomialOrder::graded);

// Whether the quotient has embedding dimension at most one, i.e. the ideal
// contains an element with a nonzero linear part (or has colength <= 1).
template <class K>
bool is_curvilinear(const StaircaseIdeal<K>& ideal);

}  // namespace nilcomm
