#pragma once

#include <variant>
#include <vector>

#include <json.hpp>

#include "nilcomm/exactalg/matrix.hpp"
#include "nilcomm/hilbert/poly.hpp"

namespace nilcomm {

// Ideal of finite colength in the local ring of the plane at the origin, stored
// through its staircase: the standard monomials for a monomial order, and the
// normal form of every monomial of degree <= cap. Construction requires
// (x, y)^cap to lie in the ideal, so nothing above the cap is lost.
template <class K>
class StaircaseIdeal {
 public:
  // Ideal generated by `generators`; all must share the cap and field.
  static StaircaseIdeal from_generators(const std::vector<LocalPoly<K>>& generators, int cap, const Field<K>& field,
                                        MonomialOrder order = MonomialOrder::graded);
  // `span` must already be closed under multiplication by x and y modulo degree cap + 1.
  static StaircaseIdeal from_span(const std::vector<LocalPoly<K>>& span, int cap, const Field<K>& field,
                                  MonomialOrder order = MonomialOrder::graded);

  int cap() const { return cap_; }
  const Field<K>& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  int colength() const { return static_cast<int>(staircase_.size()); }
  // Standard monomials, increasing for the order.
  const std::vector<Monomial>& staircase() const { return staircase_; }
  bool is_standard(const Monomial& m) const;

  // Coordinates of f modulo the ideal on the staircase. Terms above the cap are dropped.
  Vec<K> coordinates(const LocalPoly<K>& f) const;
  LocalPoly<K> normal_form(const LocalPoly<K>& f) const;
  bool contains(const LocalPoly<K>& f) const;
  bool contains(const StaircaseIdeal& other) const;

  // Monomials outside the staircase with a factor of x or y inside it.
  std::vector<Monomial> border() const;
  // b - NF(b) for each border monomial b.
  std::vector<LocalPoly<K>> border_generators() const;
  // m - NF(m) for the minimal monomials m outside the staircase: the reduced
  // Groebner basis of the ideal for this order.
  std::vector<LocalPoly<K>> reduced_generators() const;

  // Multiplication by x (var = 0) or y (var = 1) on the quotient, in the staircase basis.
  Matrix<K> multiplication_matrix(int var) const;

  // Same ideal, whatever the orders.
  bool operator==(const StaircaseIdeal& o) const;

  // Generators in increasing order, as "(y, x^3)".
  std::string to_string() const;

 private:
  StaircaseIdeal(int cap, Field<K> field, MonomialOrder order)
      : cap_(cap), field_(field), order_(order), normal_forms_(0, 0, field) {}
  template <class Echelon>
  void finish(Echelon& echelon);

  int cap_;
  Field<K> field_;
  MonomialOrder order_;
  std::vector<Monomial> staircase_;
  std::vector<int> position_;   // monomial index -> staircase position, or -1
  Matrix<K> normal_forms_;      // row per monomial index, column per standard monomial
};

// {"cap":n,"field":"Q","order":"graded","staircase":["1","x"],"generators":[{"lead":"y","tail":{"x":"-1/2"}}]}.
// The generators are the reduced ones; "field" and "order" are optional on input,
// and a given "staircase" must match the computed one.
template <class K>
nlohmann::json ideal_to_json(const StaircaseIdeal<K>& ideal);

using AnyIdeal = std::variant<StaircaseIdeal<Rational>, StaircaseIdeal<Residue>>;

AnyIdeal ideal_from_json(const nlohmann::json& j);

template <class K>
StaircaseIdeal<K> ideal_from_json(const nlohmann::json& j, const Field<K>& field);

// Ideal written as a generator list, e.g. "(x^2, x*y - y^2, y^3)". The cap is the
// smallest one from the generator degree up to max_cap at which (x, y)^cap lies in
// the ideal; invalid_argument if there is none.
template <class K>
StaircaseIdeal<K> parse_ideal(const std::string& text, const Field<K>& field,
                              MonomialOrder order = MonomialOrder::graded, int max_cap = 32);

}  // namespace nilcomm
