#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "nilcomm/exactalg/field.hpp"
#include "nilcomm/exactalg/matrix.hpp"

namespace nilcomm {

struct Monomial {
  int x = 0;
  int y = 0;

  int degree() const { return x + y; }
  bool divides(const Monomial& o) const { return x <= o.x && y <= o.y; }
  Monomial operator*(const Monomial& o) const { return {x + o.x, y + o.y}; }
  bool operator==(const Monomial&) const = default;

  // "1", "x", "y^2", "x^2*y".
  std::string to_string() const;
  static Monomial parse(const std::string& text);
};

// Total orders on monomials. `graded` compares degree, then the power of y;
// `lex` compares the power of y, then the power of x (y >> x).
enum class MonomialOrder { graded, lex };

bool less(MonomialOrder order, const Monomial& a, const Monomial& b);
std::string to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(const std::string& text);

// Monomials of degree <= cap, indexed by degree and then by the power of y.
std::size_t monomial_count(int cap);
std::size_t monomial_index(const Monomial& m);
Monomial monomial_at(std::size_t index);
// All monomials of degree <= cap, increasing for `order`.
std::vector<Monomial> monomials_up_to(int cap, MonomialOrder order);

// Polynomial in x, y with every monomial of degree > cap set to zero.
template <class K>
class LocalPoly {
 public:
  LocalPoly(int cap, Field<K> field) : cap_(cap), field_(field), coeffs_(monomial_count(cap), field.zero()) {}

  static LocalPoly monomial(const Monomial& m, int cap, Field<K> field) {
    LocalPoly p(cap, field);
    if (m.degree() <= cap) p.coeffs_[monomial_index(m)] = field.one();
    return p;
  }

  int cap() const { return cap_; }
  const Field<K>& field() const { return field_; }
  std::size_t size() const { return coeffs_.size(); }
  const Vec<K>& coefficients() const { return coeffs_; }

  K coefficient(const Monomial& m) const { return m.degree() <= cap_ ? coeffs_[monomial_index(m)] : field_.zero(); }
  // Adds c times m; ignored when m is above the cap.
  void add_term(const Monomial& m, const K& c) {
    if (m.degree() <= cap_) coeffs_[monomial_index(m)] += c;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!nilcomm::is_zero(c)) return false;
    return true;
  }

  // Nonzero terms, increasing in the graded order.
  std::vector<std::pair<Monomial, K>> terms() const {
    std::vector<std::pair<Monomial, K>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!nilcomm::is_zero(coeffs_[i])) out.emplace_back(monomial_at(i), coeffs_[i]);
    return out;
  }

  LocalPoly times(const Monomial& m) const {
    LocalPoly out(cap_, field_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!nilcomm::is_zero(coeffs_[i])) out.add_term(monomial_at(i) * m, coeffs_[i]);
    return out;
  }

  LocalPoly& operator+=(const LocalPoly& o) {
    for (const auto& [m, c] : o.terms()) add_term(m, c);
    return *this;
  }
  LocalPoly& operator-=(const LocalPoly& o) {
    for (const auto& [m, c] : o.terms()) add_term(m, -c);
    return *this;
  }
  LocalPoly& operator*=(const K& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend LocalPoly operator+(LocalPoly a, const LocalPoly& b) { return a += b; }
  friend LocalPoly operator-(LocalPoly a, const LocalPoly& b) { return a -= b; }
  friend LocalPoly operator*(LocalPoly a, const K& s) { return a *= s; }
  friend LocalPoly operator*(const K& s, LocalPoly a) { return a *= s; }

  friend LocalPoly operator*(const LocalPoly& a, const LocalPoly& b) {
    LocalPoly out(std::min(a.cap_, b.cap_), a.field_);
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    return out;
  }

  bool operator==(const LocalPoly& o) const { return cap_ == o.cap_ && coeffs_ == o.coeffs_; }

  // Terms in decreasing graded order, e.g. "y^2 - 1/2*x".
  std::string to_string() const {
    const auto t = terms();
    if (t.empty()) return "0";
    std::string out;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string coeff = field_.format(c);
      bool negative = !coeff.empty() && coeff.front() == '-';
      if (negative) coeff.erase(0, 1);
      if (out.empty()) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      const bool unit = coeff == "1";
      if (m.degree() == 0) out += coeff;
      else out += (unit ? "" : coeff + "*") + m.to_string();
    }
    return out;
  }

 private:
  int cap_;
  Field<K> field_;
  Vec<K> coeffs_;
};

struct PolyTerm {
  std::string coefficient;  // signed, e.g. "-1/2"
  Monomial monomial;
};

// Splits text such as "y^2 - 1/2*x + 3" into terms. A term is a coefficient, a
// monomial, or coefficient*monomial.
std::vector<PolyTerm> parse_terms(const std::string& text);

template <class K>
LocalPoly<K> parse_poly(const std::string& text, int cap, const Field<K>& field) {
  LocalPoly<K> p(cap, field);
  for (const auto& t : parse_terms(text)) p.add_term(t.monomial, field.parse(t.coefficient));
  return p;
}

}  // namespace nilcomm
