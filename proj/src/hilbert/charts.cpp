#include "nilcomm/hilbert/charts.hpp"

#include <stdexcept>
#include <string>

namespace nilcomm {

namespace {

template <class K>
LocalPoly<K> term(const K& c, int xe, int ye, int cap, const Field<K>& field) {
  LocalPoly<K> p(cap, field);
  p.add_term({xe, ye}, c);
  return p;
}

template <class K>
LocalPoly<K> mono(int xe, int ye, int cap, const Field<K>& field) {
  return LocalPoly<K>::monomial({xe, ye}, cap, field);
}

void require_size(std::size_t got, int want, const char* what) {
  if (static_cast<int>(got) != want)
    throw std::invalid_argument(std::string("expected ") + std::to_string(want) + " values for " + what + ", got " +
                                std::to_string(got));
}

}  // namespace

template <class K>
IdealPair<K> family_In_Ik(int n, int k, const Vec<K>& a, const K& b, const K& c, const Field<K>& field,
                          MonomialOrder order) {
  if (k < 2 || k > n - 2) throw std::invalid_argument("family_In_Ik needs 2 <= k <= n - 2");
  require_size(a.size(), n - 3, "a_2..a_{n-2}");
  const int cap = n;
  auto coeff = [&](int i) { return a[i - 2]; };

  LocalPoly<K> g1 = mono<K>(1, 1, cap, field), g2 = mono<K>(0, 2, cap, field);
  for (int i = 2; i <= n - 2; ++i) {
    g1 += term(coeff(i), i, 0, cap, field);
    g2 += term(coeff(i), i - 1, 1, cap, field);
  }
  g2 += term(b, n - 2, 0, cap, field);
  auto in = StaircaseIdeal<K>::from_generators({mono<K>(n - 1, 0, cap, field), g1, g2}, cap, field, order);

  LocalPoly<K> h = mono<K>(0, 1, cap, field);
  for (int i = 2; i <= n - 2; ++i) h += term(coeff(i), i - 1, 0, cap, field);
  h -= term(c, k - 1, 0, cap, field);
  auto ik = StaircaseIdeal<K>::from_generators({mono<K>(k, 0, cap, field), h}, cap, field, order);

  const bool contained = ik.contains(in);
  return {std::move(in), std::move(ik), contained};
}

template <class K>
CellParameters<K> random_cell_parameters(int a, int b, const Field<K>& field, Rng& rng) {
  if (a < 1 || b < a) throw std::invalid_argument("cell needs b >= a >= 1");
  auto draw = [&](int count) {
    Vec<K> out;
    for (int i = 0; i < count; ++i) out.push_back(field.random(rng));
    return out;
  };
  if (b == a) return {draw(a - 1), draw(a - 1), {}};
  const auto c = draw(b - a - 1);
  const auto d = draw(a - 1);
  return {c, d, draw(a)};
}

template <class K>
std::vector<LocalPoly<K>> bb_cell_generators(int a, int b, const CellParameters<K>& params, const Field<K>& field) {
  if (a < 1 || b < a) throw std::invalid_argument("cell needs b >= a >= 1");
  const int cap = a + b;
  if (b == a) {
    require_size(params.c.size(), a - 1, "c");
    require_size(params.d.size(), a - 1, "d");
    require_size(params.e.size(), 0, "e");
    LocalPoly<K> p1 = mono<K>(0, 2, cap, field);
    for (int i = 1; i <= a - 1; ++i) {
      p1 += term(params.c[i - 1], i, 0, cap, field);
      p1 += term(params.d[i - 1], i, 1, cap, field);
    }
    return {mono<K>(a, 0, cap, field), p1};
  }
  require_size(params.c.size(), b - a - 1, "c");
  require_size(params.d.size(), a - 1, "d");
  require_size(params.e.size(), a, "e");
  auto c = [&](int i) { return params.c[i - 1]; };
  LocalPoly<K> p1 = mono<K>(a, 1, cap, field);
  for (int i = 1; i <= b - a - 1; ++i) p1 += term(c(i), a + i, 0, cap, field);
  LocalPoly<K> p2 = mono<K>(0, 2, cap, field);
  for (int i = 1; i <= b - a - 1; ++i) p2 += term(c(i), i, 1, cap, field);
  for (int i = 1; i <= a - 1; ++i) {
    LocalPoly<K> inner = mono<K>(i, 1, cap, field);
    for (int j = 1; j <= b - a - 1; ++j) inner += term(c(j), i + j, 0, cap, field);
    p2 += inner * params.d[i - 1];
  }
  for (int i = b - a; i <= b - 1; ++i) p2 += term(params.e[i - (b - a)], i, 0, cap, field);
  return {mono<K>(b, 0, cap, field), p1, p2};
}

template <class K>
StaircaseIdeal<K> bb_cell_ideal(int a, int b, const CellParameters<K>& params, const Field<K>& field,
                                MonomialOrder order) {
  return StaircaseIdeal<K>::from_generators(bb_cell_generators(a, b, params, field), a + b, field, order);
}

template <class K>
IdealPair<K> nested_zt_family(int a, int b, const CellParameters<K>& params, const K& t, const Field<K>& field,
                              MonomialOrder order) {
  if (a < 1 || b - a < 2) throw std::invalid_argument("nested family needs a >= 1 and b - a >= 2");
  const int cap = a + b;
  const auto gens = bb_cell_generators(a, b, params, field);
  auto divided_by_x = [&](const LocalPoly<K>& p) {
    LocalPoly<K> out(cap, field);
    for (const auto& [m, coef] : p.terms()) {
      if (m.x == 0) throw std::logic_error("generator not divisible by x");
      out.add_term({m.x - 1, m.y}, coef);
    }
    return out;
  };
  auto cell = StaircaseIdeal<K>::from_generators(gens, cap, field, order);
  auto coarse = StaircaseIdeal<K>::from_generators(
      {divided_by_x(gens[0]), divided_by_x(gens[1]) + term(t, b - 1, 0, cap, field), gens[2]}, cap, field, order);
  const bool contained = coarse.contains(cell);
  return {std::move(cell), std::move(coarse), contained};
}

template <class K>
bool is_curvilinear(const StaircaseIdeal<K>& ideal) {
  const auto& field = ideal.field();
  std::vector<LocalPoly<K>> gens{mono<K>(2, 0, 2, field), mono<K>(1, 1, 2, field), mono<K>(0, 2, 2, field)};
  for (const auto& g : ideal.reduced_generators()) {
    LocalPoly<K> low(2, field);
    for (const auto& [m, coef] : g.terms()) low.add_term(m, coef);
    gens.push_back(std::move(low));
  }
  return StaircaseIdeal<K>::from_generators(gens, 2, field).colength() <= 2;
}

#define NILCOMM_INSTANTIATE(K)                                                                                        \
  template IdealPair<K> family_In_Ik(int, int, const Vec<K>&, const K&, const K&, const Field<K>&, MonomialOrder);   \
  template CellParameters<K> random_cell_parameters(int, int, const Field<K>&, Rng&);                                 \
  template std::vector<LocalPoly<K>> bb_cell_generators(int, int, const CellParameters<K>&, const Field<K>&);      \
  template StaircaseIdeal<K> bb_cell_ideal(int, int, const CellParameters<K>&, const Field<K>&, MonomialOrder);    \
  template IdealPair<K> nested_zt_family(int, int, const CellParameters<K>&, const K&, const Field<K>&,            \
                                         MonomialOrder);                                                            \
  template bool is_curvilinear(const StaircaseIdeal<K>&);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
