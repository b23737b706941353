#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nilcomm/centralizer/centralizer.hpp"
#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/exactalg/linalg.hpp"
#include "nilcomm/hilbert/charts.hpp"
#include "nilcomm/hilbert/correspondence.hpp"
#include "nilcomm/hilbert/ideal.hpp"
#include "nilcomm/hilbert/sampling.hpp"
#include "nilcomm/orbits/flag_orbits.hpp"
#include "nilcomm/orbits/tangent.hpp"

using namespace nilcomm;

namespace {

const RationalField QQ;
using Poly = LocalPoly<Rational>;
using Ideal = StaircaseIdeal<Rational>;

Poly mono(int a, int b, int cap) { return Poly::monomial({a, b}, cap, QQ); }

Ideal monomial_ideal(const std::vector<Monomial>& gens, int cap, MonomialOrder order = MonomialOrder::graded) {
  std::vector<Poly> polys;
  for (const auto& m : gens) polys.push_back(Poly::monomial(m, cap, QQ));
  return Ideal::from_generators(polys, cap, QQ, order);
}

std::vector<std::string> monomial_strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

// Rank of the span of all x^a y^b v, computed by plain elimination on the Krylov matrix.
template <class K>
std::size_t krylov_rank(const Matrix<K>& x, const Matrix<K>& y, const Vec<K>& v) {
  const std::size_t n = x.rows();
  Matrix<K> krylov(n, (n + 1) * (n + 1), x.field());
  std::size_t col = 0;
  Matrix<K> xa = Matrix<K>::identity(n, x.field());
  for (std::size_t a = 0; a <= n; ++a, xa = xa * x) {
    Matrix<K> yb = Matrix<K>::identity(n, x.field());
    for (std::size_t b = 0; b <= n; ++b, yb = yb * y) krylov.set_column(col++, xa * (yb * v));
  }
  return rank(krylov);
}

template <class K>
Vec<K> evaluate(const LocalPoly<K>& p, const CommutingTriple<K>& t) {
  Vec<K> out(t.v.size(), t.x.field().zero());
  for (const auto& [m, c] : p.terms()) {
    const auto w = power(t.x, m.x) * (power(t.y, m.y) * t.v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * w[i];
  }
  return out;
}

bool strictly_upper(const Matrix<Rational>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c <= r; ++c)
      if (!is_zero(m(r, c))) return false;
  return true;
}

CommutingTriple<Rational> fat_point_triple() {
  // Multiplication by x and y on K[x,y]/(x^2, xy, y^2) in the basis 1, x, y.
  auto x = Matrix<Rational>::from_ints({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}, QQ);
  auto y = Matrix<Rational>::from_ints({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}, QQ);
  return {x, y, {QQ.one(), QQ.zero(), QQ.zero()}};
}

CommutingTriple<Rational> single_block(int n) {
  Vec<Rational> v(n, QQ.zero());
  v[n - 1] = QQ.one();
  return {jordan_matrix(Partition({n}), QQ), Matrix<Rational>(n, n, QQ), v};
}

}  // namespace

TEST_CASE("monomials") {
  for (const auto* s : {"1", "x", "y", "x^2", "x*y", "x^3*y^2", "y^7"}) CHECK(Monomial::parse(s).to_string() == s);
  CHECK(Monomial::parse("y*x") == Monomial{1, 1});
  CHECK_THROWS_AS(Monomial::parse("x*x"), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::parse("x^0"), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::parse("z"), std::invalid_argument);
  for (std::size_t i = 0; i < monomial_count(6); ++i) CHECK(monomial_index(monomial_at(i)) == i);
  CHECK(less(MonomialOrder::graded, {3, 0}, {0, 4}));
  CHECK(less(MonomialOrder::graded, {2, 0}, {1, 1}));
  CHECK(less(MonomialOrder::lex, {5, 0}, {0, 1}));
  CHECK(monomial_strings(monomials_up_to(2, MonomialOrder::graded)) ==
        std::vector<std::string>{"1", "x", "y", "x^2", "x*y", "y^2"});
}

TEST_CASE("truncated polynomials") {
  const auto p = mono(1, 0, 3) + mono(0, 1, 3) * QQ.from_ratio(-1, 2);
  CHECK(p.to_string() == "-1/2*y + x");
  const auto cube = p * p * p;
  CHECK(cube.terms().size() == 4);
  CHECK((cube * p).is_zero());
  CHECK(mono(2, 2, 3).is_zero());
}

TEST_CASE("polynomial and ideal text") {
  const auto p = parse_poly<Rational>("y^2 - 1/2*x + 3 - x*y", 3, QQ);
  CHECK(p.to_string() == "y^2 - x*y - 1/2*x + 3");
  CHECK(parse_poly<Rational>(p.to_string(), 3, QQ) == p);
  CHECK(parse_poly<Rational>("-x + x", 2, QQ).is_zero());
  CHECK_THROWS_AS(parse_terms("2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_terms("x +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_terms(""), std::invalid_argument);

  const auto fat = parse_ideal("(x^2, x*y, y^2)", QQ);
  CHECK(fat.colength() == 3);
  CHECK(fat == monomial_ideal({{2, 0}, {1, 1}, {0, 2}}, 2));
  const auto curve = parse_ideal("(y - x^2, x^5)", QQ, MonomialOrder::lex);
  CHECK(curve.colength() == 5);
  CHECK(curve.to_string() == "(x^5, y - x^2)");
  CHECK(parse_ideal("(y, x^4)", QQ).to_string() == "(y, x^4)");
  CHECK(parse_ideal("(1)", QQ).colength() == 0);
  CHECK(parse_ideal<Residue>("x^3, y - 2*x", PrimeField(7)).colength() == 3);
  CHECK_THROWS_AS(parse_ideal("(x)", QQ, MonomialOrder::graded, 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal("(x^2, y^2", QQ), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal("(x^2, z)", QQ), std::invalid_argument);
}

TEST_CASE("monomial ideals against a divisibility count") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int cap = static_cast<int>(uniform_int(rng, 1, 7));
    std::vector<Monomial> gens{{cap, 0}, {0, cap}};
    for (int g = 0; g < 3; ++g) {
      const int d = static_cast<int>(uniform_int(rng, 1, cap));
      const int yy = static_cast<int>(uniform_int(rng, 0, d));
      gens.push_back({d - yy, yy});
    }
    int outside = 0;
    // (x^cap, y^cap) contains every monomial of degree 2 cap - 1.
    const int ideal_cap = 2 * cap - 1;
    for (const auto& m : monomials_up_to(ideal_cap, MonomialOrder::graded))
      if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); })) ++outside;
    for (auto order : {MonomialOrder::graded, MonomialOrder::lex})
      CHECK(monomial_ideal(gens, ideal_cap, order).colength() == outside);
  }
}

TEST_CASE("staircase ideals") {
  const auto fat = monomial_ideal({{2, 0}, {1, 1}, {0, 2}}, 3);
  CHECK(fat.colength() == 3);
  CHECK(monomial_strings(fat.staircase()) == std::vector<std::string>{"1", "x", "y"});
  CHECK(fat.to_string() == "(x^2, x*y, y^2)");
  CHECK(monomial_strings(fat.border()) == std::vector<std::string>{"x^2", "x*y", "y^2"});

  CHECK_THROWS_AS(monomial_ideal({{0, 1}}, 3), std::invalid_argument);

  // (y - x^2, x^3) has colength 3 in either order, and the orders agree on the ideal.
  const auto gens = std::vector<Poly>{mono(0, 1, 3) - mono(2, 0, 3), mono(3, 0, 3)};
  const auto graded = Ideal::from_generators(gens, 3, QQ);
  const auto lex = Ideal::from_generators(gens, 3, QQ, MonomialOrder::lex);
  CHECK(graded.colength() == 3);
  CHECK(lex.colength() == 3);
  CHECK(graded == lex);
  CHECK(monomial_strings(graded.staircase()) == std::vector<std::string>{"1", "x", "y"});
  CHECK(monomial_strings(lex.staircase()) == std::vector<std::string>{"1", "x", "x^2"});
  CHECK(lex.to_string() == "(x^3, y - x^2)");
  CHECK(graded.contains(mono(1, 1, 3)));
  CHECK_FALSE(graded == fat);
  CHECK(fat.contains(monomial_ideal({{3, 0}, {1, 1}, {0, 2}}, 3)));
  CHECK(monomial_ideal({{3, 0}, {1, 1}, {0, 2}}, 3).contains(fat) == false);
  CHECK(monomial_ideal({{1, 0}, {0, 2}}, 3).contains(fat));

  const auto mx = graded.multiplication_matrix(0), my = graded.multiplication_matrix(1);
  CHECK(commutator(mx, my).is_zero());
  CHECK(is_nilpotent(mx));
  CHECK(is_nilpotent(my));
}

TEST_CASE("ideal JSON round trip") {
  const auto gens = std::vector<Poly>{mono(0, 2, 4) + mono(3, 0, 4) * QQ.from_ratio(-1, 2), mono(1, 1, 4), mono(4, 0, 4)};
  const auto ideal = Ideal::from_generators(gens, 4, QQ);
  const auto j = ideal_to_json(ideal);
  CHECK(j["cap"] == 4);
  CHECK(j["field"] == "Q");
  const auto back = ideal_from_json(j, QQ);
  CHECK(back == ideal);
  CHECK(ideal_to_json(back).dump() == j.dump());
  const auto any = ideal_from_json(j);
  CHECK(std::holds_alternative<Ideal>(any));

  auto bad = j;
  bad["staircase"] = nlohmann::json::array({"1"});
  CHECK_THROWS_AS(ideal_from_json(bad, QQ), std::invalid_argument);
  const nlohmann::json minimal = nlohmann::json::parse(R"({"cap":2,"generators":[{"lead":"y"},{"lead":"x^2"}]})");
  CHECK(ideal_from_json(minimal, QQ).colength() == 2);
}

TEST_CASE("cyclicity") {
  const auto t = single_block(4);
  const auto c = is_cyclic(t);
  CHECK(c.cyclic);
  CHECK(monomial_strings(c.staircase) == std::vector<std::string>{"1", "x", "x^2", "x^3"});
  CHECK_FALSE(is_cyclic(CommutingTriple<Rational>{Matrix<Rational>(3, 3, QQ), Matrix<Rational>(3, 3, QQ), {QQ.one(), QQ.one(), QQ.one()}}).cyclic);
  const auto fat = is_cyclic(fat_point_triple());
  CHECK(fat.cyclic);
  CHECK(monomial_strings(fat.staircase) == std::vector<std::string>{"1", "x", "y"});
  CHECK_THROWS_AS(is_cyclic(CommutingTriple<Rational>{Matrix<Rational>::identity(2, QQ), Matrix<Rational>(2, 2, QQ), {QQ.one(), QQ.one()}}),
                  std::invalid_argument);
}

TEST_CASE("evaluation ideals") {
  for (int n = 1; n <= 6; ++n) {
    const auto j = evaluation_ideal(single_block(n));
    CHECK(j.colength() == n);
    CHECK(j == monomial_ideal({{0, 1}, {n, 0}}, n));
  }
  CHECK(evaluation_ideal(single_block(4)).to_string() == "(y, x^4)");
  CHECK(evaluation_ideal(fat_point_triple()).to_string() == "(x^2, x*y, y^2)");

  // The normal form preserves evaluation at the triple; every degree-n monomial reduces to zero.
  Rng rng(17);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const auto t = random_cyclic_triple(FlagAlgebra::full(n), QQ, rng);
      const auto j = evaluation_ideal(t);
      CHECK(j.colength() == n);
      for (const auto& m : monomials_up_to(n, MonomialOrder::graded))
        if (m.degree() == n) CHECK(j.contains(Poly::monomial(m, n, QQ)));
      Poly p(n, QQ);
      for (const auto& m : monomials_up_to(n, MonomialOrder::graded)) p.add_term(m, QQ.random(rng));
      CHECK(evaluate(p, t) == evaluate(j.normal_form(p), t));
      const auto value = evaluate(p, t);
      CHECK(j.contains(p) == std::all_of(value.begin(), value.end(), [](const Rational& q) { return is_zero(q); }));
      CHECK(j.contains(p - j.normal_form(p)));
    }
  CHECK_THROWS_AS(evaluation_ideal(CommutingTriple<Rational>{Matrix<Rational>(2, 2, QQ), Matrix<Rational>(2, 2, QQ), {QQ.one(), QQ.zero()}}),
                  std::invalid_argument);
}

TEST_CASE("pairs from ideals") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      const auto j = monomial_ideal({{0, 1}, {n, 0}}, n), i = monomial_ideal({{0, 1}, {n - k, 0}}, n);
      const auto t = pair_from_ideals(i, j, k);
      const auto w = FlagAlgebra::parabolic(k, n);
      CHECK(w.contains(t.x));
      CHECK(t.y.is_zero());
      CHECK(jordan_type(t.x) == Partition({n}));
      CHECK(evaluation_ideal(t) == j);
      const auto chain = nested_ideals(t, w);
      REQUIRE(chain.size() == 2);
      CHECK(chain[1] == i);
    }

  const auto fat = monomial_ideal({{2, 0}, {1, 1}, {0, 2}}, 3), maximal = monomial_ideal({{1, 0}, {0, 1}}, 3);
  const auto t = pair_from_ideals(maximal, fat, 2);
  CHECK(FlagAlgebra::parabolic(2, 3).contains(t.x));
  CHECK(FlagAlgebra::parabolic(2, 3).contains(t.y));
  CHECK(evaluation_ideal(t) == fat);
  CHECK(nested_ideals(t, FlagAlgebra::parabolic(2, 3))[1] == maximal);

  CHECK_THROWS_AS(pair_from_ideals(fat, maximal, 2), std::invalid_argument);
  CHECK_THROWS_AS(pair_from_ideals(maximal, fat, 1), std::invalid_argument);
  CHECK(pair_from_ideals(fat, fat, 0).x == evaluation_ideal(fat_point_triple()).multiplication_matrix(0));
}

TEST_CASE("round trip through the nested ideals is a flag-group conjugacy") {
  Rng rng(23);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto w = FlagAlgebra::parabolic(k, n);
      for (int trial = 0; trial < 6; ++trial) {
        const auto t = random_cyclic_triple(w, QQ, rng);
        const auto chain = nested_ideals(t, w);
        CHECK(static_cast<int>(chain.size()) == (k == 0 || k == n ? 1 : 2));
        const auto back = pair_from_chain(chain);
        CHECK(back.algebra == w);
        const auto g = triple_conjugator(t, back.triple, w);
        REQUIRE(g);
        CHECK(*g * t.x == back.triple.x * *g);
        CHECK(*g * t.v == back.triple.v);
        CHECK(conjugating_element(std::vector{std::pair{t.x, back.triple.x}, std::pair{t.y, back.triple.y}}, w, 3));
      }
    }
}

TEST_CASE("full flags give a complete chain") {
  Rng rng(31);
  for (int n = 2; n <= 6; ++n) {
    const auto w = FlagAlgebra::nested(n, n);
    const auto t = random_cyclic_triple(w, QQ, rng);
    const auto chain = nested_ideals(t, w);
    REQUIRE(static_cast<int>(chain.size()) == n);
    for (int j = 0; j < n; ++j) CHECK(chain[j].colength() == n - j);
    for (int j = 0; j + 1 < n; ++j) {
      CHECK(chain[j + 1].contains(chain[j]));
      CHECK_FALSE(chain[j].contains(chain[j + 1]));
    }
    const auto back = pair_from_chain(chain);
    CHECK(back.algebra == w);
    CHECK(triple_conjugator(t, back.triple, w));
  }
}

TEST_CASE("cyclic vectors") {
  for (int n = 1; n <= 5; ++n) {
    const auto t = single_block(n);
    const auto v = find_cyclic_vector(t.x, t.y, 1);
    REQUIRE(v);
    CHECK_FALSE(is_zero((*v)[n - 1]));
  }
  CHECK_FALSE(find_cyclic_vector(Matrix<Rational>(3, 3, QQ), Matrix<Rational>(3, 3, QQ), 1));
  CHECK_THROWS_AS(find_cyclic_vector(Matrix<Rational>(2, 2, QQ), Matrix<Rational>(2, 2, QQ), 1, CyclicSearch{4, true}),
                  std::invalid_argument);

  // Exhaustive search over F2 against a scan of all vectors with a Krylov rank test.
  const PrimeField f2(2);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      const auto x = jordan_matrix(lam, f2);
      const auto strict = kernel_in_span(centralizer_solve(x, FlagAlgebra::nested(n, n)), f2, [&](const Matrix<Residue>& m) {
        Vec<Residue> diag;
        for (int i = 0; i < n; ++i) diag.push_back(m(i, i));
        return diag;
      });
      for (std::uint64_t mask = 0; mask < (1ull << strict.size()); ++mask) {
        Matrix<Residue> y(n, n, f2);
        for (std::size_t b = 0; b < strict.size(); ++b)
          if (mask & (1ull << b)) y += strict[b];
        bool exists = false;
        for (std::uint64_t code = 0; code < (1ull << n) && !exists; ++code) {
          Vec<Residue> v(n, f2.zero());
          for (int i = 0; i < n; ++i) v[i] = f2.from_int((code >> i) & 1);
          exists = krylov_rank(x, y, v) == static_cast<std::size_t>(n);
        }
        const auto found = find_cyclic_vector(x, y, 9, CyclicSearch{2, true});
        CHECK(found.has_value() == exists);
        if (found) CHECK(krylov_rank(x, y, *found) == static_cast<std::size_t>(n));
      }
    }
}

TEST_CASE("simultaneous flags") {
  for (int n = 1; n <= 6; ++n) {
    const auto j = jordan_matrix(Partition({n}), QQ);
    for (const auto& y : {j, j * j}) {
      const auto g = simultaneous_flag(j, y);
      const auto gi = inverse(g);
      CHECK(strictly_upper(gi * j * g));
      CHECK(strictly_upper(gi * y * g));
    }
  }
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 1, 8));
    const auto [x, y] = random_commuting_nilpotent_pair(n, QQ, rng);
    const auto g = simultaneous_flag(x, y);
    const auto gi = inverse(g);
    CHECK(strictly_upper(gi * x * g));
    CHECK(strictly_upper(gi * y * g));
  }
  CHECK_THROWS_AS(simultaneous_flag(Matrix<Rational>::identity(2, QQ), Matrix<Rational>(2, 2, QQ)), std::invalid_argument);
}

TEST_CASE("commuting nilpotent pairs") {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 1, 8));
    const auto [x, y] = random_commuting_nilpotent_pair(n, QQ, rng);
    CHECK(commutator(x, y).is_zero());
    for (int i = 0; i <= n; ++i) CHECK((power(x, i) * power(y, n - i)).is_zero());
  }
  // In p_{1,n} write x = [[x1, x2], [0, x3]]; commuting forces x2 y3 - y2 x3 = 0.
  for (int n = 2; n <= 6; ++n) {
    const auto w = FlagAlgebra::parabolic(1, n);
    for (const auto& lam : enumerate_marked(n)) {
      const auto [g, gi] = random_unimodular_pair(w, QQ, rng);
      const auto x0 = jordan_matrix(lam, QQ);
      const auto x = g * x0 * gi, y = g * sample_nilpotent_in_centralizer(x0, w, rng) * gi;
      const auto rel = x.block(0, 1, 1, n - 1) * y.block(1, 1, n - 1, n - 1) - y.block(0, 1, 1, n - 1) * x.block(1, 1, n - 1, n - 1);
      CHECK(rel.is_zero());
    }
  }
}

TEST_CASE("unimodular samples") {
  Rng rng(47);
  const auto w = FlagAlgebra::parabolic(2, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [g, gi] = random_unimodular_pair(w, QQ, rng);
    CHECK(w.contains(g));
    CHECK(g * gi == Matrix<Rational>::identity(5, QQ));
  }
}

TEST_CASE("two-parameter family I_n inside I_k") {
  const Vec<Rational> zeros(2, QQ.zero());
  const auto fam = family_In_Ik(5, 2, zeros, QQ.zero(), QQ.zero(), QQ);
  CHECK(fam.fine.colength() == 5);
  CHECK(fam.fine == monomial_ideal({{4, 0}, {1, 1}, {0, 2}}, 5));
  CHECK(fam.coarse == monomial_ideal({{2, 0}, {0, 1}}, 5));
  CHECK(fam.contained);

  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    Vec<Rational> a(3);
    for (auto& e : a) e = QQ.random(rng);
    const auto f = family_In_Ik(6, 3, a, QQ.random(rng), QQ.random(rng), QQ);
    CHECK(f.fine.colength() == 6);
    CHECK(f.coarse.colength() == 3);
    CHECK(f.contained);
  }

  // Reduced lex bases separate parameter values.
  std::vector<std::pair<Ideal, Ideal>> seen;
  for (int code = 0; code < 24; ++code) {
    Vec<Rational> a{QQ.from_int(code % 2), QQ.from_int((code / 2) % 2)};
    const auto f = family_In_Ik(5, 2, a, QQ.from_int((code / 4) % 2), QQ.from_int(code / 8), QQ, MonomialOrder::lex);
    for (const auto& [fine, coarse] : seen) CHECK_FALSE((fine == f.fine && coarse == f.coarse));
    seen.emplace_back(f.fine, f.coarse);
  }
  CHECK_THROWS_AS(family_In_Ik(5, 1, zeros, QQ.zero(), QQ.zero(), QQ), std::invalid_argument);
  CHECK_THROWS_AS(family_In_Ik(5, 2, Vec<Rational>(1, QQ.zero()), QQ.zero(), QQ.zero(), QQ), std::invalid_argument);

  const PrimeField fp(10007);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 4, 10)), k = static_cast<int>(uniform_int(rng, 2, n - 2));
    Vec<Residue> a(n - 3);
    for (auto& e : a) e = fp.random(rng);
    const auto f = family_In_Ik(n, k, a, fp.random(rng), fp.random(rng), fp);
    CHECK(f.fine.colength() == n);
    CHECK(f.coarse.colength() == k);
    CHECK(f.contained);
  }
}

TEST_CASE("cell ideals") {
  for (int a = 1; a <= 4; ++a) {
    const auto cell = bb_cell_ideal(a, a, CellParameters<Rational>{Vec<Rational>(a - 1, QQ.zero()), Vec<Rational>(a - 1, QQ.zero()), {}}, QQ);
    CHECK(cell == monomial_ideal({{a, 0}, {0, 2}}, 2 * a));
    CHECK(cell.colength() == 2 * a);
  }
  const auto small = bb_cell_ideal(1, 3, CellParameters<Rational>{Vec<Rational>(1, QQ.zero()), {}, Vec<Rational>(1, QQ.zero())}, QQ);
  CHECK(monomial_strings(small.staircase()) == std::vector<std::string>{"1", "x", "y", "x^2"});
  CHECK(small.to_string() == "(x*y, y^2, x^3)");

  Rng rng(59);
  auto random_params = [&](int a, int b) { return random_cell_parameters(a, b, QQ, rng); };
  for (int n = 2; n <= 9; ++n)
    for (int a = 1; 2 * a <= n; ++a) {
      const int b = n - a;
      auto p = random_params(a, b);
      CHECK(bb_cell_ideal(a, b, p, QQ).colength() == n);
      if (b - a == 1) {
        p.e[0] = QQ.one();
        CHECK(is_curvilinear(bb_cell_ideal(a, b, p, QQ)));
        p.e[0] = QQ.zero();
        CHECK_FALSE(is_curvilinear(bb_cell_ideal(a, b, p, QQ)));
      } else if (b == a && a >= 2) {
        p.c[0] = QQ.one();
        CHECK(is_curvilinear(bb_cell_ideal(a, b, p, QQ)));
        p.c[0] = QQ.zero();
        CHECK_FALSE(is_curvilinear(bb_cell_ideal(a, b, p, QQ)));
      } else if (b - a >= 2) {
        CHECK_FALSE(is_curvilinear(bb_cell_ideal(a, b, p, QQ)));
      }
    }
  CHECK(is_curvilinear(monomial_ideal({{0, 1}, {5, 0}}, 5)));
  CHECK_THROWS_AS(bb_cell_ideal(2, 4, CellParameters<Rational>{}, QQ), std::invalid_argument);
}

TEST_CASE("nested family over a cell") {
  const CellParameters<Rational> zero{Vec<Rational>(3, QQ.zero()), {}, Vec<Rational>(1, QQ.zero())};
  for (int t = 0; t <= 1; ++t) {
    const auto f = nested_zt_family(1, 5, zero, QQ.from_int(t), QQ);
    CHECK(f.fine == monomial_ideal({{5, 0}, {1, 1}, {0, 2}}, 6));
    CHECK(f.coarse == monomial_ideal({{4, 0}, {0, 1}}, 6));
    CHECK(f.coarse.colength() == 4);
    CHECK(f.contained);
  }
  Rng rng(61);
  for (int n = 4; n <= 10; ++n)
    for (int a = 1; n - 2 * a >= 2; ++a) {
      const int b = n - a;
      CellParameters<Rational> p;
      for (int i = 0; i < b - a - 1; ++i) p.c.push_back(QQ.random(rng));
      for (int i = 0; i < a - 1; ++i) p.d.push_back(QQ.random(rng));
      for (int i = 0; i < a; ++i) p.e.push_back(QQ.random(rng));
      const auto f = nested_zt_family(a, b, p, QQ.random(rng), QQ);
      CHECK(f.fine.colength() == n);
      CHECK(f.fine.colength() - f.coarse.colength() == 2);
      CHECK(f.contained);
    }
  CHECK_THROWS_AS(nested_zt_family(2, 3, CellParameters<Rational>{{}, {QQ.zero()}, {QQ.zero(), QQ.zero()}}, QQ.zero(), QQ),
                  std::invalid_argument);
}
