#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/exactalg/linalg.hpp"
#include "nilcomm/orbits/components.hpp"
#include "nilcomm/orbits/flag_orbits.hpp"
#include "nilcomm/orbits/tangent.hpp"

using namespace nilcomm;

namespace {

const RationalField QQ;

// Random invertible element of the group of w with small integer entries.
Matrix<Rational> random_group_element(Rng& rng, const FlagAlgebra& w) {
  while (true) {
    Matrix<Rational> g(w.n(), w.n(), QQ);
    for (auto [r, c] : w.free_positions()) g(r, c) = QQ.random(rng, 3);
    if (!is_zero(determinant(g))) return g;
  }
}

// All chains 0 < i_1 < ... < i_k = n.
std::vector<FlagAlgebra> all_flags(int n) {
  std::vector<FlagAlgebra> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> chain;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) chain.push_back(i);
    chain.push_back(n);
    out.emplace_back(n, chain);
  }
  return out;
}

}  // namespace

TEST_CASE("block nilpotency agrees with nilpotency, exhaustively over F2") {
  const PrimeField f2(2);
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_flags(n)) {
      const auto pos = w.free_positions();
      for (std::uint64_t mask = 0; mask < (1ull << pos.size()); ++mask) {
        Matrix<Residue> x(n, n, f2);
        for (std::size_t k = 0; k < pos.size(); ++k) x(pos[k].first, pos[k].second) = f2.from_int((mask >> k) & 1);
        CHECK(nilpotent_in_flag(x, w) == is_nilpotent(x));
      }
    }
}

TEST_CASE("transpose duality") {
  Rng rng(8);
  for (int n = 2; n <= 6; ++n) {
    const auto p1 = FlagAlgebra::parabolic(1, n), pn = FlagAlgebra::parabolic(n - 1, n);
    for (int t = 0; t < 10; ++t) {
      const auto a = random_group_element(rng, p1), b = random_group_element(rng, p1);
      const auto da = transpose_duality(a), db = transpose_duality(b);
      CHECK(pn.contains(da));
      CHECK(transpose_duality(da) == a);
      CHECK(transpose_duality(commutator(a, b)) == commutator(da, db));
    }
  }
  CHECK_THROWS_AS(transpose_duality(Matrix<Rational>::from_ints({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, QQ)), std::invalid_argument);
}

TEST_CASE("normal forms are fixed points of the classification") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : enumerate_marked(n)) CHECK(classify_p1(jordan_matrix(lam, QQ)) == lam);
  for (int n = 2; n <= 6; ++n)
    for (const auto& mu : enumerate_marked2(n)) {
      INFO(mu.to_string());
      CHECK(classify_q2(jordan_matrix(mu, QQ)) == mu);
    }
}

TEST_CASE("classification of zero and of non-members") {
  CHECK(classify_p1(Matrix<Rational>(4, 4, QQ)) == MarkedPartition(1, Partition({1, 1, 1})));
  CHECK(classify_q2(Matrix<Rational>(4, 4, QQ)) == MarkedPartition2(MarkedPartition(1, Partition({1, 1})), 0, 0));
  CHECK_THROWS_AS(classify_p1(Matrix<Rational>::identity(3, QQ)), std::invalid_argument);
  CHECK_THROWS_AS(classify_q2(jordan_matrix(Partition({3}), QQ).transpose()), std::invalid_argument);
}

TEST_CASE("classification is invariant under random conjugation") {
  Rng rng(99);
  for (int n = 2; n <= 6; ++n) {
    const auto p1 = FlagAlgebra::parabolic(1, n), q2 = FlagAlgebra::nested(2, n);
    for (const auto& lam : enumerate_marked(n)) {
      const auto g = random_group_element(rng, p1);
      const auto x = g * jordan_matrix(lam, QQ) * inverse(g);
      const auto normal = normalize_p1(x);
      CHECK(normal.label == lam);
      CHECK(p1.contains(normal.conjugator));
    }
    for (const auto& mu : enumerate_marked2(n)) {
      const auto g = random_group_element(rng, q2);
      const auto x = g * jordan_matrix(mu, QQ) * inverse(g);
      const auto normal = normalize_q2(x);
      INFO(mu.to_string());
      CHECK(normal.label == mu);
      CHECK(q2.contains(normal.conjugator));
    }
  }
}

TEST_CASE("different labels with equal Jordan type are not conjugate") {
  for (int n = 2; n <= 5; ++n) {
    const auto q2 = FlagAlgebra::nested(2, n);
    const auto labels = enumerate_marked2(n);
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        const auto xa = jordan_matrix(labels[a], QQ), xb = jordan_matrix(labels[b], QQ);
        if (jordan_type(xa) != jordan_type(xb)) continue;
        INFO(labels[a].to_string() << " vs " << labels[b].to_string());
        CHECK_FALSE(conjugating_element(xa, xb, q2, 7));
      }
  }
  const int n = 5;
  CHECK_FALSE(conjugating_element(jordan_matrix(MarkedPartition(n, Partition{}), QQ),
                                  jordan_matrix(MarkedPartition(1, Partition({n - 1})), QQ), FlagAlgebra::parabolic(1, n), 1));
}

TEST_CASE("conjugating elements certify random conjugates") {
  Rng rng(4);
  const auto w = FlagAlgebra::parabolic(2, 5);
  for (int t = 0; t < 10; ++t) {
    const auto g = random_group_element(rng, w);
    const auto x = jordan_matrix(Partition({3, 2}), QQ);
    const auto tx = g * x * inverse(g);
    const auto c = conjugating_element(x, tx, w, 100 + t);
    REQUIRE(c);
    CHECK(w.contains(*c));
    CHECK(*c * x * inverse(*c) == tx);
  }
}

TEST_CASE("component records") {
  const auto q7 = components_2(7, FlagAlgebra::nested(2, 7), QQ);
  REQUIRE(q7.size() == 3);
  for (const auto& r : q7) CHECK(r.dimension == 37);
  CHECK(to_string(q7[0].label) == "((6,()),0,1)");
  CHECK(components_2(8, FlagAlgebra::nested(2, 8), QQ).size() == 4);
  CHECK(components_2(3, FlagAlgebra::parabolic(2, 3), QQ).size() == 1);

  const auto p5 = components_p1(5, QQ);
  REQUIRE(p5.size() == 1);
  CHECK(p5[0].dimension == 20);
  CHECK(std::get<MarkedPartition>(p5[0].label) == MarkedPartition(5, Partition{}));

  for (int n = 2; n <= 8; ++n) {
    const auto p2 = FlagAlgebra::parabolic(2, n);
    for (const auto& r : components_2(n, p2, QQ)) CHECK(r.dimension - (p2.dim() - n) == n - 1);
    std::set<Partition> types;
    for (const auto& r : components_2(n, FlagAlgebra::nested(2, n), QQ)) types.insert(r.jordan_type);
    CHECK(static_cast<int>(types.size()) == n / 2);
    for (const auto& r : strata_p1(n, QQ)) CHECK(r.dimension == n * n - n + 1 - std::get<MarkedPartition>(r.label).length());
  }
  CHECK_THROWS_AS(components_2(5, FlagAlgebra::parabolic(3, 5), QQ), std::invalid_argument);
  const auto j = to_json(q7[0]);
  CHECK(j["ambient"] == "q2:7");
  CHECK(j["c"] == 1);
  CHECK(j["dim"] == 37);
}

TEST_CASE("tangent dimensions at small points") {
  const auto p12 = FlagAlgebra::parabolic(1, 2);
  const auto j2 = jordan_matrix(Partition({2}), QQ);
  const auto y = j2 * QQ.from_int(3);
  CHECK(tangent_dim(j2, y, p12) == 2);
  CHECK(tangent_dim(j2, y, p12, NilpotencyEquations::whole_matrix) == 3);

  const auto p13 = FlagAlgebra::parabolic(1, 3);
  const Matrix<Rational> zero(3, 3, QQ);
  CHECK(tangent_dim(zero, zero, p13) == 10);
  CHECK(tangent_dim(zero, zero, p13) > components_p1(3, QQ)[0].dimension);
  CHECK_THROWS_AS(tangent_dim(j2, j2.transpose(), FlagAlgebra::full(2)), std::invalid_argument);
  const PrimeField f2(2);
  CHECK_THROWS_AS(tangent_dim(Matrix<Residue>(2, 2, f2), Matrix<Residue>(2, 2, f2), p12), std::domain_error);
}

TEST_CASE("tangent spaces at generic points have the component dimension") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<ComponentRecord<Rational>> records = components_p1(n, QQ);
    for (const auto& w : {FlagAlgebra::parabolic(2, n), FlagAlgebra::nested(2, n)})
      for (auto& r : components_2(n, w, QQ)) records.push_back(r);
    for (const auto& r : records) {
      const auto check = tangent_certificate(r, 1234);
      INFO(to_string(r.label) << " in " << r.ambient.name());
      CHECK(check.matched());
      CHECK(check.bounded_below());
    }
  }
}

TEST_CASE("sampled centraliser elements are nilpotent and commute") {
  Rng rng(6);
  for (const auto& mu : enumerate_marked2(5)) {
    const auto x = jordan_matrix(mu, QQ);
    const auto w = FlagAlgebra::nested(2, 5);
    const auto y = sample_nilpotent_in_centralizer(x, w, rng);
    CHECK(w.contains(y));
    CHECK(commutator(x, y).is_zero());
    CHECK(is_nilpotent(y));
  }
}
