#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nilcomm/centralizer/centralizer.hpp"
#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/exactalg/linalg.hpp"
#include "nilcomm/orbits/tangent.hpp"

using namespace nilcomm;

namespace {

const RationalField QQ;

Matrix<Rational> random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix<Rational> g(n, n, QQ);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = QQ.random(rng, 3);
    if (!is_zero(determinant(g))) return g;
  }
}

std::vector<Vec<Rational>> flat(const std::vector<Matrix<Rational>>& ms) {
  std::vector<Vec<Rational>> out;
  for (const auto& m : ms) out.push_back(flatten(m));
  return out;
}

}  // namespace

TEST_CASE("Jordan matrix of (3,1)") {
  CHECK(jordan_matrix(Partition({3, 1}), QQ) ==
        Matrix<Rational>::from_ints({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, QQ));
  // Marked version keeps the head block first even when it is not the largest.
  CHECK(jordan_matrix(MarkedPartition(1, Partition({2})), QQ) ==
        Matrix<Rational>::from_ints({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}, QQ));
}

TEST_CASE("Jordan types of the two-step normal forms") {
  for (int n = 2; n <= 9; ++n) {
    const MarkedPartition top(n - 1, Partition{});
    CHECK(jordan_type(jordan_matrix(MarkedPartition2(top, 0, 1), QQ)) == Partition({n}));
    CHECK(jordan_type(jordan_matrix(MarkedPartition2(top, 0, 0), QQ)) == Partition({n - 1, 1}));
    for (int a = 1; 2 * a < n - 1; ++a) {
      const int b = n - 1 - a;
      const MarkedPartition2 mu(MarkedPartition(a, Partition({b})), b, 1);
      CHECK(jordan_type(jordan_matrix(mu, QQ)) == Partition({b + 1, a}));
    }
  }
}

TEST_CASE("two-step normal forms lie in q2 and restrict to the one-step form") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& mu : enumerate_marked2(n)) {
      const auto x = jordan_matrix(mu, QQ);
      CHECK(FlagAlgebra::nested(2, n).contains(x));
      CHECK(is_nilpotent(x));
      CHECK(x.block(1, 1, n - 1, n - 1) == jordan_matrix(mu.alpha, QQ));
    }
}

TEST_CASE("Jordan basis of random conjugates") {
  Rng rng(21);
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      const auto g = random_invertible(rng, n);
      const auto x = g * jordan_matrix(lam, QQ) * inverse(g);
      CHECK(jordan_type(x) == lam);
      const auto b = jordan_basis(x);
      CHECK(inverse(b) * x * b == jordan_matrix(lam, QQ));
    }
  CHECK_THROWS_AS(jordan_type(Matrix<Rational>::identity(2, QQ)), std::domain_error);
}

TEST_CASE("closed-form centraliser equals the solver") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      const CentralizerBasis<Rational> basis(lam.parts(), QQ);
      const auto solved = centralizer_solve(jordan_matrix(lam, QQ), FlagAlgebra::full(n));
      CHECK(basis.dim() == solved.size());
      CHECK(static_cast<int>(basis.dim()) == centralizer_dimension(lam.parts()));
      CHECK(same_span(flat(basis.matrices()), flat(solved), QQ));
    }
}

TEST_CASE("centraliser of (4,2,2,2,1,1)") {
  const Partition lam({4, 2, 2, 2, 1, 1});
  const CentralizerBasis<Rational> basis(lam.parts(), QQ);
  CHECK(basis.dim() == 54);
  Rng rng(2);
  Vec<Rational> params;
  for (std::size_t k = 0; k < basis.dim(); ++k) params.push_back(QQ.from_int(uniform_int(rng, 1, 9)));
  const auto y = basis.assemble(params);
  CHECK(basis.coordinates(y) == params);
  // The first-row matrix vanishes exactly where a shorter block maps into a longer one.
  const auto ext = pr_ext(y, lam.parts());
  for (int i = 1; i <= 6; ++i)
    for (int ip = 1; ip <= 6; ++ip) CHECK(is_zero(ext(i - 1, ip - 1)) == (lam.part(i) < lam.part(ip)));
  const auto red = pr_red(y, lam.parts());
  REQUIRE(red.size() == 3);
  CHECK(red[0].first == 4);
  CHECK(red[0].second.rows() == 1);
  CHECK(red[1].second.rows() == 3);
  CHECK(red[2].second.rows() == 2);
  CHECK(nilcone_codim(lam, {}) == 6);
  int generic_rank = 0;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const auto nilpotent = sample_nilpotent_in_centralizer(jordan_matrix(lam, QQ), FlagAlgebra::full(12), rng);
    const int rank = reduced_condition_rank(nilpotent, lam.parts());
    CHECK(rank <= 6);
    generic_rank = std::max(generic_rank, rank);
  }
  CHECK(generic_rank == 6);
  // At y = 0 every differential but the traces vanishes.
  CHECK(reduced_condition_rank(Matrix<Rational>(12, 12, QQ), lam.parts()) == 3);
  CHECK_THROWS_AS(pr_red(Matrix<Rational>::identity(10, QQ) + jordan_matrix(Partition({10}), QQ).transpose(), lam.parts()),
                  std::invalid_argument);
}

TEST_CASE("nilpotency through the reduced part, exhaustively over F2") {
  const PrimeField f2(2);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      const CentralizerBasis<Residue> basis(lam.parts(), f2);
      const std::size_t dim = basis.dim();
      for (std::uint64_t mask = 0; mask < (1ull << dim); ++mask) {
        Vec<Residue> params;
        for (std::size_t k = 0; k < dim; ++k) params.push_back(f2.from_int((mask >> k) & 1));
        const auto y = basis.assemble(params);
        CHECK(is_nilpotent(y) == is_nilpotent_via_red(y, lam.parts()));
      }
    }
}

TEST_CASE("nilcone codimension table") {
  CHECK(nilcone_codim(Partition({5}), {}) == 1);
  const Partition lam({4, 2, 1});
  CHECK(nilcone_codim(lam, {{{4, RedShape::p1}, {2, RedShape::p1}}, std::pair{4, 2}}) == 2);
  CHECK(nilcone_codim(Partition({3, 3, 1}), {{{3, RedShape::q2}}, std::nullopt}) == 3);
  CHECK_THROWS_AS(nilcone_codim(lam, {{{3, RedShape::p1}}, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(nilcone_codim(lam, {{{4, RedShape::q2}}, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(nilcone_codim(Partition({3, 3, 1}), {{{3, RedShape::q2}}, std::pair{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(nilcone_codim(lam, {{}, std::pair{4, 4}}), std::invalid_argument);
}

TEST_CASE("reduced constraints reproduce the stratum codimensions") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : enumerate_marked(n)) {
      const auto x = jordan_matrix(lam, QQ);
      const auto type = jordan_type(x);
      CHECK(nilcone_codim(type, reduced_constraint(x, FlagAlgebra::parabolic(1, n))) == lam.length());
    }
  for (int n = 2; n <= 7; ++n)
    for (const auto& mu : enumerate_marked2(n)) {
      const auto x = jordan_matrix(mu, QQ);
      const auto type = jordan_type(x);
      INFO(mu.to_string());
      CHECK(nilcone_codim(type, reduced_constraint(x, FlagAlgebra::nested(2, n))) == mu.c());
      CHECK(nilcone_codim(type, reduced_constraint(x, FlagAlgebra::parabolic(2, n))) == mu.c());
    }
}
