#include "nilcomm/hilbert/correspondence.hpp"

#include <stdexcept>
#include <type_traits>

#include "nilcomm/exactalg/linalg.hpp"
#include "nilcomm/exactalg/matrix_json.hpp"

namespace nilcomm {

namespace {

// Vectors kept in echelon form, for rank-increase tests one vector at a time.
template <class K>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(const Field<K>& field) : field_(field) {}

  bool add(Vec<K> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto p = pivots_[r];
      if (is_zero(v[p])) continue;
      const K c = v[p];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * rows_[r][k];
    }
    for (std::size_t p = 0; p < v.size(); ++p)
      if (!is_zero(v[p])) {
        const K inv = field_.one() / v[p];
        for (auto& e : v) e *= inv;
        pivots_.push_back(p);
        rows_.push_back(std::move(v));
        return true;
      }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  Field<K> field_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
};

// m(x, y) v for every monomial m of degree <= cap, by monomial index.
template <class K>
std::vector<Vec<K>> monomial_vectors(const Matrix<K>& x, const Matrix<K>& y, const Vec<K>& v, int cap) {
  std::vector<Vec<K>> out{v};
  for (std::size_t i = 1; i < monomial_count(cap); ++i) {
    const Monomial m = monomial_at(i);
    if (m.x > 0) out.push_back(x * out[monomial_index({m.x - 1, m.y})]);
    else out.push_back(y * out[monomial_index({m.x, m.y - 1})]);
  }
  return out;
}

template <class K>
void require_pair(const Matrix<K>& x, const Matrix<K>& y) {
  if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("x and y must be square of the same size");
  if (!commutator(x, y).is_zero()) throw std::invalid_argument("x and y do not commute");
  if (!is_nilpotent(x) || !is_nilpotent(y)) throw std::invalid_argument("x and y must be nilpotent");
}

// Kernel of P -> (last n - i coordinates of P(x, y) v) on polynomials of degree <= n.
template <class K>
StaircaseIdeal<K> quotient_evaluation_ideal(const CommutingTriple<K>& t, int i, MonomialOrder order) {
  const int n = t.n();
  const auto& field = t.x.field();
  const auto vectors = monomial_vectors(t.x, t.y, t.v, n);
  Matrix<K> ev(n - i, vectors.size(), field);
  for (std::size_t c = 0; c < vectors.size(); ++c)
    for (int r = i; r < n; ++r) ev(r - i, c) = vectors[c][r];
  std::vector<LocalPoly<K>> span;
  for (const auto& coeffs : kernel_basis(ev)) {
    LocalPoly<K> p(n, field);
    for (std::size_t c = 0; c < coeffs.size(); ++c) p.add_term(monomial_at(c), coeffs[c]);
    span.push_back(std::move(p));
  }
  auto ideal = StaircaseIdeal<K>::from_span(span, n, field, order);
  if (ideal.colength() != n - i) throw std::logic_error("quotient evaluation ideal has the wrong colength");
  return ideal;
}

}  // namespace

template <class K>
void CommutingTriple<K>::validate() const {
  require_pair(x, y);
  if (v.size() != x.rows()) throw std::invalid_argument("vector length does not match the matrices");
}

template <class K>
Cyclicity is_cyclic(const CommutingTriple<K>& t) {
  t.validate();
  const int n = t.n();
  Cyclicity out{false, {}};
  IncrementalSpan<K> span(t.x.field());
  const auto vectors = monomial_vectors(t.x, t.y, t.v, n);
  for (std::size_t i = 0; i < vectors.size() && static_cast<int>(span.rank()) < n; ++i)
    if (span.add(vectors[i])) out.staircase.push_back(monomial_at(i));
  out.cyclic = static_cast<int>(span.rank()) == n;
  return out;
}

template <class K>
StaircaseIdeal<K> evaluation_ideal(const CommutingTriple<K>& t, MonomialOrder order) {
  if (!is_cyclic(t).cyclic) throw std::invalid_argument("triple is not cyclic");
  return quotient_evaluation_ideal(t, 0, order);
}

template <class K>
std::vector<StaircaseIdeal<K>> nested_ideals(const CommutingTriple<K>& t, const FlagAlgebra& w, MonomialOrder order) {
  if (w.n() != t.n() || !w.contains(t.x) || !w.contains(t.y)) throw std::invalid_argument("x and y must lie in " + w.name());
  if (!is_cyclic(t).cyclic) throw std::invalid_argument("triple is not cyclic");
  std::vector<StaircaseIdeal<K>> out{quotient_evaluation_ideal(t, 0, order)};
  for (std::size_t j = 0; j + 1 < w.chain().size(); ++j) out.push_back(quotient_evaluation_ideal(t, w.chain()[j], order));
  return out;
}

template <class K>
FlaggedTriple<K> pair_from_chain(const std::vector<StaircaseIdeal<K>>& chain) {
  if (chain.empty()) throw std::invalid_argument("empty chain of ideals");
  const auto& bottom = chain.front();
  const auto& field = bottom.field();
  const int n = bottom.colength();
  if (n < 1) throw std::invalid_argument("the smallest ideal must have positive colength");
  for (std::size_t j = 1; j < chain.size(); ++j) {
    if (!(chain[j].field() == field) || chain[j].order() != bottom.order())
      throw std::invalid_argument("ideals in a chain must share field and monomial order");
    if (chain[j].colength() >= chain[j - 1].colength() || chain[j].colength() < 1)
      throw std::invalid_argument("colengths must decrease strictly and stay positive");
    if (!chain[j].contains(chain[j - 1])) throw std::invalid_argument("ideals do not form an increasing chain");
  }

  // Level j contributes m - NF_j(m) for the monomials standard for I_{j-1} but not for I_j.
  std::vector<LocalPoly<K>> basis;
  std::vector<int> steps;
  for (std::size_t j = 1; j <= chain.size(); ++j) {
    const auto& below = chain[j - 1];
    for (const auto& m : below.staircase()) {
      if (j < chain.size() && chain[j].is_standard(m)) continue;
      const auto mono = LocalPoly<K>::monomial(m, bottom.cap(), field);
      basis.push_back(j < chain.size() ? mono - chain[j].normal_form(mono) : mono);
    }
    steps.push_back(static_cast<int>(basis.size()));
  }
  if (static_cast<int>(basis.size()) != n) throw std::logic_error("staircases of the chain are not nested");

  Matrix<K> change(n, n, field);
  for (int c = 0; c < n; ++c) change.set_column(c, bottom.coordinates(basis[c]));
  const Matrix<K> back = inverse(change);
  CommutingTriple<K> t{back * bottom.multiplication_matrix(0) * change, back * bottom.multiplication_matrix(1) * change,
                       back * bottom.coordinates(LocalPoly<K>::monomial({0, 0}, bottom.cap(), field))};
  FlagAlgebra algebra(n, steps);
  if (!algebra.contains(t.x) || !algebra.contains(t.y)) throw std::logic_error("constructed pair does not preserve the flag");
  return {std::move(t), std::move(algebra)};
}

template <class K>
CommutingTriple<K> pair_from_ideals(const StaircaseIdeal<K>& i, const StaircaseIdeal<K>& j, int k) {
  const int n = j.colength();
  if (k < 0 || k > n) throw std::invalid_argument("k must lie in [0, colength(J)]");
  if (i.colength() != n - k) throw std::invalid_argument("colength(I) must equal colength(J) - k");
  if (!i.contains(j)) throw std::invalid_argument("J is not contained in I");
  if (k == 0 || k == n) return pair_from_chain(std::vector<StaircaseIdeal<K>>{j}).triple;
  return pair_from_chain(std::vector<StaircaseIdeal<K>>{j, i}).triple;
}

template <class K>
std::optional<Matrix<K>> triple_conjugator(const CommutingTriple<K>& from, const CommutingTriple<K>& to,
                                           const FlagAlgebra& w) {
  const auto cyc = is_cyclic(from);
  if (!cyc.cyclic || !is_cyclic(to).cyclic) throw std::invalid_argument("both triples must be cyclic");
  const int n = from.n();
  if (to.n() != n) return std::nullopt;
  const auto& field = from.x.field();
  const auto a = monomial_vectors(from.x, from.y, from.v, n), b = monomial_vectors(to.x, to.y, to.v, n);
  Matrix<K> source(n, n, field), target(n, n, field);
  for (int c = 0; c < n; ++c) {
    const auto idx = monomial_index(cyc.staircase[c]);
    source.set_column(c, a[idx]);
    target.set_column(c, b[idx]);
  }
  if (is_zero(determinant(target))) return std::nullopt;
  const Matrix<K> g = target * inverse(source);
  if (g * from.x != to.x * g || g * from.y != to.y * g || !w.contains(g)) return std::nullopt;
  return g;
}

template <class K>
RoundTrip<K> round_trip(const CommutingTriple<K>& t, const FlagAlgebra& w, MonomialOrder order) {
  auto chain = nested_ideals(t, w, order);
  auto rebuilt = pair_from_chain(chain);
  RoundTrip<K> out{std::move(chain), std::move(rebuilt), std::nullopt, false, {}};
  auto fail = [&](std::string why) {
    out.failure = std::move(why);
    return out;
  };

  const int n = t.n();
  std::vector<int> expected{n};
  for (int step : w.chain())
    if (step < n) expected.push_back(n - step);
  if (out.chain.size() != expected.size()) return fail("chain has the wrong number of ideals");
  for (std::size_t j = 0; j < out.chain.size(); ++j) {
    if (out.chain[j].colength() != expected[j]) return fail("ideal " + std::to_string(j) + " has the wrong colength");
    if (j > 0 && !out.chain[j].contains(out.chain[j - 1])) return fail("chain is not increasing at " + std::to_string(j));
  }
  if (!(out.rebuilt.algebra == w)) return fail("rebuilt flag is " + out.rebuilt.algebra.name());

  out.conjugator = triple_conjugator(t, out.rebuilt.triple, w);
  if (!out.conjugator) return fail("no conjugator in the group of " + w.name());
  const auto& g = *out.conjugator;
  const auto& to = out.rebuilt.triple;
  if (!w.contains(g) || is_zero(determinant(g))) return fail("conjugator is not in the group");
  if (g * t.x != to.x * g || g * t.y != to.y * g || g * t.v != to.v) return fail("conjugator does not intertwine");
  out.passed = true;
  return out;
}

template <class K>
std::optional<Vec<K>> find_cyclic_vector(const Matrix<K>& x, const Matrix<K>& y, std::uint64_t seed,
                                         const CyclicSearch& search) {
  require_pair(x, y);
  const auto& field = x.field();
  const std::size_t n = x.rows();
  auto works = [&](const Vec<K>& v) { return is_cyclic(CommutingTriple<K>{x, y, v}).cyclic; };

  Rng rng(seed);
  for (int t = 0; t < search.random_trials; ++t) {
    Vec<K> v(n, field.zero());
    for (auto& e : v) e = field.random(rng);
    if (works(v)) return v;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<K> v(n, field.zero());
      v[i] = field.one();
      if (j != i) v[j] = field.one();
      if (works(v)) return v;
    }
  if (search.exhaustive) {
    if constexpr (std::is_same_v<K, Residue>) {
      const std::uint64_t p = field.prime();
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < n; ++i) {
        total *= p;
        if (total > (1u << 20)) throw std::invalid_argument("exhaustive search space above 2^20 vectors");
      }
      for (std::uint64_t code = 0; code < total; ++code) {
        Vec<K> v(n, field.zero());
        std::uint64_t rest = code;
        for (auto& e : v) {
          e = field.from_int(static_cast<std::int64_t>(rest % p));
          rest /= p;
        }
        if (works(v)) return v;
      }
    } else {
      throw std::invalid_argument("exhaustive search needs a prime field");
    }
  }
  return std::nullopt;
}

template <class K>
Matrix<K> simultaneous_flag(const Matrix<K>& x, const Matrix<K>& y) {
  require_pair(x, y);
  const auto& field = x.field();
  const std::size_t n = x.rows();
  std::vector<Vec<K>> chosen;
  IncrementalSpan<K> span(field);
  while (chosen.size() < n) {
    // v with x v, y v in the span W of the chosen vectors: annihilate W from the left.
    Matrix<K> w(n, chosen.size(), field);
    for (std::size_t c = 0; c < chosen.size(); ++c) w.set_column(c, chosen[c]);
    std::vector<Vec<K>> annihilator = chosen.empty() ? std::vector<Vec<K>>{} : kernel_basis(w.transpose());
    if (chosen.empty())
      for (std::size_t i = 0; i < n; ++i) {
        Vec<K> e(n, field.zero());
        e[i] = field.one();
        annihilator.push_back(std::move(e));
      }
    Matrix<K> system(2 * annihilator.size(), n, field);
    for (std::size_t r = 0; r < annihilator.size(); ++r) {
      const auto ux = x.transpose() * annihilator[r], uy = y.transpose() * annihilator[r];
      for (std::size_t c = 0; c < n; ++c) {
        system(r, c) = ux[c];
        system(annihilator.size() + r, c) = uy[c];
      }
    }
    bool extended = false;
    for (const auto& v : kernel_basis(system))
      if (span.add(v)) {
        chosen.push_back(v);
        extended = true;
        break;
      }
    if (!extended) throw std::logic_error("no common kernel vector on the quotient");
  }
  Matrix<K> g(n, n, field);
  for (std::size_t c = 0; c < n; ++c) g.set_column(c, chosen[c]);
  return g;
}

template <class K>
nlohmann::json triple_to_json(const CommutingTriple<K>& t) {
  return {{"field", t.x.field().spec().json_name()},
          {"x", matrix_to_json(t.x)},
          {"y", matrix_to_json(t.y)},
          {"v", vector_to_json(t.v, t.x.field())}};
}

template <class K>
CommutingTriple<K> triple_from_json(const nlohmann::json& j, const Field<K>& field) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("v"))
    throw std::invalid_argument("triple JSON needs \"x\", \"y\" and \"v\"");
  CommutingTriple<K> t{matrix_from_json(j.at("x"), field), matrix_from_json(j.at("y"), field),
                       vector_from_json(j.at("v"), field)};
  t.validate();
  return t;
}

#define NILCOMM_INSTANTIATE(K)                                                                                     \
  template struct CommutingTriple<K>;                                                                              \
  template Cyclicity is_cyclic(const CommutingTriple<K>&);                                                         \
  template StaircaseIdeal<K> evaluation_ideal(const CommutingTriple<K>&, MonomialOrder);                           \
  template std::vector<StaircaseIdeal<K>> nested_ideals(const CommutingTriple<K>&, const FlagAlgebra&, MonomialOrder); \
  template FlaggedTriple<K> pair_from_chain(const std::vector<StaircaseIdeal<K>>&);                                \
  template CommutingTriple<K> pair_from_ideals(const StaircaseIdeal<K>&, const StaircaseIdeal<K>&, int);           \
  template std::optional<Matrix<K>> triple_conjugator(const CommutingTriple<K>&, const CommutingTriple<K>&,        \
                                                      const FlagAlgebra&);                                         \
  template std::optional<Vec<K>> find_cyclic_vector(const Matrix<K>&, const Matrix<K>&, std::uint64_t,             \
                                                    const CyclicSearch&);                                          \
  template Matrix<K> simultaneous_flag(const Matrix<K>&, const Matrix<K>&);                                        \
  template RoundTrip<K> round_trip(const CommutingTriple<K>&, const FlagAlgebra&, MonomialOrder);                \
  template nlohmann::json triple_to_json(const CommutingTriple<K>&);                                               \
  template CommutingTriple<K> triple_from_json(const nlohmann::json&, const Field<K>&);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
