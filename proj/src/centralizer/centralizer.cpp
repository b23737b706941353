#include "nilcomm/centralizer/centralizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "nilcomm/exactalg/linalg.hpp"

namespace nilcomm {

template <class K>
CentralizerBasis<K>::CentralizerBasis(std::vector<int> blocks, const Field<K>& field)
    : layout_(std::move(blocks)), field_(field) {
  const int d = layout_.blocks();
  const int n = layout_.dimension();
  for (int i = 1; i <= d; ++i)
    for (int ip = 1; ip <= d; ++ip) {
      const int li = layout_.size(i), lip = layout_.size(ip);
      for (int t = std::max(0, lip - li); t < lip; ++t) {
        Matrix<K> m(n, n, field);
        for (int j = 1; j <= li && j + t <= lip; ++j) m(layout_.position(i, j), layout_.position(ip, j + t)) = field.one();
        slots_.push_back({i, ip, t});
        matrices_.push_back(std::move(m));
      }
    }
}

template <class K>
Matrix<K> CentralizerBasis<K>::assemble(const Vec<K>& params) const {
  if (params.size() != dim()) throw std::invalid_argument("wrong number of centraliser parameters");
  Matrix<K> y(layout_.dimension(), layout_.dimension(), field_);
  for (std::size_t k = 0; k < params.size(); ++k)
    if (!is_zero(params[k])) y += matrices_[k] * params[k];
  return y;
}

template <class K>
Vec<K> CentralizerBasis<K>::coordinates(const Matrix<K>& y) const {
  Vec<K> params;
  for (const auto& s : slots_)
    params.push_back(y(layout_.position(s.row_block, 1), layout_.position(s.col_block, 1 + s.offset)));
  if (assemble(params) != y) throw std::invalid_argument("matrix does not commute with the Jordan matrix");
  return params;
}

int centralizer_dimension(const std::vector<int>& blocks) {
  int total = 0;
  for (int a : blocks)
    for (int b : blocks) total += std::min(a, b);
  return total;
}

template <class K>
std::vector<Matrix<K>> centralizer_solve(const Matrix<K>& x, const FlagAlgebra& w) {
  if (!x.is_square() || static_cast<int>(x.rows()) != w.n()) throw std::invalid_argument("matrix size does not match the algebra");
  return kernel_in_span(w.basis(x.field()), x.field(), [&](const Matrix<K>& b) { return flatten(x * b - b * x); });
}

namespace {

template <class K>
void require_commutes(const Matrix<K>& y, const std::vector<int>& blocks) {
  const auto j = block_jordan(blocks, y.field());
  if (y.rows() != j.rows() || y.cols() != j.cols() || !commutator(j, y).is_zero())
    throw std::invalid_argument("matrix does not commute with the Jordan matrix");
}

}  // namespace

template <class K>
Matrix<K> pr_ext(const Matrix<K>& y, const std::vector<int>& blocks) {
  require_commutes(y, blocks);
  const BlockLayout layout(blocks);
  const int d = layout.blocks();
  Matrix<K> e(d, d, y.field());
  for (int i = 1; i <= d; ++i)
    for (int ip = 1; ip <= d; ++ip) e(i - 1, ip - 1) = y(layout.position(i, 1), layout.position(ip, 1));
  return e;
}

template <class K>
std::vector<std::pair<int, Matrix<K>>> pr_red(const Matrix<K>& y, const std::vector<int>& blocks) {
  require_commutes(y, blocks);
  const BlockLayout layout(blocks);
  std::map<int, std::vector<int>, std::greater<>> groups;
  for (int i = 1; i <= layout.blocks(); ++i) groups[layout.size(i)].push_back(i);
  std::vector<std::pair<int, Matrix<K>>> out;
  for (const auto& [value, idx] : groups) {
    Matrix<K> m(idx.size(), idx.size(), y.field());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) m(a, b) = y(layout.position(idx[a], 1), layout.position(idx[b], 1));
    out.emplace_back(value, std::move(m));
  }
  return out;
}

template <class K>
bool is_nilpotent_via_red(const Matrix<K>& y, const std::vector<int>& blocks) {
  for (const auto& [value, m] : pr_red(y, blocks))
    if (!is_nilpotent(m)) return false;
  return true;
}

const char* to_string(RedShape shape) {
  switch (shape) {
    case RedShape::full: return "full";
    case RedShape::p1: return "p1";
    case RedShape::p2: return "p2";
    case RedShape::q2: return "q2";
  }
  return "?";
}

int nilcone_codim(const Partition& lambda, const FlagConstraintOnRed& constraint) {
  std::map<int, RedShape> shapes;
  for (const auto& b : constraint.blocks) {
    const int tau = lambda.multiplicity(b.part);
    if (tau == 0) throw std::invalid_argument("constraint names " + std::to_string(b.part) + ", which is not a part");
    if (!shapes.emplace(b.part, b.shape).second) throw std::invalid_argument("part constrained twice");
    if ((b.shape == RedShape::p2 || b.shape == RedShape::q2) && tau < 2)
      throw std::invalid_argument(std::string(to_string(b.shape)) + " shape needs multiplicity at least 2");
  }
  // Each tabulated factor (gl, or a parabolic of it) loses its rank to nilpotency.
  int codim = lambda.length();
  if (constraint.coupled) {
    const auto [l1, l2] = *constraint.coupled;
    if (l1 == l2) throw std::invalid_argument("coupled pair must involve two different parts");
    for (int l : {l1, l2}) {
      const int tau = lambda.multiplicity(l);
      if (tau == 0) throw std::invalid_argument("coupled part " + std::to_string(l) + " is not a part");
      const auto it = shapes.find(l);
      const RedShape s = it == shapes.end() ? RedShape::full : it->second;
      if (!(s == RedShape::p1 || (tau == 1 && s == RedShape::full)))
        throw std::invalid_argument("coupled factors must stabilise a line");
    }
    codim -= 1;
  }
  return codim;
}

template <class K>
FlagConstraintOnRed reduced_constraint(const Matrix<K>& x, const FlagAlgebra& w) {
  const Partition lambda = jordan_type(x);
  const Matrix<K> g = jordan_basis(x);
  const Matrix<K> ginv = inverse(g);
  const auto& field = x.field();
  const auto values = lambda.distinct_values();

  // Per generator of the centraliser, its reduced part in each factor, flattened.
  std::vector<std::vector<Vec<K>>> per_factor(values.size());
  for (const auto& y : centralizer_solve(x, w)) {
    const auto red = pr_red(ginv * y * g, lambda.parts());
    for (std::size_t f = 0; f < red.size(); ++f) per_factor[f].push_back(flatten(red[f].second));
  }
  auto joint_rank = [&](const std::vector<std::size_t>& factors) {
    const std::size_t count = per_factor.front().size();
    std::vector<Vec<K>> rows(count);
    for (std::size_t r = 0; r < count; ++r)
      for (auto f : factors) rows[r].insert(rows[r].end(), per_factor[f][r].begin(), per_factor[f][r].end());
    return span_rank(rows, field);
  };

  FlagConstraintOnRed out;
  if (per_factor.front().empty()) throw std::logic_error("empty centraliser");
  std::vector<std::size_t> dims;
  std::vector<std::size_t> all;
  for (std::size_t f = 0; f < values.size(); ++f) {
    const std::size_t tau = lambda.multiplicity(values[f]);
    const std::size_t d = joint_rank({f});
    dims.push_back(d);
    all.push_back(f);
    RedShape shape;
    if (d == tau * tau) shape = RedShape::full;
    else if (d == tau * tau - tau + 1) shape = RedShape::p1;
    else if (tau >= 3 && d == tau * tau - 2 * tau + 3) shape = RedShape::q2;
    else if (tau >= 3 && d == tau * tau - 2 * tau + 4) shape = RedShape::p2;
    else
      throw std::invalid_argument("reduced image of dimension " + std::to_string(d) + " in gl_" + std::to_string(tau) +
                                  " is not a tabulated shape");
    out.blocks.push_back({values[f], shape});
  }

  std::size_t separate = 0;
  for (auto d : dims) separate += d;
  const std::size_t joint = joint_rank(all);
  if (joint == separate) return out;
  if (joint + 1 != separate) throw std::invalid_argument("reduced image couples more than one pair of factors");
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      if (joint_rank({a, b}) == dims[a] + dims[b]) continue;
      for (auto f : {a, b})
        if (out.blocks[f].shape == RedShape::full && lambda.multiplicity(values[f]) == 1) out.blocks[f].shape = RedShape::p1;
      out.coupled = std::pair{values[a], values[b]};
      return out;
    }
  throw std::invalid_argument("reduced image couples factors in an untabulated way");
}

template <class K>
int reduced_condition_rank(const Matrix<K>& y, const std::vector<int>& blocks) {
  const auto& field = y.field();
  const CentralizerBasis<K> basis(blocks, field);
  const auto at_y = pr_red(y, blocks);
  std::vector<std::vector<std::pair<int, Matrix<K>>>> directions;
  for (const auto& b : basis.matrices()) directions.push_back(pr_red(b, blocks));

  std::vector<Vec<K>> rows;
  for (std::size_t f = 0; f < at_y.size(); ++f) {
    const auto& block = at_y[f].second;
    for (unsigned j = 1; j <= block.rows(); ++j) {
      const auto gradient = char_poly_gradient(block, j);
      Vec<K> row(directions.size(), field.zero());
      for (std::size_t p = 0; p < directions.size(); ++p) {
        const auto& d = directions[p][f].second;
        for (std::size_t a = 0; a < d.rows(); ++a)
          for (std::size_t b = 0; b < d.cols(); ++b) row[p] += gradient(a, b) * d(a, b);
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return 0;
  return static_cast<int>(span_rank(rows, field));
}

#define NILCOMM_INSTANTIATE(K)                                                                       \
  template int reduced_condition_rank(const Matrix<K>&, const std::vector<int>&);                    \
  template class CentralizerBasis<K>;                                                                \
  template std::vector<Matrix<K>> centralizer_solve(const Matrix<K>&, const FlagAlgebra&);           \
  template Matrix<K> pr_ext(const Matrix<K>&, const std::vector<int>&);                              \
  template std::vector<std::pair<int, Matrix<K>>> pr_red(const Matrix<K>&, const std::vector<int>&); \
  template bool is_nilpotent_via_red(const Matrix<K>&, const std::vector<int>&);                     \
  template FlagConstraintOnRed reduced_constraint(const Matrix<K>&, const FlagAlgebra&);

NILCOMM_INSTANTIATE(Rational)
NILCOMM_INSTANTIATE(Residue)

}  // namespace nilcomm
