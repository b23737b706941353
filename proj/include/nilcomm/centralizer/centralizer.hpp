#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilcomm/centralizer/jordan.hpp"
#include "nilcomm/exactalg/flag_algebra.hpp"
#include "nilcomm/exactalg/matrix.hpp"
#include "nilcomm/partitions/partitions.hpp"

namespace nilcomm {

// One free parameter of a matrix commuting with a block Jordan matrix: the
// constant value on diagonal `offset` of block (row_block, col_block), i.e.
// the entry Y^{row_block, col_block}_{1, 1 + offset}.
struct CentralizerSlot {
  int row_block;
  int col_block;
  int offset;
  bool operator==(const CentralizerSlot&) const = default;
};

// Closed-form description of the commutant of block_jordan(blocks).
template <class K>
class CentralizerBasis {
 public:
  CentralizerBasis(std::vector<int> blocks, const Field<K>& field);

  const std::vector<int>& blocks() const { return layout_.sizes(); }
  const std::vector<CentralizerSlot>& slots() const { return slots_; }
  const std::vector<Matrix<K>>& matrices() const { return matrices_; }
  std::size_t dim() const { return slots_.size(); }

  Matrix<K> assemble(const Vec<K>& params) const;
  // Parameters of y; throws std::invalid_argument if y does not commute with the Jordan matrix.
  Vec<K> coordinates(const Matrix<K>& y) const;

 private:
  BlockLayout layout_;
  Field<K> field_;
  std::vector<CentralizerSlot> slots_;
  std::vector<Matrix<K>> matrices_;
};

// sum over block pairs of min(size_i, size_i').
int centralizer_dimension(const std::vector<int>& blocks);

// Basis of {y in w : xy = yx} by direct linear solve.
template <class K>
std::vector<Matrix<K>> centralizer_solve(const Matrix<K>& x, const FlagAlgebra& w);

// Matrix of first-row entries (Y^{i,i'}_{1,1}) for y commuting with block_jordan(blocks).
template <class K>
Matrix<K> pr_ext(const Matrix<K>& y, const std::vector<int>& blocks);

// One square matrix per distinct block size l (largest first): the entries
// Y^{i,i'}_{1,1} over blocks i, i' of size l.
template <class K>
std::vector<std::pair<int, Matrix<K>>> pr_red(const Matrix<K>& y, const std::vector<int>& blocks);

template <class K>
bool is_nilpotent_via_red(const Matrix<K>& y, const std::vector<int>& blocks);

// Rank at y of the differentials of tr(Y(l)^j), 1 <= j <= size of Y(l), over all
// reduced blocks, as functionals on the centraliser of block_jordan(blocks). At a
// generic nilpotent y this counts the independent nilpotency conditions on the
// centraliser. Needs characteristic 0 or larger than every block multiplicity.
template <class K>
int reduced_condition_rank(const Matrix<K>& y, const std::vector<int>& blocks);

// Shape of the image of a centraliser in one factor gl_tau of the reduced part.
enum class RedShape { full, p1, p2, q2 };

struct RedBlockConstraint {
  int part;
  RedShape shape;
};

// Constraints on the reduced part coming from a flag. Parts not listed are
// unconstrained. A coupled pair (l1, l2) means both factors are of shape p1
// and share the scalar by which they act on their stable lines.
struct FlagConstraintOnRed {
  std::vector<RedBlockConstraint> blocks;
  std::optional<std::pair<int, int>> coupled;
};

// Codimension of the nilpotent cone in the centraliser of x_lambda cut out by
// the constraint. Throws std::invalid_argument for shapes outside the table.
int nilcone_codim(const Partition& lambda, const FlagConstraintOnRed& constraint);

// Reduced-part constraint of the centraliser of x in w, read off from the
// dimensions of its projections to the factors gl_tau. Throws
// std::invalid_argument when the image is not one of the tabulated shapes.
template <class K>
FlagConstraintOnRed reduced_constraint(const Matrix<K>& x, const FlagAlgebra& w);

const char* to_string(RedShape shape);

}  // namespace nilcomm
