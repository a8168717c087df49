#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfan3 {

// Exact rational scalar. Always stored in lowest terms with positive
// denominator (gmp canonicalizes on construction and arithmetic).
using Rational = mpq_class;

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

// Exact determinant by rational Gaussian elimination with
// largest-absolute-value partial pivoting.
Rational det(const RationalMatrix& m);

// Exact determinant by Bareiss-style fraction-free elimination.
// Independent code path from det(); results must agree.
Rational det_bareiss(const RationalMatrix& m);

// Exact determinant by cofactor expansion along the first row.
// Exponential; intended for cross-checks on small matrices (n <= 5).
Rational det_cofactor(const RationalMatrix& m);

// Exact rank over the rationals.
std::size_t rank(const RationalMatrix& m);

// The first maximal set of linearly independent rows, as a matrix.
// Row order is preserved; the result has rank(m) rows.
RationalMatrix row_basis(const RationalMatrix& m);

// Incremental column-independence tester.  Columns live in a fixed ambient
// row space; accepted columns are kept in reduced (echelon) form so that
// each candidate costs one elimination pass.  try_extend has copy-on-branch
// semantics: the original state stays valid and callers may branch.
class EliminationState {
 public:
  explicit EliminationState(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return selected_.size(); }
  const std::vector<std::size_t>& selected() const { return selected_; }

  // Returns (extended state, accepted).  Accepted iff the column is
  // independent of the already-selected ones.  *this is not modified.
  std::pair<EliminationState, bool> try_extend(
      const std::vector<Rational>& column, std::size_t id) const;

  // In-place variant for hot loops that never branch.
  bool extend(const std::vector<Rational>& column, std::size_t id);

  // Determinant of the square system formed by the selected columns,
  // in selection order.  Requires size() == ambient().
  Rational selected_det() const;

 private:
  std::size_t ambient_;
  std::vector<std::vector<Rational>> reduced_;  // one reduced column per pivot
  std::vector<std::size_t> pivot_at_;           // pivot coordinate of each
  std::vector<std::size_t> selected_;
};

}  // namespace gfan3
