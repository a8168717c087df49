#include "gfan3/rational.hpp"

#include <algorithm>

namespace gfan3 {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  std::vector<Rational> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Rational> RationalMatrix::col(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Rational det(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("det: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  RationalMatrix w = m;
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(w.at(i, k)) > abs(w.at(best, k))) best = i;
    if (w.at(best, k) == 0) return 0;
    if (best != k) {
      for (std::size_t j = k; j < n; ++j)
        std::swap(w.at(k, j), w.at(best, j));
      result = -result;
    }
    result *= w.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (w.at(i, k) == 0) continue;
      Rational f = w.at(i, k) / w.at(k, k);
      for (std::size_t j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
    }
  }
  return result;
}

Rational det_bareiss(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("det_bareiss: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  RationalMatrix w = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t piv = k;
      while (piv < n && w.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

Rational det_cofactor(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("det_cofactor: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rational result = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, jj++) = m.at(i, c);
      }
    }
    Rational term = m.at(0, j) * det_cofactor(minor);
    result += (j % 2 == 0) ? term : -term;
  }
  return result;
}

std::size_t rank(const RationalMatrix& m) {
  EliminationState state(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) state.extend(m.row(i), i);
  return state.size();
}

RationalMatrix row_basis(const RationalMatrix& m) {
  EliminationState state(m.cols());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (state.extend(m.row(i), i)) keep.push_back(i);
  RationalMatrix r(keep.size(), m.cols());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(keep[i], j);
  return r;
}

std::pair<EliminationState, bool> EliminationState::try_extend(
    const std::vector<Rational>& column, std::size_t id) const {
  EliminationState next = *this;
  bool accepted = next.extend(column, id);
  return {std::move(next), accepted};
}

bool EliminationState::extend(const std::vector<Rational>& column,
                              std::size_t id) {
  if (column.size() != ambient_)
    throw DimensionError("try_extend: column length " +
                         std::to_string(column.size()) + " != ambient " +
                         std::to_string(ambient_));
  std::vector<Rational> c = column;
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    const std::size_t p = pivot_at_[k];
    if (c[p] == 0) continue;
    Rational f = c[p] / reduced_[k][p];
    for (std::size_t i = 0; i < ambient_; ++i) c[i] -= f * reduced_[k][i];
  }
  // Largest-magnitude pivot, lowest index on ties, for deterministic results
  // and moderate entry growth.
  std::size_t pivot = ambient_;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (c[i] == 0) continue;
    if (pivot == ambient_ || abs(c[i]) > abs(c[pivot])) pivot = i;
  }
  if (pivot == ambient_) return false;
  reduced_.push_back(std::move(c));
  pivot_at_.push_back(pivot);
  selected_.push_back(id);
  return true;
}

Rational EliminationState::selected_det() const {
  if (size() != ambient_)
    throw DimensionError("selected_det: system is not square");
  // In the row order (pivot_at_[0], pivot_at_[1], ...) the reduced columns
  // form a lower-triangular matrix, so the determinant is the pivot product
  // times the parity of that row permutation.
  Rational result = 1;
  for (std::size_t k = 0; k < reduced_.size(); ++k)
    result *= reduced_[k][pivot_at_[k]];
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < pivot_at_.size(); ++a)
    for (std::size_t b = a + 1; b < pivot_at_.size(); ++b)
      if (pivot_at_[a] > pivot_at_[b]) ++inversions;
  return (inversions % 2 == 0) ? result : -result;
}

}  // namespace gfan3
