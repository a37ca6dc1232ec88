#pragma once

// Exact dense linear algebra over a field scalar. Everything downstream
// (representations, Hom spaces, resolutions) reduces to these kernels.
//
// Pivoting is pinned: first nonzero entry scanning columns left to right and
// rows top to bottom. That makes every echelon form, kernel basis and solve
// reproducible, which the rest of the library relies on for deterministic
// bases.

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qrep/field.hpp"

namespace qrep {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Scalar>
struct RrefResult {
  Mat<Scalar> reduced;
  std::vector<Index> pivots;  // pivot columns, ascending
};

template <class Scalar>
bool is_zero_matrix(const Mat<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

// Reduced row echelon form. The RREF itself is unique; the pivot scan order
// above fixes the elimination path as well.
template <class Scalar>
RrefResult<Scalar> rref(Mat<Scalar> m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    Scalar inv = m(row, col).inverse();
    for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (Index j = col; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Scalar>
Index rank(const Mat<Scalar>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

// Basis of the right kernel {x : m x = 0}, one column per free variable,
// ordered by ascending free column index.
template <class Scalar>
Mat<Scalar> kernel_basis(const Mat<Scalar>& m) {
  RrefResult<Scalar> e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  const Index k = n - static_cast<Index>(e.pivots.size());
  Mat<Scalar> basis = Mat<Scalar>::Zero(n, k);
  Index out = 0;
  for (Index j = 0; j < n; ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    basis(j, out) = Scalar(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.pivots[r] < j && !e.reduced(static_cast<Index>(r), j).is_zero())
        basis(e.pivots[r], out) = -e.reduced(static_cast<Index>(r), j);
    }
    ++out;
  }
  return basis;
}

// Some x with m x = b, or nullopt if inconsistent. Free variables are set to
// zero, so the answer is deterministic.
template <class Scalar>
std::optional<Vec<Scalar>> solve(const Mat<Scalar>& m, const Vec<Scalar>& b) {
  if (b.rows() != m.rows())
    throw DimensionMismatch("solve: rhs has " + std::to_string(b.rows()) + " rows, matrix has " +
                            std::to_string(m.rows()));
  Mat<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  RrefResult<Scalar> e = rref(std::move(aug));
  for (Index p : e.pivots)
    if (p == m.cols()) return std::nullopt;
  Vec<Scalar> x = Vec<Scalar>::Zero(m.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.reduced(static_cast<Index>(r), m.cols());
  return x;
}

// Columnwise solve m X = B; nullopt if any column is inconsistent.
template <class Scalar>
std::optional<Mat<Scalar>> solve_matrix(const Mat<Scalar>& m, const Mat<Scalar>& rhs) {
  if (rhs.rows() != m.rows()) throw DimensionMismatch("solve_matrix: row mismatch");
  Mat<Scalar> x(m.cols(), rhs.cols());
  for (Index j = 0; j < rhs.cols(); ++j) {
    auto col = solve<Scalar>(m, rhs.col(j));
    if (!col) return std::nullopt;
    x.col(j) = *col;
  }
  return x;
}

// Rowwise solve X m = B (the natural direction for row-vector modules).
template <class Scalar>
std::optional<Mat<Scalar>> solve_left(const Mat<Scalar>& m, const Mat<Scalar>& rhs) {
  Mat<Scalar> mt = m.transpose();
  Mat<Scalar> rt = rhs.transpose();
  auto xt = solve_matrix<Scalar>(mt, rt);
  if (!xt) return std::nullopt;
  return Mat<Scalar>(xt->transpose());
}

template <class Scalar>
std::optional<Mat<Scalar>> inverse(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return Mat<Scalar>(0, 0);
  auto x = solve_matrix<Scalar>(m, Mat<Scalar>::Identity(m.rows(), m.rows()));
  if (!x) return std::nullopt;
  if (rank<Scalar>(m) != m.rows()) return std::nullopt;
  return x;
}

template <class Scalar>
bool is_invertible(const Mat<Scalar>& m) {
  return m.rows() == m.cols() && rank<Scalar>(m) == m.rows();
}

// Canonical basis of the row space: the nonzero rows of the RREF.
template <class Scalar>
Mat<Scalar> row_space_basis(const Mat<Scalar>& m) {
  RrefResult<Scalar> e = rref(m);
  const Index r = static_cast<Index>(e.pivots.size());
  return e.reduced.topRows(r);
}

// Rows v with v m = 0.
template <class Scalar>
Mat<Scalar> left_kernel_basis(const Mat<Scalar>& m) {
  Mat<Scalar> k = kernel_basis<Scalar>(Mat<Scalar>(m.transpose()));
  return k.transpose();
}

// Vertical concatenation helper.
template <class Scalar>
Mat<Scalar> vstack(const std::vector<Mat<Scalar>>& parts, Index cols) {
  Index rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Mat<Scalar> out(rows, cols);
  Index at = 0;
  for (const auto& p : parts) {
    out.middleRows(at, p.rows()) = p;
    at += p.rows();
  }
  return out;
}

// Membership of a row vector in the row space of an RREF'd basis.
template <class Scalar>
bool in_row_space(const Mat<Scalar>& rref_rows, const std::vector<Index>& pivots,
                  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> v) {
  for (size_t r = 0; r < pivots.size(); ++r) {
    const Scalar& c = v(pivots[r]);
    if (!c.is_zero()) v -= c * rref_rows.row(static_cast<Index>(r));
  }
  for (Index j = 0; j < v.cols(); ++j)
    if (!v(j).is_zero()) return false;
  return true;
}

}  // namespace qrep
