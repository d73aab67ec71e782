#pragma once

// Exact linear algebra over a field. Eigen's decompositions assume an ordered
// real field with a tolerance, which is wrong for Q and F_p, so the row
// reduction is done by hand; storage and slicing stay Eigen.

#include <vector>

#include <Eigen/Core>

#include "qpcc/scalar.hpp"

namespace qpcc {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;
using MatP = Mat<ModP>;

template <class S>
inline bool is_zero_scalar(const S& x) { return x == S(0); }

/// Reduced row echelon form in place; returns pivot columns.
template <class Derived>
std::vector<Eigen::Index> rref_inplace(Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && is_zero_scalar(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    S inv = S(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero_scalar(m(r, col))) continue;
      S f = m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (!is_zero_scalar(m(row, j))) m(r, j) = m(r, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
Mat<S> rref(Mat<S> m, std::vector<Eigen::Index>* pivots = nullptr) {
  auto p = rref_inplace(m);
  if (pivots) *pivots = p;
  m.conservativeResize(static_cast<Eigen::Index>(p.size()), m.cols());
  return m;
}

template <class S>
Eigen::Index rank(const Mat<S>& m) {
  Mat<S> c = m;
  return static_cast<Eigen::Index>(rref_inplace(c).size());
}

/// Columns form a basis of {x : m x = 0}.
template <class S>
Mat<S> nullspace(const Mat<S>& m, const S& one = S(1)) {
  Mat<S> r = m;
  auto piv = rref_inplace(r);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
  for (auto c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_piv[static_cast<std::size_t>(c)]) free.push_back(c);
  Mat<S> out = Mat<S>::Zero(n, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], static_cast<Eigen::Index>(k)) = one;
    for (std::size_t i = 0; i < piv.size(); ++i)
      out(piv[i], static_cast<Eigen::Index>(k)) = S(0) - r(static_cast<Eigen::Index>(i), free[k]);
  }
  return out;
}

/// Columns form a basis of the column space of m.
template <class S>
Mat<S> column_basis(const Mat<S>& m) {
  Mat<S> t = m.transpose();
  auto piv = rref_inplace(t);
  return t.topRows(static_cast<Eigen::Index>(piv.size())).transpose();
}

/// Solves m x = b; returns false when inconsistent.
template <class S>
bool solve(const Mat<S>& m, const Vec<S>& b, Vec<S>& x) {
  Mat<S> aug(m.rows(), m.cols() + 1);
  aug << m, b;
  auto piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == m.cols()) return false;
  x = Vec<S>::Zero(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    x(piv[i]) = aug(static_cast<Eigen::Index>(i), m.cols());
  return true;
}

}  // namespace qpcc
