#ifndef CWK_LINALG_HPP
#define CWK_LINALG_HPP

#include "cwk/field.hpp"

#include <Eigen/Core>

#include <optional>
#include <type_traits>
#include <vector>

namespace cwk {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class S>
Mat<S> zeros(Index r, Index c) {
  return Mat<S>::Constant(r, c, S(0));
}

template <class S>
Mat<S> identity(Index n) {
  Mat<S> m = zeros<S>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
bool isZero(const Mat<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!ScalarTraits<S>::isZero(m(i, j))) return false;
  return true;
}

template <class S>
bool equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class S>
Mat<S> mul(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r = zeros<S>(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (ScalarTraits<S>::isZero(aik)) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (!ScalarTraits<S>::isZero(b(k, j))) r(i, j) += aik * b(k, j);
    }
  return r;
}

// (a kron b)(i*rb + k, j*cb + l) = a(i,j) b(k,l)
template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  const Index rb = b.rows(), cb = b.cols();
  Mat<S> r = zeros<S>(a.rows() * rb, a.cols() * cb);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (ScalarTraits<S>::isZero(a(i, j))) continue;
      r.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  return r;
}

template <class S>
Mat<S> hcat(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r(a.rows(), a.cols() + b.cols());
  r << a, b;
  return r;
}

template <class S>
Mat<S> vcat(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Mat<S> r(a.rows() + b.rows(), a.cols());
  r << a, b;
  return r;
}

template <class S>
struct Echelon {
  Mat<S> rref;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

inline Integer lcmDenominators(const Rational* row, Index n) {
  Integer l = 1;
  for (Index j = 0; j < n; ++j) l = mp::lcm(l, Integer(mp::denominator(row[j])));
  return l;
}

// Fraction-free forward elimination on an integer copy of m, then
// back-substitution to reduced form. Row scaling keeps the row space.
inline Echelon<Rational> rowReduceQ(const Mat<Rational>& m, Index pivotLimit) {
  const Index R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> z(R, std::vector<Integer>(C));
  for (Index i = 0; i < R; ++i) {
    Mat<Rational> row = m.row(i);
    Integer l = lcmDenominators(row.data(), C);
    for (Index j = 0; j < C; ++j) {
      Rational v = m(i, j) * Rational(l);
      z[i][j] = mp::numerator(v);
    }
  }
  Echelon<Rational> e;
  Integer prev = 1;
  Index r = 0;
  for (Index c = 0; c < pivotLimit && r < R; ++c) {
    Index piv = -1;
    for (Index i = r; i < R; ++i)
      if (z[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(z[piv], z[r]);
    for (Index i = r + 1; i < R; ++i) {
      for (Index j = c + 1; j < C; ++j) {
        Integer t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        z[i][j] = t / prev;
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  Mat<Rational> q = zeros<Rational>(R, C);
  for (Index i = 0; i < R; ++i)
    for (Index j = 0; j < C; ++j)
      if (z[i][j] != 0) q(i, j) = Rational(z[i][j]);
  for (Index k = r - 1; k >= 0; --k) {
    const Index c = e.pivots[k];
    Rational inv = 1 / q(k, c);
    q.row(k) *= inv;
    for (Index i = 0; i < k; ++i) {
      Rational f = q(i, c);
      if (f != 0) q.row(i) -= f * q.row(k);
    }
  }
  e.rref = std::move(q);
  return e;
}

template <class S>
Echelon<S> rowReduceField(const Mat<S>& m, Index pivotLimit) {
  Echelon<S> e;
  Mat<S> a = m;
  const Index R = a.rows();
  Index r = 0;
  for (Index c = 0; c < pivotLimit && r < R; ++c) {
    Index piv = -1;
    for (Index i = r; i < R; ++i)
      if (!ScalarTraits<S>::isZero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(r));
    S inv = S(1) / a(r, c);
    a.row(r) *= inv;
    for (Index i = 0; i < R; ++i) {
      if (i == r || ScalarTraits<S>::isZero(a(i, c))) continue;
      S f = a(i, c);
      a.row(i) -= f * a.row(r);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(a);
  return e;
}

}  // namespace detail

// Reduced row echelon form; pivots are sought only in the first pivotLimit
// columns, always taking the first nonzero row.
template <class S>
Echelon<S> rowReduce(const Mat<S>& m, Index pivotLimit = -1) {
  if (pivotLimit < 0) pivotLimit = m.cols();
  if constexpr (std::is_same_v<S, Rational>)
    return detail::rowReduceQ(m, pivotLimit);
  else
    return detail::rowReduceField(m, pivotLimit);
}

template <class S>
Index rank(const Mat<S>& m) {
  return rowReduce(m).rank();
}

// Columns form a basis of {x : a x = 0}, one per free column.
template <class S>
Mat<S> kernelBasis(const Mat<S>& a) {
  Echelon<S> e = rowReduce(a);
  const Index n = a.cols();
  std::vector<bool> isPivot(n, false);
  for (Index c : e.pivots) isPivot[c] = true;
  std::vector<Index> freeCols;
  for (Index c = 0; c < n; ++c)
    if (!isPivot[c]) freeCols.push_back(c);
  Mat<S> k = zeros<S>(n, static_cast<Index>(freeCols.size()));
  for (Index f = 0; f < static_cast<Index>(freeCols.size()); ++f) {
    k(freeCols[f], f) = S(1);
    for (Index i = 0; i < e.rank(); ++i) k(e.pivots[i], f) = -e.rref(i, freeCols[f]);
  }
  return k;
}

template <class S>
struct LinearSolution {
  std::optional<Mat<S>> x;
  Mat<S> nullspace;
  Index rankA = 0;
  Index rankAug = 0;
  bool feasible() const { return x.has_value(); }
};

// Solves a x = b for every column of b at once. Free variables are set to 0.
template <class S>
LinearSolution<S> solveLinear(const Mat<S>& a, const Mat<S>& b) {
  LinearSolution<S> sol;
  const Index n = a.cols();
  Echelon<S> e = rowReduce(hcat(a, b), n);
  sol.rankA = e.rank();
  sol.rankAug = sol.rankA;
  for (Index i = sol.rankA; i < e.rref.rows(); ++i)
    if (!isZero<S>(e.rref.row(i).tail(b.cols()))) {
      sol.rankAug = sol.rankA + 1;
      break;
    }
  sol.nullspace = kernelBasis(a);
  if (sol.rankAug != sol.rankA) return sol;
  Mat<S> x = zeros<S>(n, b.cols());
  for (Index i = 0; i < sol.rankA; ++i) x.row(e.pivots[i]) = e.rref.row(i).tail(b.cols());
  sol.x = std::move(x);
  return sol;
}

template <class S>
struct Cokernel {
  Mat<S> q;  // (n - r) x n, q a = 0
  Mat<S> s;  // n x (n - r), q s = 1
};

// Quotient of the column space by span(a). The section s picks the
// coordinate vectors outside the pivot columns of the reduced relations.
template <class S>
Cokernel<S> cokernelProjection(const Mat<S>& a) {
  const Index n = a.rows();
  Mat<S> at = a.transpose();
  Echelon<S> e = rowReduce(at);
  std::vector<bool> isPivot(n, false);
  for (Index c : e.pivots) isPivot[c] = true;
  std::vector<Index> rest;
  for (Index c = 0; c < n; ++c)
    if (!isPivot[c]) rest.push_back(c);
  const Index d = static_cast<Index>(rest.size());
  Cokernel<S> k{zeros<S>(d, n), zeros<S>(n, d)};
  for (Index j = 0; j < d; ++j) {
    k.q(j, rest[j]) = S(1);
    k.s(rest[j], j) = S(1);
    for (Index i = 0; i < e.rank(); ++i) k.q(j, e.pivots[i]) = -e.rref(i, rest[j]);
  }
  return k;
}

template <class S>
std::optional<Mat<S>> matInverse(const Mat<S>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const Index n = a.rows();
  Echelon<S> e = rowReduce(hcat(a, identity<S>(n)), n);
  if (e.rank() != n) return std::nullopt;
  return Mat<S>(e.rref.rightCols(n));
}


// Flattens a row-major matrix into a column.
template <class S>
Mat<S> vec(const Mat<S>& m) {
  Mat<S> v(m.rows() * m.cols(), 1);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
  return v;
}

template <class S>
Mat<S> unvec(const Mat<S>& v, Index rows, Index cols) {
  Mat<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j, 0);
  return m;
}

template <class S>
struct AffineSystem {
  Mat<S> lhs;  // residual(x) = lhs vec(x) + offset
  Mat<S> offset;
};

// fn maps an unknown rows x cols matrix to a list of residual matrices and
// must be affine in it; probing the basis matrices recovers the system.
template <class S, class Fn>
AffineSystem<S> linearize(Index rows, Index cols, Fn fn) {
  auto flatten = [](const std::vector<Mat<S>>& parts) {
    Mat<S> out(0, 1);
    for (const auto& p : parts) out = vcat(out, vec(p));
    return out;
  };
  Mat<S> base = flatten(fn(zeros<S>(rows, cols)));
  AffineSystem<S> sys{zeros<S>(base.rows(), rows * cols), base};
  for (Index k = 0; k < rows * cols; ++k) {
    Mat<S> e = zeros<S>(rows, cols);
    e(k / cols, k % cols) = S(1);
    sys.lhs.col(k) = flatten(fn(e)) - base;
  }
  return sys;
}

}  // namespace cwk

#endif
