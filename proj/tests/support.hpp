#ifndef CWK_TESTS_SUPPORT_HPP
#define CWK_TESTS_SUPPORT_HPP

#include "cwk/coring.hpp"
#include "cwk/fixtures.hpp"
#include "cwk/workspace.hpp"

#include <random>
#include <string>
#include <vector>

namespace cwk::test {

using Q = Rational;

// Cases per randomized property.
inline constexpr int kCases = 120;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::uint64_t next() { return rng_(); }

  template <class S>
  S scalar(int range = 3);

  template <class S>
  Mat<S> mat(Index r, Index c, double density = 0.6) {
    Mat<S> m = zeros<S>(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j)
        if (chance(density)) m(i, j) = scalar<S>();
    return m;
  }

  template <class S>
  Mat<S> invertible(Index n) {
    for (;;) {
      Mat<S> m = identity<S>(n) + mat<S>(n, n, 0.5);
      if (matInverse(m)) return m;
    }
  }

  // Permutation matrix sending basis vector j to p[j].
  template <class S>
  Mat<S> permutation(Index n) {
    std::vector<Index> p(n);
    for (Index i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng_);
    Mat<S> m = zeros<S>(n, n);
    for (Index j = 0; j < n; ++j) m(p[j], j) = S(1);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

template <>
inline Q Gen::scalar<Q>(int range) {
  Q num(uniform(-range, range));
  return chance(0.25) ? num / Q(uniform(1, 3)) : num;
}

template <>
inline Zp Gen::scalar<Zp>(int) {
  return Zp(uniform(0, static_cast<int>(Zp::currentPrime()) - 1));
}

inline Workspace<Q> fixture(const std::string& name) { return parseWorkspace<Q>(buildFixture(name)); }

template <class S>
Mor<S> mor(const Obj& d, const Obj& c, const Mat<S>& m) {
  return Mor<S>(d, c, m);
}

inline Obj gen(const std::string& name, int dim) { return Obj(GenObj{name, dim}); }

// k x k on idempotents e0, e1.
template <class S>
Algebra<S> diagonalAlgebra(const std::string& name = "K2") {
  Obj A = gen(name, 2);
  Mat<S> m = zeros<S>(2, 4);
  m(0, 0) = S(1);
  m(1, 3) = S(1);
  Mat<S> u = zeros<S>(2, 1);
  u(0, 0) = S(1);
  u(1, 0) = S(1);
  return {A, Mor<S>(A + A, A, m), Mor<S>(Obj(), A, u)};
}

// k[x]/x^2 on 1, x.
template <class S>
Algebra<S> dualNumbers(const std::string& name = "D") {
  Obj A = gen(name, 2);
  Mat<S> m = zeros<S>(2, 4);
  m(0, 0) = S(1);
  m(1, 1) = S(1);
  m(1, 2) = S(1);
  Mat<S> u = zeros<S>(2, 1);
  u(0, 0) = S(1);
  return {A, Mor<S>(A + A, A, m), Mor<S>(Obj(), A, u)};
}

// k[Z/2] on 1, g.
template <class S>
Algebra<S> groupAlgebraZ2(const std::string& name = "G") {
  Obj A = gen(name, 2);
  Mat<S> m = zeros<S>(2, 4);
  for (int c = 0; c < 4; ++c) m((c / 2) ^ (c % 2), c) = S(1);
  Mat<S> u = zeros<S>(2, 1);
  u(0, 0) = S(1);
  return {A, Mor<S>(A + A, A, m), Mor<S>(Obj(), A, u)};
}

// Bimodule over k x k built from blocks e_i M e_j of dimension n[i][j],
// conjugated by a random invertible.
template <class S>
Bimodule<S> randomDiagonalBimodule(Gen& g, const Algebra<S>& al, const std::string& name, int maxBlock = 1) {
  int n[2][2];
  int total = 0;
  for (auto& row : n)
    for (int& v : row) total += (v = g.uniform(0, maxBlock));
  if (total == 0) {
    n[0][0] = 1;
    total = 1;
  }
  Obj M = gen(name, total);
  Mat<S> nu = zeros<S>(total, 2 * total), mu = zeros<S>(total, 2 * total);
  int k = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < n[i][j]; ++r, ++k) {
        nu(k, i * total + k) = S(1);  // e_i acts on the left
        mu(k, k * 2 + j) = S(1);      // e_j on the right
      }
  Mat<S> P = g.invertible<S>(total), Pi = *matInverse(P);
  Mor<S> p(M, M, P), pi(M, M, Pi);
  return {M, comp(p, Mor<S>(al.a + M, M, nu), tens<S>(al.a, pi)), comp(p, Mor<S>(M + al.a, M, mu), tens<S>(pi, al.a))};
}

// Free bimodule a v a.
template <class S>
Bimodule<S> freeBimodule(const Algebra<S>& al, const Obj& v) {
  const Obj& A = al.a;
  return {A + v + A, tens<S>(al.m, v, A), tens<S>(A, v, al.m)};
}

// Right module v a.
template <class S>
RightModule<S> freeModule(const Algebra<S>& al, const Obj& v) {
  return {v + al.a, tens<S>(v, al.m)};
}

// Morphisms x -> y satisfying a homogeneous linear condition, sampled from
// the kernel with small coefficients.
template <class S, class Fn>
Mat<S> sampleKernel(Gen& g, Index rows, Index cols, Fn condition) {
  AffineSystem<S> sys = linearize<S>(rows, cols, condition);
  Mat<S> K = kernelBasis(sys.lhs);
  Mat<S> v = zeros<S>(rows * cols, 1);
  for (Index j = 0; j < K.cols(); ++j) v += S(g.uniform(-2, 2)) * K.col(j);
  return unvec<S>(v, rows, cols);
}

}  // namespace cwk::test

#endif
