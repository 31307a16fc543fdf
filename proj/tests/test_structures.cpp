#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace cwk;
using namespace cwk::test;

namespace {

// m(y_s y_t) = sum_k Delta[(t, s), k] y_k, unit sum_k eps(k) y_k.
std::pair<Mat<Q>, Mat<Q>> convolutionOracle(const Coalgebra<Q>& co) {
  const int n = co.c.dim();
  Mat<Q> m = Mat<Q>::Zero(n, n * n), u = Mat<Q>::Zero(n, 1);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int k = 0; k < n; ++k) m(k, s * n + t) = co.delta.mat(t * n + s, k);
  for (int k = 0; k < n; ++k) u(k, 0) = co.counit.mat(0, k);
  return {m, u};
}

Coalgebra<Q> groupLike(int n) {
  Obj C = gen("C", n);
  Mat<Q> d = zeros<Q>(n * n, n), e = zeros<Q>(1, n);
  for (int i = 0; i < n; ++i) {
    d(i * n + i, i) = Q(1);
    e(0, i) = Q(1);
  }
  return {C, Mor<Q>(C, C + C, d), Mor<Q>(C, Obj(), e)};
}

Coalgebra<Q> transport(const Coalgebra<Q>& co, const Mat<Q>& P) {
  Mor<Q> p(co.c, co.c, P), pi(co.c, co.c, *matInverse(P));
  return {co.c, comp(tens<Q>(p, p), co.delta, pi), comp(co.counit, pi)};
}

}  // namespace

TEST_CASE("algebra checker examples") {
  CHECK(checkAlgebra(groupAlgebraZ2<Q>()).ok());
  CHECK(checkAlgebra(dualNumbers<Q>()).ok());
  CHECK(checkAlgebra(diagonalAlgebra<Q>()).ok());
  CHECK(checkAlgebra(unitAlgebra<Q>()).ok());

  // Zeroing g g in k[Z/2] yields k[x]/x^2, which is still an algebra.
  Algebra<Q> zeroed = groupAlgebraZ2<Q>();
  zeroed.m.mat(0, 3) = Q(0);
  CHECK(checkAlgebra(zeroed).ok());
  CHECK(equal(zeroed.m.mat, dualNumbers<Q>().m.mat));

  Algebra<Q> noUnit = groupAlgebraZ2<Q>();
  noUnit.m.mat(1, 1) = Q(0);  // 1 g = 0
  Report<Q> r = checkAlgebra(noUnit);
  CHECK_FALSE(r.passed("algebra.left_unit"));
  CHECK(r.passed("algebra.right_unit"));
}

TEST_CASE("coalgebra checker on the fixtures") {
  CHECK(checkCoalgebra(fixture("F1").coalgebra("C")).ok());
  CHECK(checkCoalgebra(fixture("F2").coalgebra("C")).ok());
  CHECK(checkCoalgebra(fixture("F4").coalgebra("C")).ok());
  Report<Q> bad = checkCoalgebra(fixture("F2-bad-counit").coalgebra("C"));
  CHECK(bad.failures() == std::vector<std::string>{"coalgebra.left_counit", "coalgebra.right_counit"});
}

TEST_CASE("dual algebra of small coalgebras") {
  Coalgebra<Q> triv = groupLike(1);
  DualAlgebra<Q> d0 = dualAlgebraOfCoalgebra(triv, makeDualityData<Q>(triv.c));
  CHECK(equal(d0.alg.m.mat, identity<Q>(1)));
  CHECK(equal(d0.alg.unit.mat, identity<Q>(1)));

  Coalgebra<Q> f1 = fixture("F1").coalgebra("C");
  DualAlgebra<Q> d1 = dualAlgebraOfCoalgebra(f1, makeDualityData<Q>(f1.c));
  CHECK(equal(d1.alg.m.mat, diagonalAlgebra<Q>().m.mat));
  CHECK(equal(d1.alg.unit.mat, diagonalAlgebra<Q>().unit.mat));

  Coalgebra<Q> f2 = fixture("F2").coalgebra("C");
  DualAlgebra<Q> d2 = dualAlgebraOfCoalgebra(f2, makeDualityData<Q>(f2.c));
  CHECK(equal(d2.alg.m.mat, dualNumbers<Q>().m.mat));
  CHECK(equal(d2.alg.unit.mat, dualNumbers<Q>().unit.mat));

  CHECK_THROWS_AS(dualAlgebraOfCoalgebra(f2, makeDualityData<Q>(gen("Z", 2))), TypeError);
}

TEST_CASE("property: dual algebras of coalgebras satisfy the algebra and module laws") {
  Gen g(21);
  std::vector<Coalgebra<Q>> bases = {groupLike(1), groupLike(2), groupLike(3), fixture("F2").coalgebra("C"),
                                     fixture("F4").coalgebra("C")};
  for (int n = 0; n < kCases; ++n) {
    const Coalgebra<Q>& base = bases[g.uniform(0, static_cast<int>(bases.size()) - 1)];
    Coalgebra<Q> co = transport(base, g.invertible<Q>(base.c.dim()));
    REQUIRE(checkCoalgebra(co).ok());
    DualAlgebra<Q> d = dualAlgebraOfCoalgebra(co, makeDualityData<Q>(co.c));
    REQUIRE(checkAlgebra(d.alg).ok());
    REQUIRE(checkRightModule(d.onC, d.alg).ok());
    auto [m, u] = convolutionOracle(co);
    REQUIRE(equal(d.alg.m.mat, m));
    REQUIRE(equal(d.alg.unit.mat, u));
  }
}

TEST_CASE("Frobenius coalgebra examples") {
  Workspace<Q> f1 = fixture("F1");
  Coalgebra<Q> c1 = f1.coalgebra("C");
  CHECK(checkFrobeniusCoalgebra(c1, f1.mor("t"), f1.mor("B")).ok());

  Workspace<Q> f2 = fixture("F2");
  Coalgebra<Q> c2 = f2.coalgebra("C");
  CHECK(checkFrobeniusCoalgebra(c2, f2.mor("t"), f2.mor("B")).ok());
  Mor<Q> c0 = f2.mor("t");
  c0.mat(0, 0) = Q(1);
  c0.mat(1, 0) = Q(0);
  Report<Q> r = checkFrobeniusCoalgebra(c2, c0, f2.mor("B"));
  CHECK(r.passed("frobcoalg.balance"));
  CHECK_FALSE(r.passed("frobcoalg.counit_left"));
}

TEST_CASE("property: Frobenius systems are rigid under rescaling") {
  Gen g(22);
  Workspace<Q> f1 = fixture("F1"), f2 = fixture("F2");
  struct Case {
    Coalgebra<Q> co;
    Mor<Q> t, B;
  };
  std::vector<Case> cases = {{f1.coalgebra("C"), f1.mor("t"), f1.mor("B")},
                             {f2.coalgebra("C"), f2.mor("t"), f2.mor("B")}};
  for (int n = 0; n < kCases; ++n) {
    const Case& c = cases[n % 2];
    Q lam;
    do lam = g.scalar<Q>(5);
    while (lam == Q(0) || lam == Q(1));
    Mor<Q> t = c.t, B = c.B;
    t.mat *= lam;
    B.mat /= lam;
    REQUIRE(checkFrobeniusCoalgebra(c.co, t, B).ok());
    REQUIRE_FALSE(checkFrobeniusCoalgebra(c.co, t, c.B).ok());
  }
}

TEST_CASE("module laws and module maps") {
  Algebra<Q> al = groupAlgebraZ2<Q>();
  RightModule<Q> reg{al.a, al.m};
  CHECK(checkRightModule(reg, al).ok());
  RightModule<Q> free = freeModule(al, gen("V", 2));
  CHECK(checkRightModule(free, al).ok());
  CHECK(checkLeftModule(LeftModule<Q>{al.a, al.m}, al).ok());
  // multiplication by a fixed element on the left is right linear
  Mat<Q> gv = zeros<Q>(2, 1);
  gv(1, 0) = Q(1);
  Mor<Q> byG = comp(al.m, tens<Q>(Mor<Q>(Obj(), al.a, gv), al.a));
  CHECK(isModuleMorphism(reg, reg, byG, al));
  Mor<Q> proj(al.a, al.a, zeros<Q>(2, 2));
  proj.mat(0, 0) = Q(1);
  CHECK_FALSE(isModuleMorphism(reg, reg, proj, al));
  RightModule<Q> broken = reg;
  broken.mu.mat(0, 0) = Q(2);
  CHECK_FALSE(checkRightModule(broken, al).ok());
}
