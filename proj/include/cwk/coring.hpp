#ifndef CWK_CORING_HPP
#define CWK_CORING_HPP

#include "cwk/frobsep.hpp"

#include <optional>
#include <random>

namespace cwk {

// nu : a m -> m, mu : m a -> m
template <class S>
struct Bimodule {
  Obj obj;
  Mor<S> nu;
  Mor<S> mu;
};

template <class S>
Bimodule<S> regularBimodule(const Algebra<S>& al) {
  return {al.a, al.m, al.m};
}

template <class S>
Report<S> checkBimodule(const Bimodule<S>& b, const Algebra<S>& al, const std::string& prefix = "bimodule") {
  Report<S> r;
  r.subject = "bimodule " + b.obj.str();
  const Obj &A = al.a, &M = b.obj;
  expectEqual(r, prefix + ".left_assoc", comp(b.nu, tens<S>(A, b.nu)), comp(b.nu, tens<S>(al.m, M)));
  expectEqual(r, prefix + ".left_unit", comp(b.nu, tens<S>(al.unit, M)), id<S>(M));
  expectEqual(r, prefix + ".right_assoc", comp(b.mu, tens<S>(b.mu, A)), comp(b.mu, tens<S>(M, al.m)));
  expectEqual(r, prefix + ".right_unit", comp(b.mu, tens<S>(M, al.unit)), id<S>(M));
  expectEqual(r, prefix + ".commute", comp(b.mu, tens<S>(b.nu, A)), comp(b.nu, tens<S>(A, b.mu)));
  return r;
}

template <class S>
bool isBimoduleMap(const Bimodule<S>& from, const Bimodule<S>& to, const Mor<S>& f, const Algebra<S>& al) {
  return sameMor(comp(f, from.nu), comp(to.nu, tens<S>(al.a, f))) &&
         sameMor(comp(f, from.mu), comp(to.mu, tens<S>(f, al.a)));
}

// x . y as the cokernel of mu y - x nu on x a y. The quotient is a fresh
// generator so that q and s stay typed morphisms.
template <class S>
struct QuotientData {
  Obj ambient;   // x y
  Obj quotient;  // single generator
  Mor<S> relation;
  Mor<S> q;
  Mor<S> s;
};

template <class S>
QuotientData<S> tensorOverA(const Obj& X, const Mor<S>& muX, const Obj& Y, const Mor<S>& nuY, const Algebra<S>& al) {
  if (muX.dom != X + al.a || nuY.dom != al.a + Y) throw TypeError("tensorOverA: actions do not match the algebra");
  Mor<S> rel = tens<S>(muX, Y) - tens<S>(X, nuY);
  Cokernel<S> k = cokernelProjection(rel.mat);
  Obj quo(GenObj{"(" + X.str() + " . " + Y.str() + ")", static_cast<int>(k.q.rows())});
  return {X + Y, quo, rel, Mor<S>(X + Y, quo, k.q), Mor<S>(quo, X + Y, k.s)};
}

template <class S>
struct BimoduleTensor {
  QuotientData<S> qd;
  Bimodule<S> bim;
};

template <class S>
BimoduleTensor<S> tensorBimodules(const Bimodule<S>& x, const Bimodule<S>& y, const Algebra<S>& al) {
  const Obj& A = al.a;
  QuotientData<S> qd = tensorOverA(x.obj, x.mu, y.obj, y.nu, al);
  Mor<S> nu = comp(qd.q, tens<S>(x.nu, y.obj), tens<S>(A, qd.s));
  Mor<S> mu = comp(qd.q, tens<S>(x.obj, y.mu), tens<S>(qd.s, A));
  return {qd, {qd.quotient, nu, mu}};
}

template <class S>
bool descends(const Mor<S>& f, const Mor<S>& g, const QuotientData<S>& src, const QuotientData<S>& tgt) {
  return isZero(comp(tgt.q, tens<S>(f, g), src.relation).mat);
}

// f . g = q (f g) s, defined when f g carries relations to relations.
template <class S>
Mor<S> tensorMorOverA(const Mor<S>& f, const Mor<S>& g, const QuotientData<S>& src, const QuotientData<S>& tgt) {
  if (!descends(f, g, src, tgt)) throw TypeError("morphisms do not descend to " + tgt.quotient.str());
  return comp(tgt.q, tens<S>(f, g), src.s);
}

// x . a -> x
template <class S>
struct Unitor {
  QuotientData<S> qd;
  Mor<S> iso;
  Mor<S> inverse;
};

template <class S>
Unitor<S> rightUnitor(const Obj& X, const Mor<S>& muX, const Algebra<S>& al) {
  QuotientData<S> qd = tensorOverA(X, muX, al.a, al.m, al);
  return {qd, comp(muX, qd.s), comp(qd.q, tens<S>(X, al.unit))};
}

// a . y -> y
template <class S>
Unitor<S> leftUnitor(const Obj& Y, const Mor<S>& nuY, const Algebra<S>& al) {
  QuotientData<S> qd = tensorOverA(al.a, al.m, Y, nuY, al);
  return {qd, comp(nuY, qd.s), comp(qd.q, tens<S>(al.unit, Y))};
}

template <class S>
Report<S> checkUnitors(const Bimodule<S>& x, const Algebra<S>& al) {
  Report<S> r;
  r.subject = "unit isomorphisms of " + x.obj.str();
  Unitor<S> rho = rightUnitor(x.obj, x.mu, al), lam = leftUnitor(x.obj, x.nu, al);
  expectEqual(r, "unitor.right_descends", comp(rho.iso, rho.qd.q), x.mu);
  expectEqual(r, "unitor.right_inverse", comp(rho.iso, rho.inverse), id<S>(x.obj));
  expectEqual(r, "unitor.right_inverse2", comp(rho.inverse, rho.iso), id<S>(rho.qd.quotient));
  expectEqual(r, "unitor.left_descends", comp(lam.iso, lam.qd.q), x.nu);
  expectEqual(r, "unitor.left_inverse", comp(lam.iso, lam.inverse), id<S>(x.obj));
  expectEqual(r, "unitor.left_inverse2", comp(lam.inverse, lam.iso), id<S>(lam.qd.quotient));
  return r;
}

// alpha : x . (y . z) -> (x . y) . z with alpha q (x q) = q (q z).
template <class S>
struct Associator {
  BimoduleTensor<S> xy, xy_z, yz, x_yz;
  Mor<S> alpha;
  Mor<S> inverse;
};

template <class S>
Associator<S> associator(const Bimodule<S>& x, const Bimodule<S>& y, const Bimodule<S>& z, const Algebra<S>& al) {
  Associator<S> a;
  a.xy = tensorBimodules(x, y, al);
  a.xy_z = tensorBimodules(a.xy.bim, z, al);
  a.yz = tensorBimodules(y, z, al);
  a.x_yz = tensorBimodules(x, a.yz.bim, al);
  a.alpha = comp(a.xy_z.qd.q, tens<S>(a.xy.qd.q, z.obj), tens<S>(x.obj, a.yz.qd.s), a.x_yz.qd.s);
  a.inverse = comp(a.x_yz.qd.q, tens<S>(x.obj, a.yz.qd.q), tens<S>(a.xy.qd.s, z.obj), a.xy_z.qd.s);
  return a;
}

template <class S>
Report<S> checkAssociator(const Associator<S>& a, const Bimodule<S>& x, const Bimodule<S>& z) {
  Report<S> r;
  r.subject = "associator";
  expectEqual(r, "assoc.defining", comp(a.alpha, a.x_yz.qd.q, tens<S>(x.obj, a.yz.qd.q)),
              comp(a.xy_z.qd.q, tens<S>(a.xy.qd.q, z.obj)));
  expectEqual(r, "assoc.inverse", comp(a.inverse, a.alpha), id<S>(a.x_yz.qd.quotient));
  expectEqual(r, "assoc.inverse2", comp(a.alpha, a.inverse), id<S>(a.xy_z.qd.quotient));
  return r;
}

// Object-level robustness: (m x) . y -> m (x . y) with theta q = m q.
template <class S>
Report<S> checkRobustness(const Obj& M, const Obj& X, const Mor<S>& muX, const Obj& Y, const Mor<S>& nuY,
                          const Algebra<S>& al) {
  Report<S> r;
  r.subject = "robustness of " + M.str();
  QuotientData<S> inner = tensorOverA(X, muX, Y, nuY, al);
  QuotientData<S> outer = tensorOverA(M + X, tens<S>(M, muX), Y, nuY, al);
  Mor<S> theta = comp(tens<S>(M, inner.q), outer.s);
  expectEqual(r, "robust.defining", comp(theta, outer.q), tens<S>(M, inner.q));
  auto inv = matInverse(theta.mat);
  r.flag("robust.iso", inv.has_value());
  return r;
}

template <class S>
struct Coring {
  Algebra<S> alg;
  Bimodule<S> c;
  BimoduleTensor<S> cc;
  Mor<S> delta;  // c -> c . c
  Mor<S> eps;    // c -> a
};

template <class S>
Report<S> checkCoring(const Coring<S>& co) {
  const Algebra<S>& al = co.alg;
  Report<S> r = checkBimodule(co.c, al, "coring.bimodule");
  r.subject = "coring " + co.c.obj.str();
  Bimodule<S> A = regularBimodule(al);
  r.flag("coring.delta_bilinear", isBimoduleMap(co.c, co.cc.bim, co.delta, al));
  r.flag("coring.eps_bilinear", isBimoduleMap(co.c, A, co.eps, al));
  if (!r.ok()) return r;
  Associator<S> a = associator(co.c, co.c, co.c, al);
  Mor<S> left = comp(tensorMorOverA(co.delta, id<S>(co.c.obj), co.cc.qd, a.xy_z.qd), co.delta);
  Mor<S> right = comp(a.alpha, tensorMorOverA(id<S>(co.c.obj), co.delta, co.cc.qd, a.x_yz.qd), co.delta);
  expectEqual(r, "coring.coassoc", left, right);
  Unitor<S> lam = leftUnitor(co.c.obj, co.c.nu, al), rho = rightUnitor(co.c.obj, co.c.mu, al);
  expectEqual(r, "coring.left_counit", comp(lam.iso, tensorMorOverA(co.eps, id<S>(co.c.obj), co.cc.qd, lam.qd), co.delta),
              id<S>(co.c.obj));
  expectEqual(r, "coring.right_counit",
              comp(rho.iso, tensorMorOverA(id<S>(co.c.obj), co.eps, co.cc.qd, rho.qd), co.delta), id<S>(co.c.obj));
  return r;
}

// The coring a x of a cowreath, with a x . a x identified with a x x.
template <class S>
struct CowreathCoring {
  Coring<S> coring;
  Obj x;
  Mor<S> deltaRaw;    // a x -> a x x
  Mor<S> upsilon;     // a x . a x -> a x x
  Mor<S> upsilonInv;
};

template <class S>
CowreathCoring<S> coringFromCowreath(const Cowreath<S>& cw) {
  const Obj &A = cw.A(), &X = cw.X();
  const Mor<S>& m = cw.m();
  const Algebra<S>& al = cw.base.alg;
  Bimodule<S> c{A + X, tens<S>(m, X), comp(tens<S>(m, X), tens<S>(A, cw.psi()))};
  BimoduleTensor<S> cc = tensorBimodules(c, c, al);
  Mor<S> deltaRaw = comp(tens<S>(m, X, X), tens<S>(A, cw.delta));
  Mor<S> upsInv = comp(cc.qd.q, tens<S>(A, X, cw.eta(), X));
  Mor<S> ups = comp(tens<S>(c.mu, X), cc.qd.s);
  Mor<S> eps = comp(m, tens<S>(A, cw.eps));
  return {{al, c, cc, comp(upsInv, deltaRaw), eps}, X, deltaRaw, ups, upsInv};
}

template <class S>
Report<S> checkCoringIdentification(const CowreathCoring<S>& cc) {
  Report<S> r;
  r.subject = "a x . a x against a x x";
  const Coring<S>& co = cc.coring;
  const Obj& X = cc.x;
  expectEqual(r, "coringid.defining", comp(cc.upsilon, co.cc.qd.q), tens<S>(co.c.mu, X));
  expectEqual(r, "coringid.inverse", comp(cc.upsilon, cc.upsilonInv), id<S>(co.c.obj + X));
  expectEqual(r, "coringid.inverse2", comp(cc.upsilonInv, cc.upsilon), id<S>(co.cc.qd.quotient));
  return r;
}

namespace coringdetail {

// Raw balance residual for B : c . c -> a given through Bhat = B q.
template <class S>
Mor<S> balance(const Coring<S>& co, const Mor<S>& Bq) {
  const Obj& C = co.c.obj;
  Mor<S> dhat = comp(co.cc.qd.s, co.delta);
  return comp(co.c.mu, tens<S>(C, Bq), tens<S>(dhat, C)) - comp(co.c.nu, tens<S>(Bq, C), tens<S>(C, dhat));
}

template <class S>
std::vector<Mat<S>> bimoduleResiduals(const Coring<S>& co, const Mor<S>& B) {
  const Algebra<S>& al = co.alg;
  return {(comp(B, co.cc.bim.nu) - comp(al.m, tens<S>(al.a, B))).mat,
          (comp(B, co.cc.bim.mu) - comp(al.m, tens<S>(B, al.a))).mat};
}

template <class S>
std::vector<Mat<S>> tResiduals(const Coring<S>& co, const Mor<S>& t) {
  const Algebra<S>& al = co.alg;
  return {(comp(t, al.m) - comp(co.c.nu, tens<S>(al.a, t))).mat,
          (comp(t, al.m) - comp(co.c.mu, tens<S>(t, al.a))).mat};
}

}  // namespace coringdetail

// Coring-level Frobenius data: t : a -> c and B : c . c -> a.
template <class S>
Report<S> checkCoringFrobenius(const Coring<S>& co, const Mor<S>& t, const Mor<S>& B) {
  Report<S> r;
  r.subject = "Frobenius coring " + co.c.obj.str();
  const Obj& C = co.c.obj;
  const Algebra<S>& al = co.alg;
  r.flag("coringfrob.t_bilinear", isBimoduleMap(regularBimodule(al), co.c, t, al));
  r.flag("coringfrob.B_bilinear", isBimoduleMap(co.cc.bim, regularBimodule(al), B, al));
  Mor<S> Bq = comp(B, co.cc.qd.q);
  Mor<S> bal = coringdetail::balance(co, Bq);
  r.checks.push_back({"coringfrob.balance", isZero(bal.mat), bal.mat, {}});
  Mor<S> t1 = comp(t, al.unit);
  expectEqual(r, "coringfrob.counit_left", comp(Bq, tens<S>(t1, C)), co.eps);
  expectEqual(r, "coringfrob.counit_right", comp(Bq, tens<S>(C, t1)), co.eps);
  return r;
}

// Transports a Frobenius system on the cowreath to the coring a x.
template <class S>
std::pair<Mor<S>, Mor<S>> coringFrobeniusFromSystem(const Cowreath<S>& cw, const CowreathCoring<S>& cc,
                                                     const FrobeniusSystem<S>& fs) {
  const Obj &A = cw.A(), &X = cw.X();
  Mor<S> t = comp(tens<S>(cw.m(), X), tens<S>(A, fs.t));
  Mor<S> B = comp(cw.m(), tens<S>(A, fs.B), cc.upsilon);
  return {t, B};
}

template <class S>
struct CoringFrobeniusSearch {
  std::optional<std::pair<Mor<S>, Mor<S>>> found;
  Index dimT = 0;
  int trials = 0;
};

// Samples bimodule maps t : a -> c and solves the remaining conditions,
// which are linear in B, exactly.
template <class S>
CoringFrobeniusSearch<S> searchCoringFrobenius(const Coring<S>& co, int trials, std::uint64_t seed) {
  CoringFrobeniusSearch<S> out;
  const Algebra<S>& al = co.alg;
  const Obj &A = al.a, &C = co.c.obj, &CC = co.cc.qd.quotient;
  AffineSystem<S> tsys = linearize<S>(C.dim(), A.dim(), [&](const Mat<S>& tm) {
    return coringdetail::tResiduals(co, Mor<S>(A, C, tm));
  });
  Mat<S> T = kernelBasis(tsys.lhs);
  out.dimT = T.cols();
  if (T.cols() == 0) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int k = 0; k < trials; ++k) {
    ++out.trials;
    Mat<S> tv = zeros<S>(T.rows(), 1);
    for (Index j = 0; j < T.cols(); ++j) tv += S(coeff(rng)) * T.col(j);
    Mor<S> t(A, C, unvec<S>(tv, C.dim(), A.dim()));
    Mor<S> t1 = comp(t, al.unit);
    AffineSystem<S> bsys = linearize<S>(A.dim(), CC.dim(), [&](const Mat<S>& bm) {
      Mor<S> B(CC, A, bm);
      Mor<S> Bq = comp(B, co.cc.qd.q);
      std::vector<Mat<S>> res = coringdetail::bimoduleResiduals(co, B);
      res.push_back(coringdetail::balance(co, Bq).mat);
      res.push_back((comp(Bq, tens<S>(t1, C)) - co.eps).mat);
      res.push_back((comp(Bq, tens<S>(C, t1)) - co.eps).mat);
      return res;
    });
    SeparabilityResult<S> sol = solveAffine(bsys, CC, A);
    if (sol.witness && checkCoringFrobenius(co, t, *sol.witness).ok()) {
      out.found = std::make_pair(t, *sol.witness);
      break;
    }
  }
  return out;
}

// B : c . c -> a bilinear, balanced, with B delta = eps.
template <class S>
SeparabilityResult<S> solveCoringCoseparability(const Coring<S>& co) {
  const Algebra<S>& al = co.alg;
  const Obj &A = al.a, &CC = co.cc.qd.quotient;
  AffineSystem<S> sys = linearize<S>(A.dim(), CC.dim(), [&](const Mat<S>& bm) {
    Mor<S> B(CC, A, bm);
    std::vector<Mat<S>> res = coringdetail::bimoduleResiduals(co, B);
    res.push_back(coringdetail::balance(co, comp(B, co.cc.qd.q)).mat);
    res.push_back((comp(B, co.delta) - co.eps).mat);
    return res;
  });
  return solveAffine(sys, CC, A);
}

// The bimodule adjunction a x -| y a.
template <class S>
struct CoringAdjunction {
  Bimodule<S> ax, ya;
  BimoduleTensor<S> ya_ax, ax_ya;
  Mor<S> unitRaw;  // a -> y a x
  Mor<S> unit;     // a -> y a . a x
  Mor<S> counitRaw;  // a x y a -> a
  Mor<S> counit;   // a x . y a -> a
};

template <class S>
CoringAdjunction<S> coringAdjunction(const Cowreath<S>& cw, const DualityData<S>& du) {
  const Obj &A = cw.A(), &X = cw.X(), &Y = du.y;
  const Algebra<S>& al = cw.base.alg;
  const Mor<S>& m = cw.m();
  LeftTransfer<S> lt = dualTransfer(cw.base, du);
  CoringAdjunction<S> a;
  a.ax = {A + X, tens<S>(m, X), comp(tens<S>(m, X), tens<S>(A, cw.psi()))};
  a.ya = {Y + A, comp(tens<S>(Y, m), tens<S>(lt.phi, A)), tens<S>(Y, m)};
  a.ya_ax = tensorBimodules(a.ya, a.ax, al);
  a.ax_ya = tensorBimodules(a.ax, a.ya, al);
  a.unitRaw = comp(tens<S>(Y, cw.psi()), tens<S>(du.b, A));
  a.unit = comp(a.ya_ax.qd.q, tens<S>(Y, A, cw.eta(), X), a.unitRaw);
  a.counitRaw = comp(m, tens<S>(A, du.d, A));
  a.counit = comp(a.counitRaw, a.ax_ya.qd.s);
  return a;
}

template <class S>
Report<S> checkCoringAdjunction(const CoringAdjunction<S>& a, const Algebra<S>& al) {
  Report<S> r;
  r.subject = "adjunction a x -| y a";
  r.merge(checkBimodule(a.ax, al, "coradj.ax"));
  r.merge(checkBimodule(a.ya, al, "coradj.ya"));
  if (!r.ok()) return r;
  const Obj &AX = a.ax.obj, &YA = a.ya.obj;
  Bimodule<S> Abim = regularBimodule(al);
  Mor<S> leak = comp(a.counitRaw, a.ax_ya.qd.relation);
  r.checks.push_back({"coradj.counit_descends", isZero(leak.mat), leak.mat, {}});
  r.flag("coradj.unit_bilinear", isBimoduleMap(Abim, a.ya_ax.bim, a.unit, al));
  r.flag("coradj.counit_bilinear", isBimoduleMap(a.ax_ya.bim, Abim, a.counit, al));
  if (!r.ok()) return r;

  // a x -> a x . a -> a x . (y a . a x) -> (a x . y a) . a x -> a . a x -> a x
  Unitor<S> rhoAX = rightUnitor(AX, a.ax.mu, al), lamAX = leftUnitor(AX, a.ax.nu, al);
  Associator<S> as1 = associator(a.ax, a.ya, a.ax, al);
  Mor<S> axB = tensorMorOverA(id<S>(AX), a.unit, rhoAX.qd, as1.x_yz.qd);
  Mor<S> dAX = tensorMorOverA(a.counit, id<S>(AX), as1.xy_z.qd, lamAX.qd);
  expectEqual(r, "coradj.triangle_ax", comp(lamAX.iso, dAX, as1.alpha, axB, rhoAX.inverse), id<S>(AX));

  // y a -> a . y a -> (y a . a x) . y a -> y a . (a x . y a) -> y a . a -> y a
  Unitor<S> rhoYA = rightUnitor(YA, a.ya.mu, al), lamYA = leftUnitor(YA, a.ya.nu, al);
  Associator<S> as2 = associator(a.ya, a.ax, a.ya, al);
  Mor<S> bYA = tensorMorOverA(a.unit, id<S>(YA), lamYA.qd, as2.xy_z.qd);
  Mor<S> yaD = tensorMorOverA(id<S>(YA), a.counit, as2.x_yz.qd, rhoYA.qd);
  expectEqual(r, "coradj.triangle_ya", comp(rhoYA.iso, yaD, as2.inverse, bYA, lamYA.inverse), id<S>(YA));
  return r;
}

template <class S>
SmashConsistencyData<S> smashConsistencyData(const Cowreath<S>& cw, const DualityData<S>& du) {
  const Obj &A = cw.A(), &X = cw.X(), &Y = du.y;
  const Mor<S>& m = cw.m();
  CoringAdjunction<S> adj = coringAdjunction(cw, du);
  LeftTransfer<S> lt = dualTransfer(cw.base, du);
  DualityData<S> du2 = compositeDuality(du, du);
  Mor<S> deltaRaw = comp(tens<S>(m, X, X), tens<S>(A, cw.delta));
  SmashConsistencyData<S> d;
  d.nuYA = adj.ya.nu;
  d.nuYYA = comp(tens<S>(Y, d.nuYA), tens<S>(lt.phi, Y, A));
  d.f = comp(tens<S>(Y, m), tens<S>(Y, A, du2.d, A), tens<S>(Y, deltaRaw, Y, Y, A), tens<S>(adj.unitRaw, Y, Y, A));
  d.mYA = comp(d.f, tens<S>(cw.eta(), Y, Y, A));
  d.etaYA = comp(tens<S>(Y, comp(m, tens<S>(A, cw.eps))), adj.unitRaw);
  EntwinedModule<S> cofree = cofreeEntwined(cw, RightModule<S>{A, m});
  d.muBar = toSmashModule(cofree, cw, du).mu;
  d.q = adj.ax_ya.qd.q;
  d.muTilde = comp(adj.ax.mu, tens<S>(A, X, du.d, A), tens<S>(deltaRaw, Y, A), adj.ax_ya.qd.s);
  return d;
}

}  // namespace cwk

#endif
