#ifndef CWK_WREATH_HPP
#define CWK_WREATH_HPP

#include "cwk/entwine.hpp"

namespace cwk {

// phi : a y -> y a
template <class S>
struct LeftTransfer {
  Algebra<S> alg;
  Obj y;
  Mor<S> phi;
};

template <class S>
Report<S> checkLeftTransfer(const LeftTransfer<S>& lt) {
  Report<S> r;
  r.subject = "left transfer " + lt.y.str() + " over " + lt.alg.a.str();
  const Obj &A = lt.alg.a, &Y = lt.y;
  const Mor<S>&m = lt.alg.m, &eta = lt.alg.unit, &phi = lt.phi;
  expectEqual(r, "lefttransfer.mult", comp(phi, tens<S>(m, Y)), comp(tens<S>(Y, m), tens<S>(phi, A), tens<S>(A, phi)));
  expectEqual(r, "lefttransfer.unit", comp(phi, tens<S>(eta, Y)), tens<S>(Y, eta));
  return r;
}

// phi = (y a d)(y psi y)(b a y)
template <class S>
LeftTransfer<S> dualTransfer(const Transfer<S>& tr, const DualityData<S>& du) {
  if (!(du.x == tr.x)) throw TypeError("duality is not on " + tr.x.str());
  const Obj &A = tr.alg.a, &Y = du.y;
  return {tr.alg, Y, comp(tens<S>(Y, A, du.d), tens<S>(Y, tr.psi, Y), tens<S>(du.b, A, Y))};
}

// f : x -> a x' gives y' -> y a.
template <class S>
Mor<S> dualTAHom(const Mor<S>& f, const Obj& A, const DualityData<S>& dx, const DualityData<S>& dx2) {
  if (!(f.dom == dx.x) || !(f.cod == A + dx2.x)) throw TypeError("dualTAHom: f does not match the dualities");
  return comp(tens<S>(dx.y, A, dx2.d), tens<S>(dx.y, f, dx2.y), tens<S>(dx.b, dx2.y));
}

// mY : y y -> y a, etaY : 1 -> y a
template <class S>
struct RightWreath {
  LeftTransfer<S> lt;
  Mor<S> mY;
  Mor<S> etaY;
};

template <class S>
RightWreath<S> wreathFromCowreath(const Cowreath<S>& cw, const DualityData<S>& du) {
  const Obj& A = cw.A();
  DualityData<S> unitDual{Obj(), Obj(), id<S>(Obj()), id<S>(Obj())};
  return {dualTransfer(cw.base, du), dualTAHom(cw.delta, A, du, compositeDuality(du, du)),
          dualTAHom(cw.eps, A, du, unitDual)};
}

template <class S>
Report<S> checkRightWreath(const RightWreath<S>& w) {
  Report<S> r = checkLeftTransfer(w.lt);
  r.subject = "right wreath " + w.lt.y.str() + " over " + w.lt.alg.a.str();
  const Obj &A = w.lt.alg.a, &Y = w.lt.y;
  const Mor<S>&m = w.lt.alg.m, &eta = w.lt.alg.unit, &phi = w.lt.phi, &mY = w.mY, &etaY = w.etaY;
  Mor<S> Ym = tens<S>(Y, m);
  expectEqual(r, "rightwreath.mult_hom", comp(Ym, tens<S>(phi, A), tens<S>(A, mY)),
              comp(Ym, tens<S>(mY, A), tens<S>(Y, phi), tens<S>(phi, Y)));
  expectEqual(r, "rightwreath.assoc", comp(Ym, tens<S>(mY, A), tens<S>(Y, phi), tens<S>(mY, Y)),
              comp(Ym, tens<S>(mY, A), tens<S>(Y, mY)));
  expectEqual(r, "rightwreath.unit_hom", comp(Ym, tens<S>(etaY, A)), comp(Ym, tens<S>(phi, A), tens<S>(A, etaY)));
  expectEqual(r, "rightwreath.left_unit", comp(Ym, tens<S>(mY, A), tens<S>(Y, phi), tens<S>(etaY, Y)), tens<S>(Y, eta));
  expectEqual(r, "rightwreath.right_unit", comp(Ym, tens<S>(mY, A), tens<S>(Y, etaY)), tens<S>(Y, eta));
  return r;
}

template <class S>
struct SmashAlgebra {
  RightWreath<S> wr;
  Algebra<S> asAlgebra;  // on y a
};

template <class S>
SmashAlgebra<S> smashProduct(const RightWreath<S>& w) {
  const Obj &A = w.lt.alg.a, &Y = w.lt.y;
  Mor<S> m = comp(tens<S>(Y, w.lt.alg.m), tens<S>(w.mY, w.lt.alg.m), tens<S>(Y, w.lt.phi, A));
  return {w, {Y + A, m, w.etaY}};
}

// Multiplication of y a written directly from the cowreath, for cross-checking.
template <class S>
Mor<S> smashMultFromCowreath(const Cowreath<S>& cw, const DualityData<S>& du) {
  const Obj &A = cw.A(), &X = cw.X(), &Y = du.y;
  const Mor<S>& m = cw.m();
  return comp(tens<S>(Y, m), tens<S>(Y, m, du.d, A), tens<S>(Y, A, cw.psi(), Y, A), tens<S>(Y, A, X, du.d, A, Y, A),
              tens<S>(Y, cw.delta, Y, A, Y, A), tens<S>(du.b, Y, A, Y, A));
}

template <class S>
SmashAlgebra<S> smashFromCowreath(const Cowreath<S>& cw, const DualityData<S>& du) {
  return smashProduct(wreathFromCowreath(cw, du));
}

// Entwined module to a right module over y a: mu (M d A)(rho Y A).
template <class S>
RightModule<S> toSmashModule(const EntwinedModule<S>& em, const Cowreath<S>& cw, const DualityData<S>& du) {
  const Obj &A = cw.A(), &Y = du.y, &M = em.m;
  return {M, comp(em.mu, tens<S>(M, du.d, A), tens<S>(em.rho, Y, A))};
}

template <class S>
EntwinedModule<S> fromSmashModule(const RightModule<S>& n, const Cowreath<S>& cw, const DualityData<S>& du) {
  const Obj &A = cw.A(), &X = cw.X(), &Y = du.y, &M = n.m;
  Mor<S> mu = comp(n.mu, tens<S>(M, Y, cw.m()), tens<S>(M, Y, cw.eps, A), tens<S>(M, du.b, A));
  Mor<S> rho = comp(tens<S>(n.mu, X), tens<S>(M, Y, cw.eta(), X), tens<S>(M, du.b));
  return {M, mu, rho};
}

// Module-side data from the coring route; see coring.hpp for how it is built.
template <class S>
struct SmashConsistencyData {
  Mor<S> mYA;     // y y a -> y a, with y y a standing for (y a)(y a) over a
  Mor<S> nuYYA;   // a y y a -> y y a
  Mor<S> f;       // a y y a -> y a, the defining composite for mYA
  Mor<S> etaYA;   // a -> y a
  Mor<S> nuYA;    // a y a -> y a
  Mor<S> muBar;   // a x y a -> a x, the smash action on the cofree module a x
  Mor<S> muTilde; // (a x . y a) -> a x
  Mor<S> q;       // a x y a -> (a x . y a)
};

template <class S>
Report<S> smashConsistency(const SmashAlgebra<S>& sa, const SmashConsistencyData<S>& d) {
  Report<S> r;
  r.subject = "smash product against the coring adjunction";
  const Obj& Y = sa.wr.lt.y;
  expectEqual(r, "smashcoring.mult_descends", comp(d.mYA, d.nuYYA), d.f);
  expectEqual(r, "smashcoring.mult", sa.asAlgebra.m, comp(d.mYA, tens<S>(Y, d.nuYA)));
  expectEqual(r, "smashcoring.unit", sa.asAlgebra.unit, comp(d.etaYA, sa.wr.lt.alg.unit));
  expectEqual(r, "smashcoring.action", d.muBar, comp(d.muTilde, d.q));
  return r;
}

}  // namespace cwk

#endif
