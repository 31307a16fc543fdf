#ifndef CWK_STRUCTURES_HPP
#define CWK_STRUCTURES_HPP

#include "cwk/moncat.hpp"

namespace cwk {

template <class S>
struct Algebra {
  Obj a;
  Mor<S> m;     // a a -> a
  Mor<S> unit;  // 1 -> a
};

template <class S>
struct Coalgebra {
  Obj c;
  Mor<S> delta;   // c -> c c
  Mor<S> counit;  // c -> 1
};

template <class S>
struct RightModule {
  Obj m;
  Mor<S> mu;  // m a -> m
};

template <class S>
struct LeftModule {
  Obj m;
  Mor<S> nu;  // a m -> m
};

// The unit object as the trivial algebra.
template <class S>
Algebra<S> unitAlgebra() {
  return {Obj(), id<S>(Obj()), id<S>(Obj())};
}

template <class S>
Report<S> checkAlgebra(const Algebra<S>& al) {
  Report<S> r;
  r.subject = "algebra " + al.a.str();
  const Obj& A = al.a;
  expectEqual(r, "algebra.assoc", comp(al.m, tens<S>(al.m, A)), comp(al.m, tens<S>(A, al.m)));
  expectEqual(r, "algebra.left_unit", comp(al.m, tens<S>(al.unit, A)), id<S>(A));
  expectEqual(r, "algebra.right_unit", comp(al.m, tens<S>(A, al.unit)), id<S>(A));
  return r;
}

template <class S>
Report<S> checkCoalgebra(const Coalgebra<S>& co) {
  Report<S> r;
  r.subject = "coalgebra " + co.c.str();
  const Obj& C = co.c;
  expectEqual(r, "coalgebra.coassoc", comp(tens<S>(co.delta, C), co.delta), comp(tens<S>(C, co.delta), co.delta));
  expectEqual(r, "coalgebra.left_counit", comp(tens<S>(co.counit, C), co.delta), id<S>(C));
  expectEqual(r, "coalgebra.right_counit", comp(tens<S>(C, co.counit), co.delta), id<S>(C));
  return r;
}

template <class S>
Report<S> checkRightModule(const RightModule<S>& md, const Algebra<S>& al) {
  Report<S> r;
  r.subject = "right module " + md.m.str();
  const Obj &M = md.m, &A = al.a;
  expectEqual(r, "module.assoc", comp(md.mu, tens<S>(md.mu, A)), comp(md.mu, tens<S>(M, al.m)));
  expectEqual(r, "module.unit", comp(md.mu, tens<S>(M, al.unit)), id<S>(M));
  return r;
}

template <class S>
Report<S> checkLeftModule(const LeftModule<S>& md, const Algebra<S>& al) {
  Report<S> r;
  r.subject = "left module " + md.m.str();
  const Obj &M = md.m, &A = al.a;
  expectEqual(r, "leftmodule.assoc", comp(md.nu, tens<S>(A, md.nu)), comp(md.nu, tens<S>(al.m, M)));
  expectEqual(r, "leftmodule.unit", comp(md.nu, tens<S>(al.unit, M)), id<S>(M));
  return r;
}

template <class S>
bool isModuleMorphism(const RightModule<S>& from, const RightModule<S>& to, const Mor<S>& f, const Algebra<S>& al) {
  return sameMor(comp(f, from.mu), comp(to.mu, tens<S>(f, al.a)));
}

// Dual algebra of a coalgebra c with c -| a.
template <class S>
struct DualAlgebra {
  Algebra<S> alg;
  RightModule<S> onC;  // c a -> c
};

template <class S>
DualAlgebra<S> dualAlgebraOfCoalgebra(const Coalgebra<S>& co, const DualityData<S>& du) {
  if (!(du.x == co.c)) throw TypeError("duality is not on the coalgebra object");
  const Obj &C = co.c, &A = du.y;
  DualityData<S> du2 = compositeDuality(du, du);
  Mor<S> m = comp(tens<S>(A, du2.d), tens<S>(A, co.delta, A, A), tens<S>(du.b, A, A));
  Mor<S> eta = comp(tens<S>(A, co.counit), du.b);
  Mor<S> mu = comp(tens<S>(C, du.d), tens<S>(co.delta, A));
  return {{A, m, eta}, {C, mu}};
}

// Frobenius coalgebra data: t : 1 -> c, B : c c -> 1.
template <class S>
Report<S> checkFrobeniusCoalgebra(const Coalgebra<S>& co, const Mor<S>& t, const Mor<S>& B) {
  Report<S> r;
  r.subject = "Frobenius coalgebra " + co.c.str();
  const Obj& C = co.c;
  expectEqual(r, "frobcoalg.balance", comp(tens<S>(C, B), tens<S>(co.delta, C)), comp(tens<S>(B, C), tens<S>(C, co.delta)));
  expectEqual(r, "frobcoalg.counit_left", comp(B, tens<S>(t, C)), co.counit);
  expectEqual(r, "frobcoalg.counit_right", comp(B, tens<S>(C, t)), co.counit);
  if (r.ok()) {
    Algebra<S> derived{C, comp(tens<S>(C, B), tens<S>(co.delta, C)), t};
    Report<S> a = checkAlgebra(derived);
    r.flag("frobcoalg.derived_algebra", a.ok());
  }
  return r;
}

}  // namespace cwk

#endif
