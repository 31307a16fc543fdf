#ifndef CWK_ENTWINE_HPP
#define CWK_ENTWINE_HPP

#include "cwk/structures.hpp"

namespace cwk {

// psi : x a -> a x
template <class S>
struct Transfer {
  Algebra<S> alg;
  Obj x;
  Mor<S> psi;
};

template <class S>
Report<S> checkTransfer(const Transfer<S>& tr) {
  Report<S> r;
  r.subject = "transfer " + tr.x.str() + " over " + tr.alg.a.str();
  const Obj &A = tr.alg.a, &X = tr.x;
  const Mor<S>&m = tr.alg.m, &eta = tr.alg.unit, &psi = tr.psi;
  expectEqual(r, "transfer.mult", comp(psi, tens<S>(X, m)), comp(tens<S>(m, X), tens<S>(A, psi), tens<S>(psi, A)));
  expectEqual(r, "transfer.unit", comp(psi, tens<S>(X, eta)), tens<S>(eta, X));
  return r;
}

// psi_{xy} = (psi_x y)(x psi_y)
template <class S>
Transfer<S> tensorTransfer(const Transfer<S>& a, const Transfer<S>& b) {
  return {a.alg, a.x + b.x, comp(tens<S>(a.psi, b.x), tens<S>(a.x, b.psi))};
}

template <class S>
Transfer<S> unitTransfer(const Algebra<S>& al) {
  return {al, Obj(), id<S>(al.a)};
}

// Morphism x -> a y compatible with the transfers.
template <class S>
struct TAHom {
  Transfer<S> src, tgt;
  Mor<S> f;
};

template <class S>
Report<S> checkTAHom(const TAHom<S>& h) {
  Report<S> r;
  r.subject = "transfer morphism " + h.src.x.str() + " -> " + h.tgt.x.str();
  const Obj &A = h.src.alg.a, &Y = h.tgt.x;
  const Mor<S>& m = h.src.alg.m;
  if (!(h.f.dom == h.src.x) || !(h.f.cod == A + Y)) {
    r.flag("tahom.type", false, "f is " + h.f.dom.str() + " -> " + h.f.cod.str());
    return r;
  }
  expectEqual(r, "tahom.compat", comp(tens<S>(m, Y), tens<S>(A, h.f), h.src.psi),
              comp(tens<S>(m, Y), tens<S>(A, h.tgt.psi), tens<S>(h.f, A)));
  return r;
}

// Constructors re-check their output and refuse to return an invalid hom.
template <class S>
TAHom<S> validated(TAHom<S> h, const char* op) {
  if (!checkTAHom(h).ok()) throw TypeError(std::string(op) + ": result is not a transfer morphism");
  return h;
}

template <class S>
TAHom<S> taIdentity(const Transfer<S>& tr) {
  return {tr, tr, tens<S>(tr.alg.unit, tr.x)};
}

// g . f = (m z)(a g) f
template <class S>
TAHom<S> taCompose(const TAHom<S>& g, const TAHom<S>& f) {
  if (!(f.tgt.x == g.src.x)) throw TypeError("taCompose: " + f.tgt.x.str() + " vs " + g.src.x.str());
  const Obj& A = f.src.alg.a;
  return validated<S>({f.src, g.tgt, comp(tens<S>(f.src.alg.m, g.tgt.x), tens<S>(A, g.f), f.f)}, "taCompose");
}

template <class S>
TAHom<S> taTensor(const TAHom<S>& f, const TAHom<S>& g) {
  const Obj& A = f.src.alg.a;
  Mor<S> h = comp(tens<S>(f.src.alg.m, f.tgt.x, g.tgt.x), tens<S>(A, f.tgt.psi, g.tgt.x), tens<S>(f.f, g.f));
  return validated<S>({tensorTransfer(f.src, g.src), tensorTransfer(f.tgt, g.tgt), h}, "taTensor");
}

// delta : x -> a x x, eps : x -> a
template <class S>
struct Cowreath {
  Transfer<S> base;
  Mor<S> delta;
  Mor<S> eps;

  const Obj& A() const { return base.alg.a; }
  const Obj& X() const { return base.x; }
  const Mor<S>& m() const { return base.alg.m; }
  const Mor<S>& eta() const { return base.alg.unit; }
  const Mor<S>& psi() const { return base.psi; }
};

template <class S>
Report<S> checkCowreath(const Cowreath<S>& cw) {
  Report<S> r;
  r.subject = "cowreath " + cw.X().str() + " over " + cw.A().str();
  const Obj &A = cw.A(), &X = cw.X();
  const Mor<S>&m = cw.m(), &eta = cw.eta(), &psi = cw.psi(), &delta = cw.delta, &eps = cw.eps;
  expectEqual(r, "cowreath.delta_hom", comp(tens<S>(m, X, X), tens<S>(A, psi, X), tens<S>(A, X, psi), tens<S>(delta, A)),
              comp(tens<S>(m, X, X), tens<S>(A, delta), psi));
  expectEqual(r, "cowreath.coassoc", comp(tens<S>(m, X, X, X), tens<S>(A, delta, X), delta),
              comp(tens<S>(m, X, X, X), tens<S>(A, psi, X, X), tens<S>(A, X, delta), delta));
  expectEqual(r, "cowreath.eps_hom", comp(m, tens<S>(A, eps), psi), comp(m, tens<S>(eps, A)));
  expectEqual(r, "cowreath.left_counit", comp(tens<S>(m, X), tens<S>(A, eps, X), delta), tens<S>(eta, X));
  expectEqual(r, "cowreath.right_counit", comp(tens<S>(m, X), tens<S>(A, psi), tens<S>(A, X, eps), delta),
              tens<S>(eta, X));
  return r;
}

// A coalgebra over the unit algebra, or lifted along a transfer: delta = eta Delta.
template <class S>
Cowreath<S> cowreathFromCoalgebra(const Transfer<S>& tr, const Coalgebra<S>& co) {
  return {tr, tens<S>(tr.alg.unit, co.delta), comp(tr.alg.unit, co.counit)};
}

// mu : m a -> m, rho : m -> m x
template <class S>
struct EntwinedModule {
  Obj m;
  Mor<S> mu;
  Mor<S> rho;
};

template <class S>
Report<S> checkEntwinedModule(const Cowreath<S>& cw, const EntwinedModule<S>& em) {
  Report<S> r;
  r.subject = "entwined module " + em.m.str();
  const Obj &A = cw.A(), &X = cw.X(), &M = em.m;
  Report<S> mod = checkRightModule(RightModule<S>{M, em.mu}, cw.base.alg);
  for (auto& c : mod.checks) {
    c.id = "entwined." + c.id.substr(c.id.find('.') + 1);
    r.checks.push_back(c);
  }
  expectEqual(r, "entwined.coassoc", comp(tens<S>(em.rho, X), em.rho),
              comp(tens<S>(em.mu, X, X), tens<S>(M, cw.delta), em.rho));
  expectEqual(r, "entwined.counit", comp(em.mu, tens<S>(M, cw.eps), em.rho), id<S>(M));
  expectEqual(r, "entwined.linear", comp(em.rho, em.mu),
              comp(tens<S>(em.mu, X), tens<S>(M, cw.psi()), tens<S>(em.rho, A)));
  return r;
}

template <class S>
bool isEntwinedMorphism(const Cowreath<S>& cw, const EntwinedModule<S>& from, const EntwinedModule<S>& to,
                        const Mor<S>& f) {
  if (!(f.dom == from.m) || !(f.cod == to.m)) return false;
  return sameMor(comp(f, from.mu), comp(to.mu, tens<S>(f, cw.A()))) &&
         sameMor(comp(tens<S>(f, cw.X()), from.rho), comp(to.rho, f));
}

// G(n) = n x
template <class S>
EntwinedModule<S> cofreeEntwined(const Cowreath<S>& cw, const RightModule<S>& n) {
  const Obj &X = cw.X(), &N = n.m;
  return {N + X, comp(tens<S>(n.mu, X), tens<S>(N, cw.psi())), comp(tens<S>(n.mu, X, X), tens<S>(N, cw.delta))};
}

// Unit rho_M and counit mu (N eps) of the forgetful/cofree adjunction.
template <class S>
Report<S> checkCofreeAdjunction(const Cowreath<S>& cw, const std::vector<EntwinedModule<S>>& ms,
                                const std::vector<RightModule<S>>& ns) {
  Report<S> r;
  r.subject = "cofree adjunction";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& M = ms[i];
    // counit at F M after F(unit at M)
    expectEqual(r, "cofree.triangle_module." + std::to_string(i), comp(M.mu, tens<S>(M.m, cw.eps), M.rho), id<S>(M.m));
    EntwinedModule<S> G = cofreeEntwined(cw, RightModule<S>{M.m, M.mu});
    r.flag("cofree.unit_natural." + std::to_string(i), isEntwinedMorphism(cw, M, G, M.rho));
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto& N = ns[i];
    EntwinedModule<S> G = cofreeEntwined(cw, N);
    Mor<S> counit = comp(N.mu, tens<S>(N.m, cw.eps));
    expectEqual(r, "cofree.triangle_comodule." + std::to_string(i), comp(tens<S>(counit, cw.X()), G.rho),
                id<S>(G.m));
    r.flag("cofree.counit_linear." + std::to_string(i), isModuleMorphism(RightModule<S>{G.m, G.mu}, N, counit, cw.base.alg));
  }
  return r;
}

}  // namespace cwk

#endif
