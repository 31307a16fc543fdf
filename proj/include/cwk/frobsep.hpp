#ifndef CWK_FROBSEP_HPP
#define CWK_FROBSEP_HPP

#include "cwk/wreath.hpp"

#include <optional>
#include <random>

namespace cwk {

// t : 1 -> a x, B : x x -> a
template <class S>
struct FrobeniusSystem {
  Mor<S> t;
  Mor<S> B;
};

namespace frob {

template <class S>
Mor<S> tCond(const Cowreath<S>& cw, const Mor<S>& t) {
  const Obj &A = cw.A(), &X = cw.X();
  return comp(tens<S>(cw.m(), X), tens<S>(A, t)) - comp(tens<S>(cw.m(), X), tens<S>(A, cw.psi()), tens<S>(t, A));
}

template <class S>
Mor<S> bCond(const Cowreath<S>& cw, const Mor<S>& B) {
  const Obj &A = cw.A(), &X = cw.X();
  return comp(cw.m(), tens<S>(B, A)) - comp(cw.m(), tens<S>(A, B), tens<S>(cw.psi(), X), tens<S>(X, cw.psi()));
}

template <class S>
Mor<S> casimirCond(const Cowreath<S>& cw, const Mor<S>& B) {
  const Obj &A = cw.A(), &X = cw.X();
  const Mor<S>& m = cw.m();
  return comp(tens<S>(m, X), tens<S>(A, cw.psi()), tens<S>(A, X, B), tens<S>(cw.delta, X)) -
         comp(tens<S>(m, X), tens<S>(A, B, X), tens<S>(cw.psi(), X, X), tens<S>(X, cw.delta));
}

// m (A B)(psi X)(X t)
template <class S>
Mor<S> counitViaRight(const Cowreath<S>& cw, const FrobeniusSystem<S>& fs) {
  const Obj &A = cw.A(), &X = cw.X();
  return comp(cw.m(), tens<S>(A, fs.B), tens<S>(cw.psi(), X), tens<S>(X, fs.t));
}

// m (A B)(t X)
template <class S>
Mor<S> counitViaLeft(const Cowreath<S>& cw, const FrobeniusSystem<S>& fs) {
  return comp(cw.m(), tens<S>(cw.A(), fs.B), tens<S>(fs.t, cw.X()));
}

}  // namespace frob

template <class S>
Report<S> checkFrobeniusSystem(const Cowreath<S>& cw, const FrobeniusSystem<S>& fs) {
  Report<S> r;
  r.subject = "Frobenius system on " + cw.X().str();
  const Obj &A = cw.A(), &X = cw.X();
  if (!(fs.t.dom == Obj()) || !(fs.t.cod == A + X) || !(fs.B.dom == X + X) || !(fs.B.cod == A)) {
    r.flag("frobenius.type", false, "t must be 1 -> A X and B must be X X -> A");
    return r;
  }
  auto zeroCheck = [&](const std::string& id, const Mor<S>& res) {
    r.checks.push_back({id, isZero(res.mat), res.mat, {}});
  };
  zeroCheck("frobenius.t_hom", frob::tCond(cw, fs.t));
  zeroCheck("frobenius.B_hom", frob::bCond(cw, fs.B));
  zeroCheck("frobenius.casimir", frob::casimirCond(cw, fs.B));
  Mor<S> f = frob::counitViaRight(cw, fs), g = frob::counitViaLeft(cw, fs);
  Mat<S> rf = f.mat - cw.eps.mat, rg = g.mat - cw.eps.mat;
  bool ok = isZero(rf) && isZero(rg);
  r.checks.push_back({"frobenius.counit", ok, isZero(rf) ? rg : rf, {}});
  return r;
}

// theta_N = (mu X)(N t) : N -> N X
template <class S>
Mor<S> thetaAt(const Cowreath<S>& cw, const FrobeniusSystem<S>& fs, const RightModule<S>& n) {
  return comp(tens<S>(n.mu, cw.X()), tens<S>(n.m, fs.t));
}

// vartheta_M = mu (M B)(rho X) : M X -> M
template <class S>
Mor<S> varthetaAt(const Cowreath<S>& cw, const Mor<S>& B, const EntwinedModule<S>& em) {
  return comp(em.mu, tens<S>(em.m, B), tens<S>(em.rho, cw.X()));
}

template <class S>
Report<S> buildNaturalTransformations(const Cowreath<S>& cw, const FrobeniusSystem<S>& fs,
                                      const std::vector<RightModule<S>>& ns,
                                      const std::vector<EntwinedModule<S>>& ms) {
  Report<S> r;
  r.subject = "Frobenius pair transformations";
  const Obj& X = cw.X();
  const Algebra<S>& al = cw.base.alg;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto& N = ns[i];
    const std::string k = std::to_string(i);
    EntwinedModule<S> G = cofreeEntwined(cw, N);
    Mor<S> th = thetaAt(cw, fs, N);
    r.flag("nat.theta_linear." + k, isModuleMorphism(N, RightModule<S>{G.m, G.mu}, th, al));
    // vartheta at G(N) after G(theta_N)
    expectEqual(r, "nat.triangle_cofree." + k, comp(varthetaAt(cw, fs.B, G), tens<S>(th, X)), id<S>(G.m));
  }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& M = ms[i];
    const std::string k = std::to_string(i);
    EntwinedModule<S> GM = cofreeEntwined(cw, RightModule<S>{M.m, M.mu});
    Mor<S> vt = varthetaAt(cw, fs.B, M);
    r.flag("nat.vartheta_entwined." + k, isEntwinedMorphism(cw, GM, M, vt));
    expectEqual(r, "nat.triangle_forget." + k, comp(vt, thetaAt(cw, fs, RightModule<S>{M.m, M.mu})), id<S>(M.m));
  }
  return r;
}

// Phi(t) : y a -> a x
template <class S>
Mor<S> buildPhi(const Cowreath<S>& cw, const DualityData<S>& du, const Mor<S>& t) {
  const Obj &A = cw.A(), &X = cw.X(), &Y = du.y;
  const Mor<S>& m = cw.m();
  Mor<S> m2 = comp(m, tens<S>(m, A));
  return comp(tens<S>(m2, X), tens<S>(A, A, cw.psi()), tens<S>(A, A, X, du.d, A), tens<S>(A, cw.delta, Y, A),
              tens<S>(t, Y, A));
}

// Psi(B) : a x -> y a
template <class S>
Mor<S> buildPsi(const Cowreath<S>& cw, const DualityData<S>& du, const Mor<S>& B) {
  const Obj &A = cw.A(), &X = cw.X(), &Y = du.y;
  return comp(tens<S>(Y, cw.m()), tens<S>(Y, A, B), tens<S>(Y, cw.psi(), X), tens<S>(du.b, A, X));
}

// Recovers B : x x -> a from a candidate Psi.
template <class S>
Mor<S> extractB(const Cowreath<S>& cw, const DualityData<S>& du, const Mor<S>& psiMap) {
  const Obj& X = cw.X();
  return comp(tens<S>(du.d, cw.A()), tens<S>(X, psiMap), tens<S>(X, cw.eta(), X));
}

template <class S>
Report<S> checkPhiPsiInverse(const Cowreath<S>& cw, const DualityData<S>& du, const FrobeniusSystem<S>& fs) {
  Report<S> r;
  r.subject = "Phi and Psi";
  Mor<S> phi = buildPhi(cw, du, fs.t), psi = buildPsi(cw, du, fs.B);
  expectEqual(r, "phipsi.left_inverse", comp(phi, psi), id<S>(cw.A() + cw.X()));
  expectEqual(r, "phipsi.right_inverse", comp(psi, phi), id<S>(du.y + cw.A()));
  return r;
}

// Basis of {t : 1 -> a x satisfying the t condition}, one column each.
template <class S>
Mat<S> tSpace(const Cowreath<S>& cw) {
  const Index n = (cw.A() + cw.X()).dim();
  AffineSystem<S> sys = linearize<S>(n, 1, [&](const Mat<S>& t) {
    return std::vector<Mat<S>>{frob::tCond(cw, Mor<S>(Obj(), cw.A() + cw.X(), t)).mat};
  });
  return kernelBasis(sys.lhs);
}

template <class S>
struct FrobeniusSearch {
  std::optional<FrobeniusSystem<S>> found;
  Index dimT = 0;
  int trials = 0;
  int singular = 0;        // samples with Phi(t) not invertible
  int rejected = 0;        // invertible but the extracted pair failed
  bool basisSingular = false;
  std::optional<Mor<S>> phi, psi;
};

// Randomised: samples t from the solution space of the t condition with
// small integer coefficients, inverts Phi(t), extracts B and verifies.
template <class S>
FrobeniusSearch<S> searchFrobenius(const Cowreath<S>& cw, const DualityData<S>& du, int trials, std::uint64_t seed) {
  FrobeniusSearch<S> out;
  Mat<S> T = tSpace(cw);
  out.dimT = T.cols();
  const Obj AX = cw.A() + cw.X();
  out.basisSingular = true;
  for (Index j = 0; j < T.cols(); ++j)
    if (matInverse(buildPhi(cw, du, Mor<S>(Obj(), AX, Mat<S>(T.col(j)))).mat)) out.basisSingular = false;
  if (T.cols() == 0) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int k = 0; k < trials; ++k) {
    ++out.trials;
    Mat<S> t = zeros<S>(AX.dim(), 1);
    for (Index j = 0; j < T.cols(); ++j) t += S(coeff(rng)) * T.col(j);
    Mor<S> tm(Obj(), AX, t);
    Mor<S> phi = buildPhi(cw, du, tm);
    auto inv = matInverse(phi.mat);
    if (!inv) {
      ++out.singular;
      continue;
    }
    Mor<S> psi(phi.cod, phi.dom, *inv);
    FrobeniusSystem<S> fs{tm, extractB(cw, du, psi)};
    if (!checkFrobeniusSystem(cw, fs).ok()) {
      ++out.rejected;
      continue;
    }
    out.found = fs;
    out.phi = phi;
    out.psi = psi;
    break;
  }
  return out;
}

template <class S>
struct SeparabilityResult {
  std::optional<Mor<S>> witness;
  Index unknowns = 0;
  Index rankA = 0;
  Index rankAug = 0;
  bool feasible() const { return witness.has_value(); }
};

template <class S>
SeparabilityResult<S> solveAffine(const AffineSystem<S>& sys, const Obj& dom, const Obj& cod) {
  SeparabilityResult<S> r;
  LinearSolution<S> sol = solveLinear<S>(sys.lhs, Mat<S>(-sys.offset));
  r.unknowns = sys.lhs.cols();
  r.rankA = sol.rankA;
  r.rankAug = sol.rankAug;
  if (sol.x) r.witness = Mor<S>(dom, cod, unvec<S>(*sol.x, cod.dim(), dom.dim()));
  return r;
}

// Casimir B with m (A B) delta = eps: the forgetful functor is separable.
template <class S>
SeparabilityResult<S> solveSeparability(const Cowreath<S>& cw) {
  const Obj &A = cw.A(), &X = cw.X();
  AffineSystem<S> sys = linearize<S>(A.dim(), (X + X).dim(), [&](const Mat<S>& b) {
    Mor<S> B(X + X, A, b);
    return std::vector<Mat<S>>{frob::bCond(cw, B).mat, frob::casimirCond(cw, B).mat,
                               (comp(cw.m(), tens<S>(A, B), cw.delta) - cw.eps).mat};
  });
  return solveAffine(sys, X + X, A);
}

// t with the t condition and m (A eps) t = eta: the cofree functor is separable.
template <class S>
SeparabilityResult<S> solveGSeparability(const Cowreath<S>& cw) {
  const Obj &A = cw.A(), &X = cw.X();
  AffineSystem<S> sys = linearize<S>((A + X).dim(), 1, [&](const Mat<S>& tv) {
    Mor<S> t(Obj(), A + X, tv);
    return std::vector<Mat<S>>{frob::tCond(cw, t).mat, (comp(cw.m(), tens<S>(A, cw.eps), t) - cw.eta()).mat};
  });
  return solveAffine(sys, Obj(), A + X);
}

template <class S>
struct MaschkeResult {
  Mor<S> lift;
  Report<S> report;
};

// Given an entwined epi f : M -> N with a linear section s, averages s
// into an entwined section using a normalised Casimir B.
template <class S>
MaschkeResult<S> maschkeLift(const Cowreath<S>& cw, const Mor<S>& B, const EntwinedModule<S>& M,
                             const EntwinedModule<S>& N, const Mor<S>& f, const Mor<S>& s) {
  MaschkeResult<S> out;
  out.report.subject = "Maschke lift " + N.m.str() + " -> " + M.m.str();
  out.report.flag("maschke.f_morphism", isEntwinedMorphism(cw, M, N, f));
  expectEqual(out.report, "maschke.s_section", comp(f, s), id<S>(N.m));
  out.lift = comp(varthetaAt(cw, B, M), tens<S>(s, cw.X()), N.rho);
  out.report.flag("maschke.lift_morphism", isEntwinedMorphism(cw, N, M, out.lift));
  expectEqual(out.report, "maschke.lift_section", comp(f, out.lift), id<S>(N.m));
  return out;
}

}  // namespace cwk

#endif
