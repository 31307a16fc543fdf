#ifndef CWK_MONCAT_HPP
#define CWK_MONCAT_HPP

#include "cwk/linalg.hpp"
#include "cwk/report.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cwk {

struct GenObj {
  std::string name;
  int dim = 1;
  bool operator==(const GenObj&) const = default;
};

// A word of generators; the empty word is the unit object.
class Obj {
 public:
  Obj() = default;
  Obj(std::initializer_list<GenObj> g) : w_(g) {}
  explicit Obj(std::vector<GenObj> g) : w_(std::move(g)) {}
  Obj(const GenObj& g) : w_{g} {}  // NOLINT

  Index dim() const {
    Index d = 1;
    for (const auto& g : w_) d *= g.dim;
    return d;
  }
  bool isUnit() const { return w_.empty(); }
  const std::vector<GenObj>& word() const { return w_; }
  std::size_t size() const { return w_.size(); }

  std::string str() const {
    if (w_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? " " : "") + w_[i].name;
    return s;
  }

  bool operator==(const Obj&) const = default;

  friend Obj operator+(const Obj& a, const Obj& b) {
    std::vector<GenObj> w = a.w_;
    w.insert(w.end(), b.w_.begin(), b.w_.end());
    return Obj(std::move(w));
  }

 private:
  std::vector<GenObj> w_;
};

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class S>
struct Mor {
  Obj dom, cod;
  Mat<S> mat;  // dim(cod) x dim(dom)

  Mor() = default;
  Mor(Obj d, Obj c, Mat<S> m) : dom(std::move(d)), cod(std::move(c)), mat(std::move(m)) {
    if (mat.rows() != cod.dim() || mat.cols() != dom.dim()) {
      std::ostringstream os;
      os << "matrix is " << mat.rows() << "x" << mat.cols() << " but " << dom.str() << " -> " << cod.str()
         << " needs " << cod.dim() << "x" << dom.dim();
      throw TypeError(os.str());
    }
  }
};

template <class S>
Mor<S> id(const Obj& x) {
  return Mor<S>(x, x, identity<S>(x.dim()));
}

template <class S>
Mor<S> zeroMor(const Obj& d, const Obj& c) {
  return Mor<S>(d, c, zeros<S>(c.dim(), d.dim()));
}

// g after f
template <class S>
Mor<S> compose(const Mor<S>& g, const Mor<S>& f) {
  if (!(f.cod == g.dom))
    throw TypeError("cannot compose: codomain " + f.cod.str() + " vs domain " + g.dom.str());
  return Mor<S>(f.dom, g.cod, mul(g.mat, f.mat));
}

template <class S>
Mor<S> tensor(const Mor<S>& f, const Mor<S>& g) {
  return Mor<S>(f.dom + g.dom, f.cod + g.cod, kron(f.mat, g.mat));
}

template <class S>
Mor<S> asMor(const Mor<S>& f) {
  return f;
}

template <class S>
Mor<S> asMor(const Obj& x) {
  return id<S>(x);
}

template <class S>
Mor<S> asMor(const GenObj& x) {
  return id<S>(Obj(x));
}

// tens<S>(A, f, X) is the juxtaposition A f X; objects stand for identities.
template <class S, class First, class... Rest>
Mor<S> tens(const First& first, const Rest&... rest) {
  Mor<S> r = asMor<S>(first);
  ((r = tensor(r, asMor<S>(rest))), ...);
  return r;
}

// comp(h, g, f) = h after g after f
template <class S>
Mor<S> comp(const Mor<S>& f) {
  return f;
}

template <class S, class... Rest>
Mor<S> comp(const Mor<S>& g, const Mor<S>& f, const Rest&... rest) {
  return compose(g, comp(f, rest...));
}

template <class S>
Mor<S> operator-(const Mor<S>& a, const Mor<S>& b) {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) throw TypeError("difference of morphisms of different types");
  return Mor<S>(a.dom, a.cod, a.mat - b.mat);
}

template <class S>
Mor<S> operator+(const Mor<S>& a, const Mor<S>& b) {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) throw TypeError("sum of morphisms of different types");
  return Mor<S>(a.dom, a.cod, a.mat + b.mat);
}

template <class S>
bool sameMor(const Mor<S>& a, const Mor<S>& b) {
  return a.dom == b.dom && a.cod == b.cod && equal(a.mat, b.mat);
}

// Symmetry of vector spaces, x y -> y x.
template <class S>
Mor<S> braid(const Obj& x, const Obj& y) {
  const Index dx = x.dim(), dy = y.dim();
  Mat<S> m = zeros<S>(dx * dy, dx * dy);
  for (Index i = 0; i < dx; ++i)
    for (Index j = 0; j < dy; ++j) m(j * dx + i, i * dy + j) = S(1);
  return Mor<S>(x + y, y + x, std::move(m));
}

// Records lhs == rhs; a type mismatch is a failure with an empty residual.
template <class S>
void expectEqual(Report<S>& r, const std::string& checkId, const Mor<S>& lhs, const Mor<S>& rhs) {
  if (!(lhs.dom == rhs.dom) || !(lhs.cod == rhs.cod)) {
    r.checks.push_back({checkId, false, Mat<S>(),
                        "type mismatch: " + lhs.dom.str() + " -> " + lhs.cod.str() + " vs " + rhs.dom.str() +
                            " -> " + rhs.cod.str()});
    return;
  }
  Mat<S> res = lhs.mat - rhs.mat;
  bool ok = isZero(res);
  r.checks.push_back({checkId, ok, std::move(res), {}});
}

// Duality data for x -| y: b : 1 -> y x, d : x y -> 1.
template <class S>
struct DualityData {
  Obj x, y;
  Mor<S> b, d;
};

// Standard duality on a word x1...xn: y is the reversed word of duals
// "xi*", built as the composite of the generator dualities.
template <class S>
DualityData<S> makeDualityData(const Obj& x) {
  DualityData<S> r{Obj(), Obj(), Mor<S>(Obj(), Obj(), identity<S>(1)), Mor<S>(Obj(), Obj(), identity<S>(1))};
  for (const auto& g : x.word()) {
    GenObj gs{g.name + "*", g.dim};
    const Index n = g.dim;
    Mat<S> bm = zeros<S>(n * n, 1);
    Mat<S> dm = zeros<S>(1, n * n);
    for (Index i = 0; i < n; ++i) {
      bm(i * n + i, 0) = S(1);
      dm(0, i * n + i) = S(1);
    }
    Obj xg(g), yg(gs);
    Mor<S> bg(Obj(), yg + xg, bm), dg(xg + yg, Obj(), dm);
    // composite of (r.x -| r.y) with (g -| g*): x' = r.x g, y' = g* r.y
    Mor<S> b2 = comp(tens<S>(yg, r.b, xg), bg);
    Mor<S> d2 = comp(r.d, tens<S>(r.x, dg, r.y));
    r = {r.x + xg, yg + r.y, b2, d2};
  }
  return r;
}

template <class S>
Report<S> checkAdjunction(const DualityData<S>& a) {
  Report<S> r;
  r.subject = "duality " + a.x.str() + " -| " + a.y.str();
  expectEqual(r, "adjunction.snake_y", comp(tens<S>(a.y, a.d), tens<S>(a.b, a.y)), id<S>(a.y));
  expectEqual(r, "adjunction.snake_x", comp(tens<S>(a.d, a.x), tens<S>(a.x, a.b)), id<S>(a.x));
  return r;
}

// lambda : y -> y' between two right duals of the same object.
template <class S>
Mor<S> comparisonMap(const DualityData<S>& a, const DualityData<S>& a2) {
  if (!(a.x == a2.x)) throw TypeError("comparison map needs dualities of the same object");
  return comp(tens<S>(a2.y, a.d), tens<S>(a2.b, a.y));
}

// Composite duality x x' -| y' y.
template <class S>
DualityData<S> compositeDuality(const DualityData<S>& a, const DualityData<S>& a2) {
  return {a.x + a2.x, a2.y + a.y, comp(tens<S>(a2.y, a.b, a2.x), a2.b), comp(a.d, tens<S>(a.x, a2.d, a.y))};
}

// f : x -> x' gives its mate y' -> y.
template <class S>
Mor<S> dualMorphism(const Mor<S>& f, const DualityData<S>& a, const DualityData<S>& a2) {
  if (!(f.dom == a.x) || !(f.cod == a2.x)) throw TypeError("dualMorphism: f does not match the dualities");
  return comp(tens<S>(a.y, a2.d), tens<S>(a.y, f, a2.y), tens<S>(a.b, a2.y));
}

}  // namespace cwk

#endif
