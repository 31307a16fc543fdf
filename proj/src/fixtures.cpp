#include "cwk/fixtures.hpp"

#include "cwk/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace cwk {

using json = nlohmann::json;

namespace {

using Q = Rational;
using Image = std::vector<std::pair<int, long long>>;

struct Builder {
  Workspace<Q> ws;

  Builder() { ws.field = {}; }

  void object(const std::string& n, int d) { ws.objects[n] = d; }

  Obj w(const Word& names) const { return ws.word(names); }

  // Column j of the matrix is the image of basis vector j.
  void mor(const std::string& n, const Word& dom, const Word& cod, const std::function<Image(int)>& img) {
    Obj d = w(dom), c = w(cod);
    Mat<Q> m = zeros<Q>(c.dim(), d.dim());
    for (int j = 0; j < d.dim(); ++j)
      for (auto [i, v] : img(j)) m(i, j) += Q(v);
    ws.morphisms[n] = Mor<Q>(d, c, m);
  }

  void mor(const std::string& n, const Mor<Q>& f) { ws.morphisms[n] = f; }

  json done() const { return serializeWorkspace(ws); }
};

Image one(int i) { return {{i, 1}}; }

// k[Z/2] on basis (1, g); products are xor of indices.
void groupAlgebra(Builder& b, const std::string& A) {
  b.object(A, 2);
  b.mor("m", {A, A}, {A}, [](int c) { return one((c / 2) ^ (c % 2)); });
  b.mor("eta", {}, {A}, [](int) { return one(0); });
  b.ws.algebras["A"] = {{A}, "m", "eta", ""};
}

void unitAlgebra(Builder& b) {
  b.mor("m", {}, {}, [](int) { return one(0); });
  b.mor("eta", {}, {}, [](int) { return one(0); });
  b.ws.algebras["k"] = {{}, "m", "eta", ""};
}

// Cowreath over k from a coalgebra on C.
void coalgebraCowreath(Builder& b, int dim, const std::function<Image(int)>& delta, const std::function<Image(int)>& eps) {
  unitAlgebra(b);
  b.object("C", dim);
  b.mor("Delta", {"C"}, {"C", "C"}, delta);
  b.mor("counit", {"C"}, {}, eps);
  b.ws.coalgebras["C"] = {{"C"}, "Delta", "counit"};
  b.mor("psi", {"C"}, {"C"}, [](int c) { return one(c); });
  b.ws.transfers["T"] = {"k", {"C"}, "psi"};
  b.ws.cowreaths["W"] = {"T", "Delta", "counit"};
  b.ws.dualities["D"] = {{"C"}, {"C*"}, "", "", true};
  b.object("C*", dim);
  b.mor("mu_k", {"C"}, {"C"}, [](int c) { return one(c); });
  b.ws.entwined["R"] = {"W", {"C"}, "mu_k", "Delta"};
}

json f0() {
  Builder b;
  b.object("A0", 1);
  b.object("X0", 1);
  auto unit = [](int) { return one(0); };
  b.mor("m", {"A0", "A0"}, {"A0"}, unit);
  b.mor("eta", {}, {"A0"}, unit);
  b.mor("psi", {"X0", "A0"}, {"A0", "X0"}, unit);
  b.mor("delta", {"X0"}, {"A0", "X0", "X0"}, unit);
  b.mor("eps", {"X0"}, {"A0"}, unit);
  b.mor("t", {}, {"A0", "X0"}, unit);
  b.mor("B", {"X0", "X0"}, {"A0"}, unit);
  b.mor("mu_G", {"A0", "X0", "A0"}, {"A0", "X0"}, unit);
  b.mor("rho_G", {"A0", "X0"}, {"A0", "X0", "X0"}, unit);
  b.ws.algebras["A"] = {{"A0"}, "m", "eta", ""};
  b.ws.modules["A"] = {"A", {"A0"}, "m"};
  b.ws.transfers["T"] = {"A", {"X0"}, "psi"};
  b.ws.cowreaths["W"] = {"T", "delta", "eps"};
  b.ws.entwined["G"] = {"W", {"A0", "X0"}, "mu_G", "rho_G"};
  b.object("X0*", 1);
  b.ws.dualities["D"] = {{"X0"}, {"X0*"}, "", "", true};
  b.ws.frobenius["F"] = {"W", "t", "B"};
  return b.done();
}

// Two group-like elements u, v.
json f1(bool badCasimir) {
  Builder b;
  coalgebraCowreath(b, 2, [](int c) { return one(c * 2 + c); }, [](int) { return one(0); });
  b.mor("t", {}, {"C"}, [](int) { return Image{{0, 1}, {1, 1}}; });
  b.mor("B", {"C", "C"}, {}, [&](int c) {
    if (c == 0) return one(0);
    if (c == 3) return Image{{0, badCasimir ? -1 : 1}};
    return Image{};
  });
  b.ws.frobenius["F"] = {"W", "t", "B"};
  if (badCasimir) {
    b.ws.unchecked.insert("F");
    return b.done();
  }
  // Split epi from the cofree comodule V C onto C, with a non-colinear section.
  b.object("V", 2);
  b.mor("mu_VC", {"V", "C"}, {"V", "C"}, [](int c) { return one(c); });
  b.mor("rho_VC", {"V", "C"}, {"V", "C", "C"}, [](int c) { return one((c / 2) * 4 + (c % 2) * 3); });
  b.ws.entwined["VC"] = {"W", {"V", "C"}, "mu_VC", "rho_VC"};
  b.mor("f", {"V", "C"}, {"C"}, [](int c) { return c < 2 ? one(c) : Image{}; });
  b.mor("s", {"C"}, {"V", "C"}, [](int c) { return Image{{c, 1}, {2 + (1 - c), 1}}; });
  return b.done();
}

// Dual of k[x]/x^2: Delta c1 = c0 c1 + c1 c0.
json f2(bool badCounit) {
  Builder b;
  auto delta = [](int c) { return c == 0 ? one(0) : Image{{1, 1}, {2, 1}}; };
  if (badCounit) {
    b.object("C", 2);
    b.mor("Delta", {"C"}, {"C", "C"}, delta);
    b.mor("counit", {"C"}, {}, [](int c) { return c == 1 ? one(0) : Image{}; });
    b.ws.coalgebras["C"] = {{"C"}, "Delta", "counit"};
    b.ws.unchecked.insert("C");
    return b.done();
  }
  coalgebraCowreath(b, 2, delta, [](int c) { return c == 0 ? one(0) : Image{}; });
  b.mor("t", {}, {"C"}, [](int) { return one(1); });
  b.mor("B", {"C", "C"}, {}, [](int c) { return (c == 1 || c == 2) ? one(0) : Image{}; });
  b.ws.frobenius["F"] = {"W", "t", "B"};
  return b.done();
}

enum class F3Variant { Sound, BadPsi, BadDelta, BadEntwined };

// A = X = k[Z/2], psi(x a) = a (x a), delta = eta Delta, eps = eta counit.
json f3(F3Variant v) {
  Builder b;
  groupAlgebra(b, "A");
  b.object("X", 2);
  b.mor("psi", {"X", "A"}, {"A", "X"}, [&](int c) {
    int x = c / 2, a = c % 2;
    if (v == F3Variant::BadPsi && x == 1 && a == 1) return one(a * 2 + 1);
    return one(a * 2 + (x ^ a));
  });
  b.ws.transfers["T"] = {"A", {"X"}, "psi"};
  b.ws.modules["A"] = {"A", {"A"}, "m"};
  if (v == F3Variant::BadPsi) {
    b.ws.unchecked.insert("T");
    return b.done();
  }
  b.mor("delta", {"X"}, {"A", "X", "X"}, [&](int c) {
    Image im = one(c * 2 + c);
    if (v == F3Variant::BadDelta) im.insert(im.end(), {{4, 1}, {5, -1}, {6, -1}, {7, 1}});
    return im;
  });
  b.mor("eps", {"X"}, {"A"}, [](int) { return one(0); });
  b.ws.cowreaths["W"] = {"T", "delta", "eps"};
  if (v == F3Variant::BadDelta) {
    b.ws.unchecked.insert("W");
    return b.done();
  }
  b.object("X*", 2);
  b.ws.dualities["D"] = {{"X"}, {"X*"}, "", "", true};
  Workspace<Q>& ws = b.ws;
  Cowreath<Q> cw = ws.cowreath("W");
  EntwinedModule<Q> G = cofreeEntwined(cw, RightModule<Q>{ws.word({"A"}), ws.mor("m")});
  b.mor("rho_G", G.rho);
  if (v == F3Variant::BadEntwined) {
    // action that ignores psi: (a x) b = (a b) x
    Obj A = ws.word({"A"}), X = ws.word({"X"});
    b.mor("mu_G", comp(tens<Q>(ws.mor("m"), X), tens<Q>(A, braid<Q>(X, A))));
    ws.entwined["G"] = {"W", {"A", "X"}, "mu_G", "rho_G"};
    ws.unchecked.insert("G");
    return b.done();
  }
  b.mor("mu_G", G.mu);
  ws.entwined["G"] = {"W", {"A", "X"}, "mu_G", "rho_G"};
  return b.done();
}

// Dual of k[x,y]/(x,y)^2, which is not Frobenius.
json f4() {
  Builder b;
  coalgebraCowreath(
      b, 3, [](int c) { return c == 0 ? one(0) : Image{{c, 1}, {3 * c, 1}}; },
      [](int c) { return c == 0 ? one(0) : Image{}; });
  return b.done();
}

}  // namespace

const std::vector<FixtureInfo>& fixtureRegistry() {
  static const std::vector<FixtureInfo> reg = {
      {"F0", "all objects of dimension 1", {}},
      {"F1", "group-like coalgebra on u, v over k", {}},
      {"F2", "dual of k[x]/x^2 over k", {}},
      {"F3", "k[Z/2] entwined with itself", {}},
      {"F4", "dual of k[x,y]/(x,y)^2 over k", {}},
      {"F1-bad-casimir", "F1 with B(v v) = -1", {"frobenius.counit"}},
      {"F2-bad-counit", "F2 coalgebra with counit (0, 1)", {"coalgebra.left_counit", "coalgebra.right_counit"}},
      {"F3-bad-psi", "F3 with psi(g g) = g g", {"transfer.mult"}},
      {"F3-bad-delta", "F3 with delta(x) = 1 x x + g w w, w = 1 - h", {"cowreath.coassoc"}},
      {"F3-bad-entwined", "cofree module A X whose action ignores psi", {"entwined.linear"}},
  };
  return reg;
}

json buildFixture(const std::string& name) {
  if (name == "F0") return f0();
  if (name == "F1") return f1(false);
  if (name == "F1-bad-casimir") return f1(true);
  if (name == "F2") return f2(false);
  if (name == "F2-bad-counit") return f2(true);
  if (name == "F3") return f3(F3Variant::Sound);
  if (name == "F3-bad-psi") return f3(F3Variant::BadPsi);
  if (name == "F3-bad-delta") return f3(F3Variant::BadDelta);
  if (name == "F3-bad-entwined") return f3(F3Variant::BadEntwined);
  if (name == "F4") return f4();
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::string fixtureFileName(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s + ".json";
}

}  // namespace cwk
