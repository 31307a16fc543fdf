#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwk/cli.hpp"
#include "support.hpp"

using namespace cwk;
using namespace cwk::test;
using nlohmann::json;

namespace {

json minimal() { return {{"schema", kSchema}, {"field", "Q"}, {"objects", {{"U", 1}}}}; }

std::string parseErrorPointer(const json& j) {
  try {
    parseWorkspace<Q>(j);
  } catch (const ParseError& e) {
    return e.pointer;
  }
  return "<no error>";
}

// Random document plus the scalar values its matrices must parse to.
struct RandomDoc {
  json doc;
  std::map<std::string, std::vector<std::vector<std::pair<long long, long long>>>> values;
};

// p == 0 gives rationals, written in non-canonical forms on purpose.
RandomDoc randomDoc(Gen& g, std::uint32_t p) {
  RandomDoc r;
  json& j = r.doc;
  j["schema"] = kSchema;
  j["field"] = p == 0 ? std::string("Q") : "GF(" + std::to_string(p) + ")";
  const char* names[] = {"P", "R", "T"};
  std::map<std::string, int> dims;
  for (int i = 0, n = g.uniform(1, 3); i < n; ++i) dims[names[i]] = g.uniform(1, 3);
  for (const auto& [k, v] : dims) j["objects"][k] = v;
  std::vector<std::string> keys;
  for (const auto& [k, v] : dims) keys.push_back(k);
  auto word = [&](int maxLen) {
    json w = json::array();
    for (int i = 0, n = g.uniform(0, maxLen); i < n; ++i) w.push_back(keys[g.uniform(0, static_cast<int>(keys.size()) - 1)]);
    return w;
  };
  auto dimOf = [&](const json& w) {
    int d = 1;
    for (const auto& s : w) d *= dims[s.get<std::string>()];
    return d;
  };
  auto scalar = [&](long long& num, long long& den) -> json {
    num = g.uniform(-9, 9);
    den = p == 0 && g.chance(0.3) ? g.uniform(1, 4) : 1;
    int scale = g.uniform(1, 3);
    if (p != 0) {
      if (g.chance(0.5)) return std::to_string(num) + " mod " + std::to_string(p);
      return g.chance(0.5) ? json(std::to_string(num)) : json(num);
    }
    if (den == 1 && g.chance(0.3)) return json(num);
    return std::to_string(num * scale) + "/" + std::to_string(den * scale);
  };
  auto addMorphism = [&](const std::string& name, const json& dom, const json& cod) {
    json rows = json::array();
    auto& vals = r.values[name];
    for (int i = 0; i < dimOf(cod); ++i) {
      json row = json::array();
      vals.emplace_back();
      for (int k = 0; k < dimOf(dom); ++k) {
        long long num, den;
        row.push_back(scalar(num, den));
        vals.back().emplace_back(num, den);
      }
      rows.push_back(row);
    }
    j["morphisms"][name] = {{"dom", dom}, {"cod", cod}, {"mat", rows}};
  };
  for (int i = 0, n = g.uniform(1, 4); i < n; ++i) addMorphism("f" + std::to_string(i), word(2), word(2));
  // structures are only typed at parse time; their laws are checked elsewhere
  json C = json::array({keys[0]});
  json CC = json::array({keys[0], keys[0]});
  addMorphism("one", json::array(), json::array());
  addMorphism("delta", C, CC);
  addMorphism("counit", C, json::array());
  j["algebras"]["k"] = {{"object", json::array()}, {"m", "one"}, {"unit", "one"}};
  j["coalgebras"]["C"] = {{"object", C}, {"delta", "delta"}, {"counit", "counit"}};
  if (g.chance(0.5)) j["dualities"]["D"] = {{"x", C}, {"standard", true}};
  if (g.chance(0.5)) {
    addMorphism("psi", C, C);
    j["transfer"]["T"] = {{"algebra", "k"}, {"object", C}, {"psi", "psi"}};
    addMorphism("dk", C, CC);
    j["cowreaths"]["W"] = {{"transfer", "T"}, {"delta", "dk"}, {"eps", "counit"}};
    j["entwined"]["E"] = {{"cowreath", "W"}, {"object", C}, {"mu", "psi"}, {"rho", "dk"}};
    if (g.chance(0.5)) j["unchecked"] = json::array({"W"});
  }
  return r;
}

template <class S>
void checkRoundTrip(const RandomDoc& r) {
  Workspace<S> ws = parseWorkspace<S>(r.doc);
  for (const auto& [name, rows] : r.values) {
    const Mat<S>& m = ws.mor(name).mat;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < rows[i].size(); ++k)
        REQUIRE(m(i, k) == S(rows[i][k].first) / S(rows[i][k].second));
  }
  json once = serializeWorkspace(ws);
  Workspace<S> again = parseWorkspace<S>(once);
  REQUIRE(sameWorkspace(ws, again));
  REQUIRE(serializeWorkspace(again) == once);
  for (const auto& [name, f] : ws.morphisms) REQUIRE(sameMor(f, again.mor(name)));
  REQUIRE(again.coalgebras.size() == ws.coalgebras.size());
  REQUIRE(again.dualities.size() == ws.dualities.size());
  REQUIRE(again.unchecked == ws.unchecked);
}

}  // namespace

TEST_CASE("minimal workspace") {
  Workspace<Q> ws = parseWorkspace<Q>(minimal());
  CHECK(ws.objects.size() == 1);
  CHECK(ws.morphisms.empty());
  CHECK(ws.cowreaths.empty());
}

TEST_CASE("bundled F3 file parses and its cowreath passes") {
  Workspace<Q> ws = parseWorkspace<Q>(readJsonFile(std::string(CWK_FIXTURE_DIR) + "/f3.json"));
  CHECK(checkTransfer(ws.transfer("T")).ok());
  CHECK(checkCowreath(ws.cowreath("W")).ok());
  CHECK(ws.objects.at("X*") == 2);
  CHECK(ws.duality("D").y.str() == "X*");
}

TEST_CASE("parse errors carry pointers") {
  json shape = minimal();
  shape["objects"]["U"] = 2;
  json mat = json::array();
  for (int i = 0; i < 3; ++i) mat.push_back(json::array({"0", "0", "0", "0", "0"}));
  shape["morphisms"]["f"] = {{"dom", {"U", "U"}}, {"cod", {"U"}}, {"mat", mat}};
  CHECK(parseErrorPointer(shape) == "/morphisms/f/mat");
  try {
    parseWorkspace<Q>(shape);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/morphisms/f") != std::string::npos);
  }

  json row = minimal();
  row["objects"]["U"] = 2;
  row["morphisms"]["g"] = {{"dom", {"U"}}, {"cod", {"U"}}, {"mat", {{"1", "0"}, {"1"}}}};
  CHECK(parseErrorPointer(row) == "/morphisms/g/mat/1");

  json unknownObj = minimal();
  unknownObj["morphisms"]["f"] = {{"dom", {"V"}}, {"cod", {"U"}}, {"mat", {{"1"}}}};
  CHECK(parseErrorPointer(unknownObj) == "/morphisms/f/dom/0");

  json unknownMor = minimal();
  unknownMor["algebras"]["A"] = {{"object", {"U"}}, {"m", "nope"}, {"unit", "nope"}};
  CHECK(parseErrorPointer(unknownMor) == "/algebras/A/m");

  json wrongType = minimal();
  wrongType["morphisms"]["e"] = {{"dom", {"U"}}, {"cod", {"U"}}, {"mat", {{"1"}}}};
  wrongType["algebras"]["A"] = {{"object", {"U"}}, {"m", "e"}, {"unit", "e"}};
  CHECK(parseErrorPointer(wrongType) == "/algebras/A/m");

  json unknownRef = minimal();
  unknownRef["transfer"]["T"] = {{"algebra", "none"}, {"object", {"U"}}, {"psi", "x"}};
  CHECK(parseErrorPointer(unknownRef) == "/transfer/T/algebra");

  for (const char* bad : {"1.5", "1/0", "x", "3 mod 7"}) {
    CAPTURE(bad);
    json s = minimal();
    s["morphisms"]["f"] = {{"dom", {"U"}}, {"cod", {"U"}}, {"mat", {{bad}}}};
    CHECK(parseErrorPointer(s) == "/morphisms/f/mat/0/0");
  }

  json extra = minimal();
  extra["extras"] = 1;
  CHECK(parseErrorPointer(extra) == "/extras");

  json schema = minimal();
  schema["schema"] = "other/2";
  CHECK(parseErrorPointer(schema) == "/schema");

  json dim = minimal();
  dim["objects"]["U"] = 0;
  CHECK(parseErrorPointer(dim) == "/objects/U");

  json prime = minimal();
  prime["field"] = "GF(8)";
  CHECK(parseErrorPointer(prime) == "/field");
}

TEST_CASE("schema flattening example") {
  // a functional on U V lists its values at u0v0, u0v1, u1v0, u1v1
  json j = minimal();
  j["objects"] = {{"U", 2}, {"V", 2}};
  j["morphisms"]["f"] = {{"dom", {"U", "V"}}, {"cod", json::array()}, {"mat", {{"1", "2", "3", "4"}}}};
  Workspace<Q> ws = parseWorkspace<Q>(j);
  Obj U = gen("U", 2), V = gen("V", 2);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      Mat<Q> u = zeros<Q>(2, 1), v = zeros<Q>(2, 1);
      u(i, 0) = Q(1);
      v(k, 0) = Q(1);
      Mor<Q> uv = tens<Q>(Mor<Q>(Obj(), U, u), Mor<Q>(Obj(), V, v));
      CHECK(comp(ws.mor("f"), uv).mat(0, 0) == Q(1 + 2 * i + k));
    }
}

TEST_CASE("property: workspaces round-trip over Q") {
  Gen g(71);
  for (int n = 0; n < kCases; ++n) checkRoundTrip<Q>(randomDoc(g, 0));
}

TEST_CASE("property: workspaces round-trip over F_p") {
  Gen g(72);
  for (int n = 0; n < kCases; ++n) {
    std::uint32_t p = std::vector<std::uint32_t>{2, 7, 101}[n % 3];
    PrimeScope scope(p);
    checkRoundTrip<Zp>(randomDoc(g, p));
  }
}

TEST_CASE("field override") {
  json j = buildFixture("F3");
  CHECK(workspaceField(j).isQ());
  CHECK(workspaceField(j, FieldSpec{7}).p == 7);
  PrimeScope scope(7);
  Workspace<Zp> ws = parseWorkspace<Zp>(j, FieldSpec{7});
  CHECK(checkCowreath(ws.cowreath("W")).ok());
}

TEST_CASE("fixture registry expectations") {
  std::set<std::string> names;
  for (const auto& f : fixtureRegistry()) names.insert(f.name);
  for (const char* n : {"F0", "F1", "F2", "F3", "F4", "F3-bad-psi", "F3-bad-delta"}) CHECK(names.count(n));

  json expected = readJsonFile(std::string(CWK_FIXTURE_DIR) + "/expected.json");
  CHECK(expected["F2"]["frobenius/frobenius/W"] == "found");
  CHECK(expected["F2"]["separability/coseparable/W"] == "no");
  CHECK(expected["F3-bad-psi"]["check/transfer T/transfer.mult"] == "fail");
  for (const auto& [k, v] : expected["F0"].items()) {
    CAPTURE(k);
    CHECK((v == "pass" || v == "found" || v == "yes"));
  }
}

TEST_CASE("expected tables are reproduced by the checkers") {
  json expected = readJsonFile(std::string(CWK_FIXTURE_DIR) + "/expected.json");
  for (const auto& f : fixtureRegistry()) {
    CAPTURE(f.name);
    json doc = buildFixture(f.name);
    CHECK(doc == readJsonFile(std::string(CWK_FIXTURE_DIR) + "/" + fixtureFileName(f.name)));
    json table = verdictTable(doc);
    CHECK(table == expected[f.name]);
    std::vector<std::string> failing;
    for (const auto& [k, v] : table.items())
      if (v == "fail" && k.rfind("check/", 0) == 0) failing.push_back(k.substr(k.rfind('/') + 1));
    std::vector<std::string> want = f.designated;
    std::sort(failing.begin(), failing.end());
    std::sort(want.begin(), want.end());
    CHECK(failing == want);
  }
}
