#include "cwk/workspace.hpp"

#include <fstream>
#include <sstream>

namespace cwk {

using json = nlohmann::json;

namespace {

std::string escapeToken(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::string at(const std::string& base, const std::string& key) { return base + "/" + escapeToken(key); }

std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& need(const json& j, const std::string& key, const std::string& base) {
  if (!j.is_object()) throw ParseError(base, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(base, key), "missing field");
  return *it;
}

std::string needString(const json& j, const std::string& key, const std::string& base) {
  const json& v = need(j, key, base);
  if (!v.is_string()) throw ParseError(at(base, key), "expected a string");
  return v.get<std::string>();
}

std::string optString(const json& j, const std::string& key, const std::string& base) {
  if (!j.contains(key)) return {};
  return needString(j, key, base);
}

Word parseWord(const json& v, const std::string& ptr) {
  if (!v.is_array()) throw ParseError(ptr, "expected an array of object names");
  Word w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw ParseError(at(ptr, i), "expected an object name");
    w.push_back(v[i].get<std::string>());
  }
  return w;
}

const json& section(const json& j, const char* key) {
  static const json empty = json::object();
  auto it = j.find(key);
  if (it == j.end()) return empty;
  if (!it->is_object()) throw ParseError(at("", key), "expected an object");
  return *it;
}

template <class S>
S parseScalar(const json& v, const FieldSpec& f, const std::string& ptr) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_number_integer())
    s = std::to_string(v.get<long long>());
  else
    throw ParseError(ptr, "scalars are strings such as \"3\", \"-7/4\" or \"12 mod 101\"");
  try {
    return ScalarTraits<S>::parse(s, f);
  } catch (const FieldError& e) {
    throw ParseError(ptr, e.what());
  }
}

std::string typeStr(const Obj& d, const Obj& c) { return d.str() + " -> " + c.str(); }

}  // namespace

FieldSpec workspaceField(const json& j, std::optional<FieldSpec> override) {
  if (override) return *override;
  if (!j.is_object()) throw ParseError("", "workspace must be a JSON object");
  auto it = j.find("field");
  if (it == j.end()) return {};
  try {
    if (it->is_number_unsigned()) return FieldSpec::parse(std::to_string(it->get<unsigned long long>()));
    if (it->is_string()) return FieldSpec::parse(it->get<std::string>());
  } catch (const FieldError& e) {
    throw ParseError("/field", e.what());
  }
  throw ParseError("/field", "expected \"Q\" or a prime");
}

json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
}

template <class S>
Obj Workspace<S>::word(const Word& names) const {
  std::vector<GenObj> g;
  for (const auto& n : names) {
    auto it = objects.find(n);
    if (it == objects.end()) throw TypeError("unknown object '" + n + "'");
    g.push_back({n, it->second});
  }
  return Obj(std::move(g));
}

template <class S>
const Mor<S>& Workspace<S>::mor(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end()) throw TypeError("unknown morphism '" + name + "'");
  return it->second;
}

template <class S>
Algebra<S> Workspace<S>::algebra(const std::string& name) const {
  const AlgebraDecl& d = algebras.at(name);
  return {word(d.object), mor(d.m), mor(d.unit)};
}

template <class S>
Coalgebra<S> Workspace<S>::coalgebra(const std::string& name) const {
  const CoalgebraDecl& d = coalgebras.at(name);
  return {word(d.object), mor(d.delta), mor(d.counit)};
}

template <class S>
Transfer<S> Workspace<S>::transfer(const std::string& name) const {
  const TransferDecl& d = transfers.at(name);
  return {algebra(d.algebra), word(d.object), mor(d.psi)};
}

template <class S>
Cowreath<S> Workspace<S>::cowreath(const std::string& name) const {
  const CowreathDecl& d = cowreaths.at(name);
  return {transfer(d.transfer), mor(d.delta), mor(d.eps)};
}

template <class S>
RightModule<S> Workspace<S>::module(const std::string& name) const {
  const ModuleDecl& d = modules.at(name);
  return {word(d.object), mor(d.mu)};
}

template <class S>
EntwinedModule<S> Workspace<S>::entwinedModule(const std::string& name) const {
  const EntwinedDecl& d = entwined.at(name);
  return {word(d.object), mor(d.mu), mor(d.rho)};
}

template <class S>
DualityData<S> Workspace<S>::duality(const std::string& name) const {
  const DualityDecl& d = dualities.at(name);
  if (d.standard) return makeDualityData<S>(word(d.x));
  return {word(d.x), word(d.y), mor(d.b), mor(d.d)};
}

template <class S>
FrobeniusSystem<S> Workspace<S>::frobeniusSystem(const std::string& name) const {
  const FrobeniusDecl& d = frobenius.at(name);
  return {mor(d.t), mor(d.B)};
}

template <class S>
std::optional<std::string> Workspace<S>::dualityOn(const Obj& x) const {
  for (const auto& [name, d] : dualities)
    if (word(d.x) == x) return name;
  return std::nullopt;
}

template <class S>
Workspace<S> parseWorkspace(const json& j, std::optional<FieldSpec> override) {
  if (!j.is_object()) throw ParseError("", "workspace must be a JSON object");
  if (!j.contains("schema") || j["schema"] != kSchema)
    throw ParseError("/schema", std::string("expected \"") + kSchema + "\"");
  Workspace<S> ws;
  ws.field = workspaceField(j, override);
  if (!ScalarTraits<S>::accepts(ws.field)) throw ParseError("/field", "field does not match the scalar type");

  for (const auto& [name, v] : section(j, "objects").items()) {
    const std::string p = at("/objects", name);
    if (name.empty() || name.find_first_of(" ()") != std::string::npos) throw ParseError(p, "invalid object name");
    if (!v.is_number_integer() || v.template get<long long>() < 1 || v.template get<long long>() > 64)
      throw ParseError(p, "dimension must be an integer in 1..64");
    ws.objects[name] = v.template get<int>();
  }

  auto wordAt = [&](const json& v, const std::string& p) {
    Word w = parseWord(v, p);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!ws.objects.count(w[i])) throw ParseError(at(p, i), "unknown object '" + w[i] + "'");
    return w;
  };

  // Standard dualities introduce their dual generators before morphisms refer to them.
  for (const auto& [name, v] : section(j, "dualities").items()) {
    const std::string p = at("/dualities", name);
    DualityDecl d;
    d.standard = v.is_object() && v.value("standard", false);
    d.x = wordAt(need(v, "x", p), at(p, "x"));
    if (d.standard) {
      for (const auto& g : d.x) {
        auto [it, fresh] = ws.objects.emplace(g + "*", ws.objects.at(g));
        if (!fresh && it->second != ws.objects.at(g))
          throw ParseError(at(p, "x"), "object '" + g + "*' exists with a different dimension");
      }
      for (auto it = d.x.rbegin(); it != d.x.rend(); ++it) d.y.push_back(*it + "*");
    }
    ws.dualities[name] = d;
  }

  for (const auto& [name, v] : section(j, "morphisms").items()) {
    const std::string p = at("/morphisms", name);
    Obj dom = ws.word(wordAt(need(v, "dom", p), at(p, "dom")));
    Obj cod = ws.word(wordAt(need(v, "cod", p), at(p, "cod")));
    const json& rows = need(v, "mat", p);
    const std::string mp = at(p, "mat");
    if (!rows.is_array() || static_cast<Index>(rows.size()) != cod.dim())
      throw ParseError(mp, "expected " + std::to_string(cod.dim()) + " rows for " + typeStr(dom, cod));
    Mat<S> m(cod.dim(), dom.dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const json& row = rows[i];
      if (!row.is_array() || static_cast<Index>(row.size()) != dom.dim())
        throw ParseError(at(mp, i), "expected a row of " + std::to_string(dom.dim()) + " scalars");
      for (std::size_t k = 0; k < row.size(); ++k) m(i, k) = parseScalar<S>(row[k], ws.field, at(at(mp, i), k));
    }
    ws.morphisms.emplace(name, Mor<S>(dom, cod, std::move(m)));
  }

  auto morAt = [&](const json& v, const std::string& key, const std::string& p, const Obj& dom, const Obj& cod) {
    std::string n = needString(v, key, p);
    auto it = ws.morphisms.find(n);
    if (it == ws.morphisms.end()) throw ParseError(at(p, key), "unknown morphism '" + n + "'");
    if (!(it->second.dom == dom) || !(it->second.cod == cod))
      throw ParseError(at(p, key), "'" + n + "' is " + typeStr(it->second.dom, it->second.cod) + ", expected " +
                                       typeStr(dom, cod));
    return n;
  };
  auto refAt = [&](const json& v, const std::string& key, const std::string& p, const auto& table) {
    std::string n = needString(v, key, p);
    if (!table.count(n)) throw ParseError(at(p, key), "unknown reference '" + n + "'");
    return n;
  };
  const Obj I;

  for (auto& [name, d] : ws.dualities) {
    if (d.standard) continue;
    const std::string p = at("/dualities", name);
    const json& v = j["dualities"][name];
    d.y = wordAt(need(v, "y", p), at(p, "y"));
    Obj X = ws.word(d.x), Y = ws.word(d.y);
    d.b = morAt(v, "b", p, I, Y + X);
    d.d = morAt(v, "d", p, X + Y, I);
  }

  for (const auto& [name, v] : section(j, "algebras").items()) {
    const std::string p = at("/algebras", name);
    AlgebraDecl d;
    d.object = wordAt(need(v, "object", p), at(p, "object"));
    Obj A = ws.word(d.object);
    d.m = morAt(v, "m", p, A + A, A);
    d.unit = morAt(v, "unit", p, I, A);
    d.smashOf = optString(v, "smash_of", p);
    ws.algebras[name] = d;
  }

  for (const auto& [name, v] : section(j, "coalgebras").items()) {
    const std::string p = at("/coalgebras", name);
    CoalgebraDecl d;
    d.object = wordAt(need(v, "object", p), at(p, "object"));
    Obj C = ws.word(d.object);
    d.delta = morAt(v, "delta", p, C, C + C);
    d.counit = morAt(v, "counit", p, C, I);
    ws.coalgebras[name] = d;
  }

  for (const auto& [name, v] : section(j, "transfer").items()) {
    const std::string p = at("/transfer", name);
    TransferDecl d;
    d.algebra = refAt(v, "algebra", p, ws.algebras);
    d.object = wordAt(need(v, "object", p), at(p, "object"));
    Obj A = ws.word(ws.algebras.at(d.algebra).object), X = ws.word(d.object);
    d.psi = morAt(v, "psi", p, X + A, A + X);
    ws.transfers[name] = d;
  }

  for (const auto& [name, v] : section(j, "cowreaths").items()) {
    const std::string p = at("/cowreaths", name);
    CowreathDecl d;
    d.transfer = refAt(v, "transfer", p, ws.transfers);
    const TransferDecl& t = ws.transfers.at(d.transfer);
    Obj A = ws.word(ws.algebras.at(t.algebra).object), X = ws.word(t.object);
    d.delta = morAt(v, "delta", p, X, A + X + X);
    d.eps = morAt(v, "eps", p, X, A);
    ws.cowreaths[name] = d;
  }

  for (auto& [name, d] : ws.algebras) {
    if (d.smashOf.empty()) continue;
    if (!ws.cowreaths.count(d.smashOf))
      throw ParseError(at(at("/algebras", name), "smash_of"), "unknown cowreath '" + d.smashOf + "'");
  }

  for (const auto& [name, v] : section(j, "modules").items()) {
    const std::string p = at("/modules", name);
    ModuleDecl d;
    d.algebra = refAt(v, "algebra", p, ws.algebras);
    d.object = wordAt(need(v, "object", p), at(p, "object"));
    Obj A = ws.word(ws.algebras.at(d.algebra).object), M = ws.word(d.object);
    d.mu = morAt(v, "mu", p, M + A, M);
    ws.modules[name] = d;
  }

  for (const auto& [name, v] : section(j, "entwined").items()) {
    const std::string p = at("/entwined", name);
    EntwinedDecl d;
    d.cowreath = refAt(v, "cowreath", p, ws.cowreaths);
    d.object = wordAt(need(v, "object", p), at(p, "object"));
    const TransferDecl& t = ws.transfers.at(ws.cowreaths.at(d.cowreath).transfer);
    Obj A = ws.word(ws.algebras.at(t.algebra).object), X = ws.word(t.object), M = ws.word(d.object);
    d.mu = morAt(v, "mu", p, M + A, M);
    d.rho = morAt(v, "rho", p, M, M + X);
    ws.entwined[name] = d;
  }

  for (const auto& [name, v] : section(j, "frobenius").items()) {
    const std::string p = at("/frobenius", name);
    FrobeniusDecl d;
    d.cowreath = refAt(v, "cowreath", p, ws.cowreaths);
    const TransferDecl& t = ws.transfers.at(ws.cowreaths.at(d.cowreath).transfer);
    Obj A = ws.word(ws.algebras.at(t.algebra).object), X = ws.word(t.object);
    d.t = morAt(v, "t", p, I, A + X);
    d.B = morAt(v, "B", p, X + X, A);
    ws.frobenius[name] = d;
  }

  if (j.contains("unchecked")) {
    const json& u = j["unchecked"];
    if (!u.is_array()) throw ParseError("/unchecked", "expected an array of structure names");
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!u[i].is_string()) throw ParseError(at("/unchecked", i), "expected a name");
      ws.unchecked.insert(u[i].get<std::string>());
    }
  }

  static const std::set<std::string> known = {"schema",   "field",    "objects",    "morphisms", "algebras",
                                              "coalgebras", "transfer", "cowreaths", "modules",   "entwined",
                                              "dualities", "frobenius", "unchecked"};
  for (const auto& [key, v] : j.items())
    if (!known.count(key)) throw ParseError(at("", key), "unknown top-level field");
  return ws;
}

template <class S>
json matrixJson(const Mat<S>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(formatScalar(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json wordJson(const Obj& o) {
  json w = json::array();
  for (const auto& g : o.word()) w.push_back(g.name);
  return w;
}

}  // namespace

template <class S>
json morphismJson(const Mor<S>& f) {
  return {{"dom", wordJson(f.dom)}, {"cod", wordJson(f.cod)}, {"mat", matrixJson(f.mat)}};
}

template <class S>
json serializeWorkspace(const Workspace<S>& ws) {
  json j;
  j["schema"] = kSchema;
  j["field"] = ws.field.str();
  j["objects"] = json::object();
  for (const auto& [n, d] : ws.objects) j["objects"][n] = d;
  j["morphisms"] = json::object();
  for (const auto& [n, f] : ws.morphisms) j["morphisms"][n] = morphismJson(f);
  for (const auto& [n, d] : ws.algebras) {
    json a = {{"object", d.object}, {"m", d.m}, {"unit", d.unit}};
    if (!d.smashOf.empty()) a["smash_of"] = d.smashOf;
    j["algebras"][n] = a;
  }
  for (const auto& [n, d] : ws.coalgebras)
    j["coalgebras"][n] = {{"object", d.object}, {"delta", d.delta}, {"counit", d.counit}};
  for (const auto& [n, d] : ws.transfers)
    j["transfer"][n] = {{"algebra", d.algebra}, {"object", d.object}, {"psi", d.psi}};
  for (const auto& [n, d] : ws.cowreaths)
    j["cowreaths"][n] = {{"transfer", d.transfer}, {"delta", d.delta}, {"eps", d.eps}};
  for (const auto& [n, d] : ws.modules)
    j["modules"][n] = {{"algebra", d.algebra}, {"object", d.object}, {"mu", d.mu}};
  for (const auto& [n, d] : ws.entwined)
    j["entwined"][n] = {{"cowreath", d.cowreath}, {"object", d.object}, {"mu", d.mu}, {"rho", d.rho}};
  for (const auto& [n, d] : ws.dualities) {
    if (d.standard)
      j["dualities"][n] = {{"x", d.x}, {"standard", true}};
    else
      j["dualities"][n] = {{"x", d.x}, {"y", d.y}, {"b", d.b}, {"d", d.d}};
  }
  for (const auto& [n, d] : ws.frobenius) j["frobenius"][n] = {{"cowreath", d.cowreath}, {"t", d.t}, {"B", d.B}};
  if (!ws.unchecked.empty()) j["unchecked"] = ws.unchecked;
  return j;
}

template <class S>
bool sameWorkspace(const Workspace<S>& a, const Workspace<S>& b) {
  return serializeWorkspace(a) == serializeWorkspace(b);
}

template struct Workspace<Rational>;
template struct Workspace<Zp>;
template Workspace<Rational> parseWorkspace<Rational>(const json&, std::optional<FieldSpec>);
template Workspace<Zp> parseWorkspace<Zp>(const json&, std::optional<FieldSpec>);
template json serializeWorkspace<Rational>(const Workspace<Rational>&);
template json serializeWorkspace<Zp>(const Workspace<Zp>&);
template json matrixJson<Rational>(const Mat<Rational>&);
template json matrixJson<Zp>(const Mat<Zp>&);
template json morphismJson<Rational>(const Mor<Rational>&);
template json morphismJson<Zp>(const Mor<Zp>&);
template bool sameWorkspace<Rational>(const Workspace<Rational>&, const Workspace<Rational>&);
template bool sameWorkspace<Zp>(const Workspace<Zp>&, const Workspace<Zp>&);

}  // namespace cwk
