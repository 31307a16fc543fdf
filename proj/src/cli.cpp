#include "cwk/cli.hpp"

#include "cwk/fixtures.hpp"
#include "cwk/workspace.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#ifndef CWK_FIXTURE_DIR
#define CWK_FIXTURE_DIR "fixtures"
#endif

namespace cwk {

using json = nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string file;
  bool json = false;
  std::string output;
  std::string cowreath;
  bool search = false;
  std::uint64_t seed = 1;
  int trials = 32;
  bool phi = false, psi = false;
  std::string source, target, f, s, casimir;
  std::string dir = CWK_FIXTURE_DIR;
  bool emit = false, regenerate = false;
};

template <class S>
struct Section {
  std::string name;
  Report<S> report;
};

template <class S>
struct Outcome {
  std::vector<Section<S>> sections;
  json results = json::object();
  std::map<std::string, std::string> decisions;
  bool failed = false;
  std::optional<Workspace<S>> augmented;

  bool ok() const {
    if (failed) return false;
    for (const auto& s : sections)
      if (!s.report.ok()) return false;
    return true;
  }

  void add(const std::string& name, Report<S> r) { sections.push_back({name, std::move(r)}); }
};

template <class S>
json reportJson(const Section<S>& s) {
  json checks = json::array();
  for (const auto& c : s.report.checks) {
    json e = {{"id", c.id}, {"verdict", c.pass ? "pass" : "fail"}, {"residual_zero", c.pass}};
    if (!c.pass && c.residual.size() > 0) e["residual"] = matrixJson(c.residual);
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return {{"name", s.name}, {"subject", s.report.subject}, {"ok", s.report.ok()}, {"checks", checks}};
}

template <class S>
json outcomeJson(const Outcome<S>& o, const Options& opt, const FieldSpec& field) {
  json sections = json::array();
  for (const auto& s : o.sections) sections.push_back(reportJson(s));
  return {{"command", opt.command}, {"field", field.str()}, {"sections", sections}, {"results", o.results},
          {"decisions", o.decisions}, {"ok", o.ok()}};
}

template <class S>
void printHuman(const Outcome<S>& o, std::ostream& out) {
  for (const auto& s : o.sections) {
    out << "== " << s.name << " (" << s.report.subject << ")\n";
    for (const auto& c : s.report.checks) {
      out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.id;
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      out << "\n";
    }
  }
  for (const auto& [k, v] : o.decisions) out << k << ": " << v << "\n";
  for (const auto& [k, v] : o.results.items()) out << "results " << k << ": " << v.dump() << "\n";
  out << "result: " << (o.ok() ? "ok" : "failed") << "\n";
}

template <class S>
DualityData<S> dualityFor(const Workspace<S>& ws, const Obj& x) {
  auto n = ws.dualityOn(x);
  return n ? ws.duality(*n) : makeDualityData<S>(x);
}

template <class S>
void declareWord(Workspace<S>& ws, const Obj& o) {
  for (const auto& g : o.word()) ws.objects.emplace(g.name, g.dim);
}

template <class S>
std::vector<std::string> selectedCowreaths(const Workspace<S>& ws, const Options& opt) {
  std::vector<std::string> names;
  for (const auto& [n, d] : ws.cowreaths)
    if (opt.cowreath.empty() || opt.cowreath == n) names.push_back(n);
  if (!opt.cowreath.empty() && names.empty()) throw ParseError("/cowreaths", "no cowreath named '" + opt.cowreath + "'");
  return names;
}

// Skips a cowreath whose axioms fail; the failure is recorded.
template <class S>
bool precondition(Outcome<S>& o, const Cowreath<S>& cw, const std::string& name) {
  Report<S> r = checkCowreath(cw);
  if (r.ok() && checkTransfer(cw.base).ok() && checkAlgebra(cw.base.alg).ok()) return true;
  Report<S> pre;
  pre.subject = r.subject;
  pre.flag("pre.cowreath", false, "axioms fail; analysis skipped");
  o.add("cowreath " + name, pre);
  return false;
}

template <class S>
Outcome<S> doCheck(const Workspace<S>& ws) {
  Outcome<S> o;
  for (const auto& [n, d] : ws.algebras) {
    Algebra<S> al = ws.algebra(n);
    Report<S> r = checkAlgebra(al);
    if (!d.smashOf.empty()) {
      Cowreath<S> cw = ws.cowreath(d.smashOf);
      SmashAlgebra<S> sa = smashFromCowreath(cw, dualityFor(ws, cw.X()));
      expectEqual(r, "smash.matches_mult", al.m, sa.asAlgebra.m);
      expectEqual(r, "smash.matches_unit", al.unit, sa.asAlgebra.unit);
    }
    o.add("algebra " + n, r);
  }
  for (const auto& [n, d] : ws.coalgebras) o.add("coalgebra " + n, checkCoalgebra(ws.coalgebra(n)));
  for (const auto& [n, d] : ws.transfers) o.add("transfer " + n, checkTransfer(ws.transfer(n)));
  for (const auto& [n, d] : ws.cowreaths) o.add("cowreath " + n, checkCowreath(ws.cowreath(n)));
  for (const auto& [n, d] : ws.modules) o.add("module " + n, checkRightModule(ws.module(n), ws.algebra(d.algebra)));
  for (const auto& [n, d] : ws.entwined)
    o.add("entwined " + n, checkEntwinedModule(ws.cowreath(d.cowreath), ws.entwinedModule(n)));
  for (const auto& [n, d] : ws.dualities) o.add("duality " + n, checkAdjunction(ws.duality(n)));
  for (const auto& [n, d] : ws.frobenius)
    o.add("frobenius " + n, checkFrobeniusSystem(ws.cowreath(d.cowreath), ws.frobeniusSystem(n)));
  return o;
}

template <class S>
Outcome<S> doDual(const Workspace<S>& ws, const Options& opt) {
  Outcome<S> o;
  Workspace<S> aug = ws;
  for (const auto& n : selectedCowreaths(ws, opt)) {
    Cowreath<S> cw = ws.cowreath(n);
    if (!precondition(o, cw, n)) continue;
    DualityData<S> du = dualityFor(ws, cw.X());
    RightWreath<S> wr = wreathFromCowreath(cw, du);
    o.add("wreath " + n, checkRightWreath(wr));
    o.results[n] = {{"phi", morphismJson(wr.lt.phi)}, {"mY", morphismJson(wr.mY)}, {"etaY", morphismJson(wr.etaY)}};
    declareWord(aug, du.y);
    aug.morphisms[n + ".phi"] = wr.lt.phi;
    aug.morphisms[n + ".mY"] = wr.mY;
    aug.morphisms[n + ".etaY"] = wr.etaY;
  }
  o.augmented = aug;
  return o;
}

template <class S>
Outcome<S> doSmash(const Workspace<S>& ws, const Options& opt) {
  Outcome<S> o;
  Workspace<S> aug = ws;
  for (const auto& n : selectedCowreaths(ws, opt)) {
    Cowreath<S> cw = ws.cowreath(n);
    if (!precondition(o, cw, n)) continue;
    DualityData<S> du = dualityFor(ws, cw.X());
    SmashAlgebra<S> sa = smashFromCowreath(cw, du);
    Report<S> r = checkAlgebra(sa.asAlgebra);
    expectEqual(r, "smash.cross_check", sa.asAlgebra.m, smashMultFromCowreath(cw, du));
    o.add("smash " + n, r);
    o.results[n] = {{"m", morphismJson(sa.asAlgebra.m)}, {"unit", morphismJson(sa.asAlgebra.unit)}};
    declareWord(aug, du.y);
    Word w;
    for (const auto& g : sa.asAlgebra.a.word()) w.push_back(g.name);
    aug.morphisms[n + "#.m"] = sa.asAlgebra.m;
    aug.morphisms[n + "#.unit"] = sa.asAlgebra.unit;
    aug.algebras[n + "#"] = {w, n + "#.m", n + "#.unit", n};
  }
  o.augmented = aug;
  return o;
}

template <class S>
Outcome<S> doRoundtrip(const Workspace<S>& ws) {
  Outcome<S> o;
  std::map<std::string, bool> valid;
  for (const auto& [n, d] : ws.cowreaths) valid[n] = checkCowreath(ws.cowreath(n)).ok();
  for (const auto& [n, d] : ws.entwined) {
    Cowreath<S> cw = ws.cowreath(d.cowreath);
    if (!valid[d.cowreath]) continue;
    DualityData<S> du = dualityFor(ws, cw.X());
    EntwinedModule<S> em = ws.entwinedModule(n);
    Report<S> r;
    r.subject = "entwined module " + em.m.str() + " through the smash product";
    if (!checkEntwinedModule(cw, em).ok()) {
      r.flag("pre.entwined", false, "entwined module axioms fail");
      o.add("roundtrip " + n, r);
      continue;
    }
    SmashAlgebra<S> sa = smashFromCowreath(cw, du);
    RightModule<S> sm = toSmashModule(em, cw, du);
    r.flag("roundtrip.smash_module", checkRightModule(sm, sa.asAlgebra).ok());
    EntwinedModule<S> back = fromSmashModule(sm, cw, du);
    expectEqual(r, "roundtrip.mu", back.mu, em.mu);
    expectEqual(r, "roundtrip.rho", back.rho, em.rho);
    o.add("roundtrip " + n, r);
  }
  for (const auto& [n, d] : ws.modules) {
    const std::string& sOf = ws.algebras.at(d.algebra).smashOf;
    if (sOf.empty() || !valid[sOf]) continue;
    Cowreath<S> cw = ws.cowreath(sOf);
    DualityData<S> du = dualityFor(ws, cw.X());
    RightModule<S> md = ws.module(n);
    Report<S> r;
    r.subject = "smash module " + md.m.str() + " through entwined modules";
    EntwinedModule<S> em = fromSmashModule(md, cw, du);
    r.flag("roundtrip.entwined_module", checkEntwinedModule(cw, em).ok());
    expectEqual(r, "roundtrip.action", toSmashModule(em, cw, du).mu, md.mu);
    o.add("roundtrip " + n, r);
  }
  return o;
}

template <class S>
std::vector<RightModule<S>> modulesOver(const Workspace<S>& ws, const Algebra<S>& al) {
  std::vector<RightModule<S>> out{RightModule<S>{al.a, al.m}};
  for (const auto& [n, d] : ws.modules) {
    Algebra<S> a2 = ws.algebra(d.algebra);
    if (a2.a == al.a && sameMor(a2.m, al.m)) out.push_back(ws.module(n));
  }
  return out;
}

template <class S>
std::vector<EntwinedModule<S>> entwinedOver(const Workspace<S>& ws, const std::string& cwName) {
  std::vector<EntwinedModule<S>> out;
  Cowreath<S> cw = ws.cowreath(cwName);
  for (const auto& [n, d] : ws.entwined)
    if (d.cowreath == cwName && checkEntwinedModule(cw, ws.entwinedModule(n)).ok()) out.push_back(ws.entwinedModule(n));
  return out;
}

template <class S>
Outcome<S> doFrobenius(const Workspace<S>& ws, const Options& opt) {
  Outcome<S> o;
  Workspace<S> aug = ws;
  std::set<std::string> declaredFor;
  for (const auto& [n, d] : ws.frobenius) {
    if (!opt.cowreath.empty() && d.cowreath != opt.cowreath) continue;
    Cowreath<S> cw = ws.cowreath(d.cowreath);
    if (!precondition(o, cw, d.cowreath)) continue;
    declaredFor.insert(d.cowreath);
    FrobeniusSystem<S> fs = ws.frobeniusSystem(n);
    Report<S> r = checkFrobeniusSystem(cw, fs);
    bool ok = r.ok();
    o.add("frobenius " + n, r);
    if (!ok) continue;
    DualityData<S> du = dualityFor(ws, cw.X());
    o.add("phi-psi " + n, checkPhiPsiInverse(cw, du, fs));
    o.add("transformations " + n,
          buildNaturalTransformations(cw, fs, modulesOver(ws, cw.base.alg), entwinedOver(ws, d.cowreath)));
    if (opt.phi) o.results[n]["phi"] = morphismJson(buildPhi(cw, du, fs.t));
    if (opt.psi) o.results[n]["psi"] = morphismJson(buildPsi(cw, du, fs.B));
  }
  for (const auto& n : selectedCowreaths(ws, opt)) {
    if (!opt.search && declaredFor.count(n)) continue;
    Cowreath<S> cw = ws.cowreath(n);
    if (!precondition(o, cw, n)) continue;
    DualityData<S> du = dualityFor(ws, cw.X());
    FrobeniusSearch<S> fs = searchFrobenius(cw, du, opt.trials, opt.seed);
    json res = {{"found", fs.found.has_value()}, {"dim_T", fs.dimT}, {"trials", fs.trials},
                {"singular", fs.singular}, {"rejected", fs.rejected}, {"basis_singular", fs.basisSingular}};
    o.decisions["frobenius/" + n] = fs.found ? "found" : "not-found";
    if (fs.found) {
      res["t"] = morphismJson(fs.found->t);
      res["B"] = morphismJson(fs.found->B);
      if (opt.phi) res["phi"] = morphismJson(*fs.phi);
      if (opt.psi) res["psi"] = morphismJson(*fs.psi);
      Report<S> r = checkFrobeniusSystem(cw, *fs.found);
      r.merge(checkPhiPsiInverse(cw, du, *fs.found));
      o.add("search " + n, r);
      aug.morphisms[n + ".t"] = fs.found->t;
      aug.morphisms[n + ".B"] = fs.found->B;
      aug.frobenius[n + ".found"] = {n, n + ".t", n + ".B"};
    }
    o.results[n]["search"] = res;
  }
  o.augmented = aug;
  return o;
}

template <class S>
Outcome<S> doSeparability(const Workspace<S>& ws, const Options& opt) {
  Outcome<S> o;
  for (const auto& n : selectedCowreaths(ws, opt)) {
    Cowreath<S> cw = ws.cowreath(n);
    if (!precondition(o, cw, n)) continue;
    SeparabilityResult<S> f = solveSeparability(cw);
    SeparabilityResult<S> g = solveGSeparability(cw);
    CowreathCoring<S> cc = coringFromCowreath(cw);
    SeparabilityResult<S> c = solveCoringCoseparability(cc.coring);
    json res = {{"forgetful_separable", f.feasible()},
                {"certificate", {{"unknowns", f.unknowns}, {"rank", f.rankA}, {"rank_augmented", f.rankAug}}},
                {"cofree_separable", g.feasible()},
                {"coring_coseparable", c.feasible()}};
    if (f.witness) res["B"] = morphismJson(*f.witness);
    if (g.witness) res["t"] = morphismJson(*g.witness);
    o.results[n] = res;
    o.decisions["separable/" + n] = f.feasible() ? "yes" : "no";
    o.decisions["gseparable/" + n] = g.feasible() ? "yes" : "no";
    o.decisions["coseparable/" + n] = c.feasible() ? "yes" : "no";
    Report<S> r;
    r.subject = "separability of " + cw.X().str();
    if (f.witness) {
      FrobeniusSystem<S> probe{zeroMor<S>(Obj(), cw.A() + cw.X()), *f.witness};
      Report<S> fr = checkFrobeniusSystem(cw, probe);
      r.flag("sep.witness_B_hom", fr.passed("frobenius.B_hom"));
      r.flag("sep.witness_casimir", fr.passed("frobenius.casimir"));
    }
    r.flag("sep.coring_agreement", f.feasible() == c.feasible());
    o.add("separability " + n, r);
  }
  return o;
}

template <class S>
Outcome<S> doCoring(const Workspace<S>& ws, const Options& opt) {
  Outcome<S> o;
  for (const auto& n : selectedCowreaths(ws, opt)) {
    Cowreath<S> cw = ws.cowreath(n);
    if (!precondition(o, cw, n)) continue;
    DualityData<S> du = dualityFor(ws, cw.X());
    CowreathCoring<S> cc = coringFromCowreath(cw);
    Report<S> r = checkCoring(cc.coring);
    r.merge(checkCoringIdentification(cc));
    o.add("coring " + n, r);
    o.add("adjunction " + n, checkCoringAdjunction(coringAdjunction(cw, du), cw.base.alg));
    o.add("smash-coring " + n, smashConsistency(smashFromCowreath(cw, du), smashConsistencyData(cw, du)));

    FrobeniusSearch<S> tfs = searchFrobenius(cw, du, opt.trials, opt.seed);
    CoringFrobeniusSearch<S> cfs = searchCoringFrobenius(cc.coring, opt.trials, opt.seed);
    Report<S> fr;
    fr.subject = "Frobenius verdicts";
    fr.flag("corfrob.agreement", tfs.found.has_value() == cfs.found.has_value());
    if (tfs.found) {
      auto [t, B] = coringFrobeniusFromSystem(cw, cc, *tfs.found);
      fr.merge(checkCoringFrobenius(cc.coring, t, B));
    }
    o.add("coring-frobenius " + n, fr);
    o.decisions["coringfrob/" + n] = cfs.found ? "found" : "not-found";
    o.results[n] = {{"coring_dim", cc.coring.c.obj.dim()},
                    {"cc_dim", cc.coring.cc.qd.quotient.dim()},
                    {"frobenius_wreath_level", tfs.found.has_value()},
                    {"frobenius_coring_level", cfs.found.has_value()}};
  }
  return o;
}

template <class S>
Outcome<S> doMaschke(const Workspace<S>& ws, const Options& opt) {
  Outcome<S> o;
  if (opt.source.empty() || opt.target.empty() || opt.f.empty() || opt.s.empty())
    throw ParseError("", "maschke needs --source, --target, --f and --s");
  if (!ws.entwined.count(opt.source)) throw ParseError("/entwined", "unknown entwined module '" + opt.source + "'");
  if (!ws.entwined.count(opt.target)) throw ParseError("/entwined", "unknown entwined module '" + opt.target + "'");
  const std::string& cwName = ws.entwined.at(opt.source).cowreath;
  Cowreath<S> cw = ws.cowreath(cwName);
  if (!precondition(o, cw, cwName)) return o;
  std::optional<Mor<S>> B;
  if (!opt.casimir.empty())
    B = ws.mor(opt.casimir);
  else
    B = solveSeparability(cw).witness;
  if (!B) {
    Report<S> r;
    r.flag("maschke.casimir", false, "no normalised Casimir exists");
    o.add("maschke", r);
    return o;
  }
  MaschkeResult<S> m = maschkeLift(cw, *B, ws.entwinedModule(opt.source), ws.entwinedModule(opt.target),
                                   ws.mor(opt.f), ws.mor(opt.s));
  o.add("maschke", m.report);
  o.results["lift"] = morphismJson(m.lift);
  return o;
}

template <class S>
Outcome<S> dispatch(const Workspace<S>& ws, const Options& opt) {
  if (opt.command == "check") return doCheck(ws);
  if (opt.command == "dual") return doDual(ws, opt);
  if (opt.command == "smash") return doSmash(ws, opt);
  if (opt.command == "roundtrip") return doRoundtrip(ws);
  if (opt.command == "frobenius") return doFrobenius(ws, opt);
  if (opt.command == "separability") return doSeparability(ws, opt);
  if (opt.command == "coring") return doCoring(ws, opt);
  if (opt.command == "maschke") return doMaschke(ws, opt);
  throw ParseError("", "unknown command " + opt.command);
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParseError("", "cannot write " + path);
  f << text;
}

template <class S>
int emit(const Workspace<S>& ws, const Options& opt, std::ostream& out) {
  Outcome<S> o = dispatch(ws, opt);
  if (opt.json)
    out << outcomeJson(o, opt, ws.field).dump(2) << "\n";
  else
    printHuman(o, out);
  if (!opt.output.empty()) {
    json doc = o.augmented ? serializeWorkspace(*o.augmented) : outcomeJson(o, opt, ws.field);
    writeFile(opt.output, doc.dump(2) + "\n");
  }
  return o.ok() ? 0 : 1;
}

std::optional<FieldSpec> envField() {
  const char* v = std::getenv("CWK_FIELD");
  if (!v || !*v) return std::nullopt;
  try {
    return FieldSpec::parse(v);
  } catch (const FieldError& e) {
    throw ParseError("", std::string("CWK_FIELD: ") + e.what());
  }
}

template <class S>
void flatten(const Outcome<S>& o, const std::string& cmd, json& table) {
  for (const auto& s : o.sections)
    for (const auto& c : s.report.checks) table[cmd + "/" + s.name + "/" + c.id] = c.pass ? "pass" : "fail";
  for (const auto& [k, v] : o.decisions) table[cmd + "/" + k] = v;
}

template <class S>
json tableFor(const Workspace<S>& ws) {
  json table = json::object();
  Options opt;
  flatten(doCheck(ws), "check", table);
  flatten(doDual(ws, opt), "dual", table);
  flatten(doSmash(ws, opt), "smash", table);
  flatten(doRoundtrip(ws), "roundtrip", table);
  opt.search = true;
  flatten(doFrobenius(ws, opt), "frobenius", table);
  flatten(doSeparability(ws, opt), "separability", table);
  flatten(doCoring(ws, opt), "coring", table);
  return table;
}

int runFixtures(const Options& opt, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  fs::path dir(opt.dir);
  if (opt.emit) {
    fs::create_directories(dir);
    for (const auto& f : fixtureRegistry())
      writeFile((dir / fixtureFileName(f.name)).string(), buildFixture(f.name).dump(2) + "\n");
  }
  json tables = json::object();
  std::set<std::string> stale;
  for (const auto& f : fixtureRegistry()) {
    json doc = buildFixture(f.name);
    fs::path file = dir / fixtureFileName(f.name);
    if (fs::exists(file)) {
      json onDisk = readJsonFile(file.string());
      if (onDisk != doc) stale.insert(f.name);
      doc = onDisk;
    }
    tables[f.name] = verdictTable(doc, FieldSpec{});
  }
  fs::path expectedPath = dir / "expected.json";
  if (opt.regenerate) {
    fs::create_directories(dir);
    writeFile(expectedPath.string(), tables.dump(2) + "\n");
    out << "wrote " << expectedPath.string() << "\n";
    return 0;
  }
  json expected = readJsonFile(expectedPath.string());
  int bad = 0;
  for (const auto& f : fixtureRegistry()) {
    bool same = expected.contains(f.name) && expected[f.name] == tables[f.name];
    std::vector<std::string> failing;
    for (const auto& [k, v] : tables[f.name].items())
      if (v == "fail" && k.rfind("check/", 0) == 0) failing.push_back(k.substr(k.rfind('/') + 1));
    std::vector<std::string> want = f.designated;
    std::sort(failing.begin(), failing.end());
    std::sort(want.begin(), want.end());
    bool designated = failing == want;
    bool fresh = !stale.count(f.name);
    out << f.name << ": " << (same ? "matches" : "DIFFERS") << ", designated failures "
        << (designated ? "ok" : "WRONG") << (fresh ? "" : ", file stale") << "  (" << f.description << ")\n";
    if (!same || !designated || !fresh) ++bad;
  }
  if (bad) err << bad << " fixture(s) disagree with " << expectedPath.string() << "\n";
  return bad ? 1 : 0;
}

}  // namespace

json verdictTable(const json& doc, std::optional<FieldSpec> field) {
  FieldSpec f = workspaceField(doc, field);
  if (f.isQ()) return tableFor(parseWorkspace<Rational>(doc, f));
  PrimeScope scope(f.p);
  return tableFor(parseWorkspace<Zp>(doc, f));
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cowreath toolkit"};
  app.name("cwk");
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool withCowreath) {
    sub->add_option("file", opt.file, "workspace JSON")->required();
    sub->add_flag("--json", opt.json, "print a JSON report");
    sub->add_option("-o,--output", opt.output, "write the augmented workspace (or the JSON report) here");
    if (withCowreath) sub->add_option("--cowreath", opt.cowreath, "restrict to one cowreath");
  };
  common(app.add_subcommand("check", "check every declared structure"), false);
  common(app.add_subcommand("dual", "dual left transfer and right wreath"), true);
  common(app.add_subcommand("smash", "smash product algebra y a"), true);
  common(app.add_subcommand("roundtrip", "entwined modules against smash modules"), false);
  auto* frob = app.add_subcommand("frobenius", "check declared Frobenius systems or search for one");
  common(frob, true);
  frob->add_flag("--search", opt.search, "search even where a system is declared");
  frob->add_option("--seed", opt.seed, "random seed");
  frob->add_option("--trials", opt.trials, "number of samples");
  frob->add_flag("--phi", opt.phi, "include Phi(t)");
  frob->add_flag("--psi", opt.psi, "include Psi(B)");
  common(app.add_subcommand("separability", "separability of the forgetful and cofree functors"), true);
  auto* cor = app.add_subcommand("coring", "coring a x, its adjunction and Frobenius verdicts");
  common(cor, true);
  cor->add_option("--seed", opt.seed, "random seed");
  cor->add_option("--trials", opt.trials, "number of samples");
  auto* mas = app.add_subcommand("maschke", "entwined section of a split epimorphism");
  common(mas, false);
  mas->add_option("--source", opt.source, "entwined module M")->required();
  mas->add_option("--target", opt.target, "entwined module N")->required();
  mas->add_option("--f", opt.f, "morphism M -> N")->required();
  mas->add_option("--s", opt.s, "linear section N -> M")->required();
  mas->add_option("--casimir", opt.casimir, "morphism X X -> A to use instead of solving for one");
  auto* fx = app.add_subcommand("fixtures", "compare bundled fixtures with their expected verdicts");
  fx->add_option("--dir", opt.dir, "fixture directory");
  fx->add_flag("--emit", opt.emit, "write the fixture workspaces into the directory");
  fx->add_flag("--regenerate", opt.regenerate, "rewrite expected.json from the current checkers");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "cwk: " << e.what() << "\n";
    return 2;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    if (opt.command == "fixtures") return runFixtures(opt, out, err);
    json doc = readJsonFile(opt.file);
    FieldSpec f = workspaceField(doc, envField());
    if (f.isQ()) return emit(parseWorkspace<Rational>(doc, f), opt, out);
    PrimeScope scope(f.p);
    return emit(parseWorkspace<Zp>(doc, f), opt, out);
  } catch (const ParseError& e) {
    err << "cwk: " << e.what() << "\n";
    return 2;
  } catch (const TypeError& e) {
    err << "cwk: type error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    err << "cwk: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cwk
