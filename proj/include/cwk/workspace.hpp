#ifndef CWK_WORKSPACE_HPP
#define CWK_WORKSPACE_HPP

#include "cwk/coring.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwk {

inline constexpr const char* kSchema = "cowreath-kit/1";

// Carries a JSON pointer to the offending value.
struct ParseError : std::runtime_error {
  std::string pointer;
  ParseError(std::string ptr, const std::string& msg) : std::runtime_error(ptr.empty() ? msg : ptr + ": " + msg), pointer(std::move(ptr)) {}
};

using Word = std::vector<std::string>;

struct AlgebraDecl {
  Word object;
  std::string m, unit;
  std::string smashOf;  // cowreath whose smash product this claims to be
};

struct CoalgebraDecl {
  Word object;
  std::string delta, counit;
};

struct TransferDecl {
  std::string algebra;
  Word object;
  std::string psi;
};

struct CowreathDecl {
  std::string transfer, delta, eps;
};

struct ModuleDecl {
  std::string algebra;
  Word object;
  std::string mu;
};

struct EntwinedDecl {
  std::string cowreath;
  Word object;
  std::string mu, rho;
};

struct DualityDecl {
  Word x, y;
  std::string b, d;
  bool standard = false;
};

struct FrobeniusDecl {
  std::string cowreath, t, B;
};

template <class S>
struct Workspace {
  FieldSpec field;
  std::map<std::string, int> objects;
  std::map<std::string, Mor<S>> morphisms;
  std::map<std::string, AlgebraDecl> algebras;
  std::map<std::string, CoalgebraDecl> coalgebras;
  std::map<std::string, TransferDecl> transfers;
  std::map<std::string, CowreathDecl> cowreaths;
  std::map<std::string, ModuleDecl> modules;
  std::map<std::string, EntwinedDecl> entwined;
  std::map<std::string, DualityDecl> dualities;
  std::map<std::string, FrobeniusDecl> frobenius;
  std::set<std::string> unchecked;

  Obj word(const Word& names) const;
  const Mor<S>& mor(const std::string& name) const;

  Algebra<S> algebra(const std::string& name) const;
  Coalgebra<S> coalgebra(const std::string& name) const;
  Transfer<S> transfer(const std::string& name) const;
  Cowreath<S> cowreath(const std::string& name) const;
  RightModule<S> module(const std::string& name) const;
  EntwinedModule<S> entwinedModule(const std::string& name) const;
  DualityData<S> duality(const std::string& name) const;
  FrobeniusSystem<S> frobeniusSystem(const std::string& name) const;

  // First duality (by name) whose left object is x.
  std::optional<std::string> dualityOn(const Obj& x) const;
};

// Field named in the document, or the override when given.
FieldSpec workspaceField(const nlohmann::json& j, std::optional<FieldSpec> override = std::nullopt);

template <class S>
Workspace<S> parseWorkspace(const nlohmann::json& j, std::optional<FieldSpec> override = std::nullopt);

template <class S>
nlohmann::json serializeWorkspace(const Workspace<S>& ws);

template <class S>
nlohmann::json matrixJson(const Mat<S>& m);

template <class S>
nlohmann::json morphismJson(const Mor<S>& f);

template <class S>
bool sameWorkspace(const Workspace<S>& a, const Workspace<S>& b);

nlohmann::json readJsonFile(const std::string& path);

extern template struct Workspace<Rational>;
extern template struct Workspace<Zp>;

}  // namespace cwk

#endif
