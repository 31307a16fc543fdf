#ifndef CWK_REPORT_HPP
#define CWK_REPORT_HPP

#include "cwk/linalg.hpp"

#include <string>
#include <vector>

namespace cwk {

template <class S>
struct Check {
  std::string id;
  bool pass = false;
  Mat<S> residual;  // lhs - rhs, empty when the sides do not type-match
  std::string detail;
};

template <class S>
struct Report {
  std::string subject;
  std::vector<Check<S>> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const Check<S>* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }

  bool passed(const std::string& id) const {
    const Check<S>* c = find(id);
    return c && c->pass;
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c.id);
    return out;
  }

  void flag(const std::string& id, bool pass, const std::string& detail = {}) {
    checks.push_back({id, pass, Mat<S>(), detail});
  }

  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
};

}  // namespace cwk

#endif
