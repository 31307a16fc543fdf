#ifndef CWK_FIXTURES_HPP
#define CWK_FIXTURES_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace cwk {

struct FixtureInfo {
  std::string name;
  std::string description;
  // Check ids that must fail under `check`; empty for sound fixtures.
  std::vector<std::string> designated;
};

const std::vector<FixtureInfo>& fixtureRegistry();

// Workspace document of a bundled fixture, always over Q.
nlohmann::json buildFixture(const std::string& name);

// File name used when fixtures are written out, e.g. "f3-bad-psi.json".
std::string fixtureFileName(const std::string& name);

}  // namespace cwk

#endif
