#ifndef CWK_CLI_HPP
#define CWK_CLI_HPP

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cwk/field.hpp"

namespace cwk {

// Exit codes: 0 ok, 1 a check failed, 2 usage or parse error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Flat map "command/subject/check" -> verdict over every analysis the CLI
// runs; used for the bundled fixtures' expected tables.
nlohmann::json verdictTable(const nlohmann::json& doc, std::optional<FieldSpec> field = std::nullopt);

}  // namespace cwk

#endif
