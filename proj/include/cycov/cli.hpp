#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cycov {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

struct CommandInfo {
    std::string name;
    std::string summary;
    /// "module.operation" names reachable through this command.
    std::vector<std::string> operations;
};

const std::vector<CommandInfo>& command_table();

/// Every public operation of every module, as "module.operation".
const std::vector<std::string>& module_operations();

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelfcheckOptions {
    long max_genus = 3;
    std::optional<std::string> catalog_file;
};

/// Runs the golden-table, oracle, weight, census, bounds and catalog
/// suites. Throws on unreadable catalog files.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options);

}  // namespace cycov
