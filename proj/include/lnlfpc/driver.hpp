#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lnlfpc/check.hpp"
#include "lnlfpc/elaborate.hpp"
#include "lnlfpc/eval.hpp"

namespace lnlfpc {

enum class Command : uint8_t { Check, Run, Elab, Repl, OracleGrid };
enum class DecodeMode : uint8_t { None, Nat, ListNat };

struct CliConfig {
    Command command = Command::Check;
    std::string file;  // empty only for repl / oracle-grid
    uint64_t fuel = 1'000'000;
    DecodeMode decode = DecodeMode::None;
    bool json = false;
    bool prelude = true;       // prepend the shipped prelude
    uint64_t gridMaxSize = 7;  // oracle-grid bound
};

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;     // parse or type errors
inline constexpr int kExitOutOfFuel = 2;
inline constexpr int kExitStuck = 3;
inline constexpr int kExitUsage = 4;

struct SourcedDiagnostic {
    Diagnostic diag;
    std::string origin;  // "<prelude>", file path, or "<repl>"
};

struct LoadedProgram {
    ElabEnv env;
    CoreProgram program;  // prelude definitions first, then the file's
    std::vector<RecInstance> recs;
    std::vector<SourcedDiagnostic> diagnostics;
    bool ok = false;
};

// Parses and elaborates prelude + file. `source` overrides reading from disk
// (used by tests and the REPL bootstrap); pass origin labels for diagnostics.
LoadedProgram loadProgram(const std::string& filePath, bool withPrelude);
LoadedProgram loadProgramFromSource(const std::string& origin, std::string_view source,
                                    bool withPrelude);

void printDiagnosticsHuman(const std::vector<SourcedDiagnostic>& diags, std::ostream& err);
void printDiagnosticsJson(const std::vector<SourcedDiagnostic>& diags, std::ostream& out);

// Renders an evaluation result per the decode mode ("3", "[0,0,0]", or the
// s-expression form). Decode failures come back as a diagnostic.
Result<std::string> renderValue(const TermRef& value, DecodeMode mode);

// Auto-decode used by the REPL: Nat and List Nat values print decoded, other
// types as s-expressions.
std::string renderValueAuto(const TermRef& value, const TypeRef& type);

int cmdCheck(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmdRun(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmdElab(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmdRepl(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmdOracleGrid(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace lnlfpc
