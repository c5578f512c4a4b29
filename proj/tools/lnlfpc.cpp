#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "lnlfpc/driver.hpp"

using namespace lnlfpc;

int main(int argc, char** argv) {
    CLI::App app{"lnlfpc - a mixed linear/non-linear language with recursive types"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string decode = "none";
    bool noPrelude = false;

    auto addCommon = [&](CLI::App* sub, bool needsFile) {
        if (needsFile)
            sub->add_option("file", cfg.file, "source file (.lnl)")->required();
        sub->add_flag("--no-prelude", noPrelude, "do not prepend the standard prelude");
        return sub;
    };

    CLI::App* check = addCommon(app.add_subcommand("check", "type check a module"), true);
    check->add_flag("--json", cfg.json, "emit diagnostics as a JSON array");

    CLI::App* run = addCommon(app.add_subcommand("run", "evaluate main"), true);
    run->add_option("--fuel", cfg.fuel, "evaluation step budget")->check(CLI::PositiveNumber);
    run->add_option("--decode", decode, "render the result (none|nat|list-nat)")
        ->check(CLI::IsMember({"none", "nat", "list-nat"}));

    addCommon(app.add_subcommand("elab", "print the elaborated core program"), true);

    CLI::App* repl = app.add_subcommand("repl", "interactive evaluation loop");
    repl->add_option("file", cfg.file, "module to bring into scope");
    repl->add_flag("--no-prelude", noPrelude, "do not prepend the standard prelude");
    repl->add_option("--fuel", cfg.fuel, "evaluation step budget")->check(CLI::PositiveNumber);

    CLI::App* grid = app.add_subcommand("oracle-grid",
                                        "compare the checker with the declarative oracle");
    grid->add_option("--max-size", cfg.gridMaxSize, "term size bound")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message / help text
        return kExitUsage;
    }

    cfg.prelude = !noPrelude;
    if (decode == "nat") cfg.decode = DecodeMode::Nat;
    else if (decode == "list-nat") cfg.decode = DecodeMode::ListNat;

    if (check->parsed()) cfg.command = Command::Check;
    else if (run->parsed()) cfg.command = Command::Run;
    else if (repl->parsed()) cfg.command = Command::Repl;
    else if (grid->parsed()) cfg.command = Command::OracleGrid;
    else cfg.command = Command::Elab;

    switch (cfg.command) {
        case Command::Check: return cmdCheck(cfg, std::cout, std::cerr);
        case Command::Run: return cmdRun(cfg, std::cout, std::cerr);
        case Command::Elab: return cmdElab(cfg, std::cout, std::cerr);
        case Command::Repl: return cmdRepl(cfg, std::cin, std::cout, std::cerr);
        case Command::OracleGrid: return cmdOracleGrid(cfg, std::cout, std::cerr);
    }
    return kExitUsage;
}
