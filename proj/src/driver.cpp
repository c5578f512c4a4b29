#include "lnlfpc/driver.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "lnlfpc/basis.hpp"
#include "lnlfpc/gridcheck.hpp"
#include "lnlfpc/oracle.hpp"
#include "lnlfpc/parser.hpp"
#include "lnlfpc/prelude.hpp"
#include "lnlfpc/pretty.hpp"
#include "lnlfpc/sexpr.hpp"

namespace lnlfpc {

namespace {

void appendModule(LoadedProgram& loaded, const std::string& origin, std::string_view source) {
    ParseModuleResult parsed = parseModule(source);
    for (Diagnostic& d : parsed.diagnostics)
        loaded.diagnostics.push_back(SourcedDiagnostic{std::move(d), origin});
    if (!parsed.diagnostics.empty()) return;
    ElaborateResult elab = elaborateModule(parsed.module, loaded.env, origin, &loaded.recs);
    for (Diagnostic& d : elab.diagnostics)
        loaded.diagnostics.push_back(SourcedDiagnostic{std::move(d), origin});
    for (CoreDef& def : elab.defs) loaded.program.defs.push_back(std::move(def));
    if (elab.main) {
        if (loaded.program.hasMain()) {
            loaded.diagnostics.push_back(SourcedDiagnostic{
                Diagnostic::error("E-DUPLICATE-NAME", "main is already defined", elab.mainSpan),
                origin});
        } else {
            loaded.program.main = elab.main;
            loaded.program.mainSpan = elab.mainSpan;
        }
    }
}

}  // namespace

LoadedProgram loadProgramFromSource(const std::string& origin, std::string_view source,
                                    bool withPrelude) {
    LoadedProgram loaded;
    if (withPrelude) appendModule(loaded, "<prelude>", preludeSource());
    if (loaded.diagnostics.empty()) appendModule(loaded, origin, source);
    loaded.ok = loaded.diagnostics.empty();
    return loaded;
}

LoadedProgram loadProgram(const std::string& filePath, bool withPrelude) {
    std::ifstream in(filePath, std::ios::binary);
    if (!in) {
        LoadedProgram loaded;
        loaded.diagnostics.push_back(SourcedDiagnostic{
            Diagnostic::error("E-PARSE", "cannot open file '" + filePath + "'"), filePath});
        return loaded;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return loadProgramFromSource(filePath, buf.str(), withPrelude);
}

void printDiagnosticsHuman(const std::vector<SourcedDiagnostic>& diags, std::ostream& err) {
    for (const SourcedDiagnostic& sd : diags) {
        const Diagnostic& d = sd.diag;
        err << (d.severity == Severity::Error ? "error" : "warning") << '[' << d.code << "] "
            << sd.origin;
        if (d.span.line != 0) err << ':' << d.span.line << ':' << d.span.col;
        err << ": " << d.message;
        if (!d.definition.empty()) err << " (in '" << d.definition << "')";
        err << '\n';
    }
}

void printDiagnosticsJson(const std::vector<SourcedDiagnostic>& diags, std::ostream& out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SourcedDiagnostic& sd : diags) {
        const Diagnostic& d = sd.diag;
        arr.push_back({
            {"code", d.code},
            {"severity", d.severity == Severity::Error ? "error" : "warning"},
            {"span", {{"line", d.span.line}, {"col", d.span.col}, {"len", d.span.len}}},
            {"message", d.message},
            {"definition", d.definition},
        });
    }
    out << arr.dump() << '\n';
}

Result<std::string> renderValue(const TermRef& value, DecodeMode mode) {
    switch (mode) {
        case DecodeMode::None:
            return termToSexpr(value);
        case DecodeMode::Nat: {
            Result<uint64_t> n = oracle::decodeNat(value);
            if (!n) return n.takeError();
            return std::to_string(*n);
        }
        case DecodeMode::ListNat: {
            Result<std::vector<uint64_t>> xs = oracle::decodeListNat(value);
            if (!xs) return xs.takeError();
            std::string out = "[";
            for (size_t i = 0; i < xs->size(); ++i) {
                if (i) out += ',';
                out += std::to_string((*xs)[i]);
            }
            out += ']';
            return out;
        }
    }
    return termToSexpr(value);
}

std::string renderValueAuto(const TermRef& value, const TypeRef& type) {
    if (typeEq(type, natType())) {
        Result<std::string> r = renderValue(value, DecodeMode::Nat);
        if (r) return *r;
    }
    if (typeEq(type, listNatType())) {
        Result<std::string> r = renderValue(value, DecodeMode::ListNat);
        if (r) return *r;
    }
    return termToSexpr(value);
}

namespace {

std::vector<SourcedDiagnostic> withOrigins(const CoreProgram& prog, const std::string& fileOrigin,
                                           std::vector<Diagnostic> diags) {
    std::vector<SourcedDiagnostic> out;
    for (Diagnostic& d : diags) {
        std::string origin = fileOrigin;
        for (const CoreDef& def : prog.defs)
            if (def.name == d.definition) {
                origin = def.origin;
                break;
            }
        out.push_back(SourcedDiagnostic{std::move(d), std::move(origin)});
    }
    return out;
}

int reportLoadFailure(const CliConfig& cfg, const LoadedProgram& loaded, std::ostream& out,
                      std::ostream& err) {
    if (cfg.json) printDiagnosticsJson(loaded.diagnostics, out);
    else printDiagnosticsHuman(loaded.diagnostics, err);
    return kExitError;
}

}  // namespace

int cmdCheck(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    LoadedProgram loaded = loadProgram(cfg.file, cfg.prelude);
    if (!loaded.ok) return reportLoadFailure(cfg, loaded, out, err);
    CheckedProgram checked = checkProgram(loaded.program);
    if (!checked.ok()) {
        auto sourced = withOrigins(loaded.program, cfg.file, checked.diagnostics);
        if (cfg.json) printDiagnosticsJson(sourced, out);
        else printDiagnosticsHuman(sourced, err);
        return kExitError;
    }
    if (cfg.json) {
        printDiagnosticsJson({}, out);  // empty array: no diagnostics
        return kExitOk;
    }
    for (const CoreDef& def : loaded.program.defs) {
        if (def.origin == "<prelude>") continue;  // implicit library, keep output focused
        out << def.name << " : " << printCoreType(def.declaredType) << '\n';
    }
    if (checked.mainType) out << "main : " << printCoreType(*checked.mainType) << '\n';
    return kExitOk;
}

int cmdRun(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    LoadedProgram loaded = loadProgram(cfg.file, cfg.prelude);
    if (!loaded.ok) return reportLoadFailure(cfg, loaded, out, err);
    CheckedProgram checked = checkProgram(loaded.program);
    if (!checked.ok()) {
        auto sourced = withOrigins(loaded.program, cfg.file, checked.diagnostics);
        if (cfg.json) printDiagnosticsJson(sourced, out);
        else printDiagnosticsHuman(sourced, err);
        return kExitError;
    }
    Result<EvalOutcome> outcome = runMain(loaded.program, cfg.fuel);
    if (!outcome) {
        printDiagnosticsHuman({SourcedDiagnostic{outcome.takeError(), cfg.file}}, err);
        return kExitError;
    }
    switch (outcome->kind) {
        case OutcomeKind::Value: {
            Result<std::string> text = renderValue(outcome->value, cfg.decode);
            if (!text) {
                printDiagnosticsHuman({SourcedDiagnostic{text.takeError(), cfg.file}}, err);
                return kExitError;
            }
            out << *text << '\n';
            return kExitOk;
        }
        case OutcomeKind::OutOfFuel:
            err << "out of fuel after " << cfg.fuel << " steps\n";
            return kExitOutOfFuel;
        case OutcomeKind::Stuck:
            err << "evaluation stuck: " << outcome->reason << '\n';
            return kExitStuck;
    }
    return kExitError;
}

int cmdElab(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    LoadedProgram loaded = loadProgram(cfg.file, cfg.prelude);
    if (!loaded.ok) return reportLoadFailure(cfg, loaded, out, err);
    out << "(program\n";
    for (const CoreDef& def : loaded.program.defs) {
        if (def.origin == "<prelude>") continue;
        out << "  (def \"" << def.name << "\" " << typeToSexpr(def.declaredType) << ' '
            << termToSexpr(def.body) << ")\n";
    }
    if (loaded.program.hasMain())
        out << "  (main " << termToSexpr(loaded.program.main) << ")\n";
    out << ")\n";
    return kExitOk;
}

int cmdRepl(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    LoadedProgram loaded;
    if (!cfg.file.empty()) {
        loaded = loadProgram(cfg.file, cfg.prelude);
    } else {
        loaded = loadProgramFromSource("<repl>", "", cfg.prelude);
    }
    if (!loaded.ok) return reportLoadFailure(cfg, loaded, out, err);
    CheckedProgram checked = checkProgram(loaded.program);
    if (!checked.ok()) {
        auto sourced = withOrigins(loaded.program, cfg.file, checked.diagnostics);
        printDiagnosticsHuman(sourced, err);
        return kExitError;
    }
    std::string line;
    err << "lnlfpc> " << std::flush;
    while (std::getline(in, line)) {
        if (line == ":quit" || line == ":q") break;
        if (line.empty() || line.find_first_not_of(" \t") == std::string::npos) {
            err << "lnlfpc> " << std::flush;
            continue;
        }
        ParseTermResult parsed = parseTerm(line);
        if (!parsed.ok()) {
            std::vector<SourcedDiagnostic> ds;
            for (Diagnostic& d : parsed.diagnostics)
                ds.push_back(SourcedDiagnostic{std::move(d), "<repl>"});
            printDiagnosticsHuman(ds, err);
            err << "lnlfpc> " << std::flush;
            continue;
        }
        Result<TermRef> core = elaborateTerm(parsed.term, loaded.env);
        if (!core) {
            printDiagnosticsHuman({SourcedDiagnostic{core.takeError(), "<repl>"}}, err);
            err << "lnlfpc> " << std::flush;
            continue;
        }
        Result<SynthResult> ty = synth({}, *core);
        if (!ty) {
            printDiagnosticsHuman({SourcedDiagnostic{ty.takeError(), "<repl>"}}, err);
            err << "lnlfpc> " << std::flush;
            continue;
        }
        EvalOutcome outcome = eval(*core, cfg.fuel);
        switch (outcome.kind) {
            case OutcomeKind::Value:
                out << renderValueAuto(outcome.value, ty->type) << " : "
                    << printCoreType(ty->type) << '\n';
                break;
            case OutcomeKind::OutOfFuel:
                err << "out of fuel after " << cfg.fuel << " steps\n";
                break;
            case OutcomeKind::Stuck:
                err << "evaluation stuck: " << outcome.reason << '\n';
                break;
        }
        err << "lnlfpc> " << std::flush;
    }
    return kExitOk;
}

int cmdOracleGrid(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    GridOptions opts;
    opts.wellTypedMaxSize = cfg.gridMaxSize;
    opts.exhaustiveMaxSize = std::min<uint64_t>(4, cfg.gridMaxSize);
    GridStats stats = runOracleGrid(opts);
    out << "grid points:        " << stats.points << '\n'
        << "  type-coherent:    " << stats.wellTypedPoints << '\n'
        << "  exhaustive:       " << stats.exhaustivePoints << '\n'
        << "both accept:        " << stats.accepted << '\n'
        << "disagreements:      " << stats.disagreements << '\n';
    for (const std::string& s : stats.samples) err << "disagreement: " << s << '\n';
    return stats.disagreements == 0 ? kExitOk : kExitError;
}

}  // namespace lnlfpc
