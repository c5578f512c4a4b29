#pragma once

#include <string_view>

#include "lnlfpc/surface.hpp"

namespace lnlfpc {

struct ParseModuleResult {
    SurfaceModule module;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

struct ParseTermResult {
    STermRef term;  // null on failure
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return term != nullptr && diagnostics.empty(); }
};

// Parses a whole module (type aliases, definitions, optional main). Recovery
// is panic-mode per top-level item: at most one diagnostic per item, then the
// parser skips to the next ';'. Never throws on malformed input.
ParseModuleResult parseModule(std::string_view source);

// Parses a single term covering the whole input (REPL entry point).
ParseTermResult parseTerm(std::string_view source);

}  // namespace lnlfpc
