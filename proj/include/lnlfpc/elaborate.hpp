#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lnlfpc/diagnostics.hpp"
#include "lnlfpc/surface.hpp"
#include "lnlfpc/syntax.hpp"

namespace lnlfpc {

struct CoreDef {
    std::string name;
    TypeRef declaredType;
    TermRef body;  // closed, alias-free, rec-free
    Span span;
    std::string origin;  // source label, e.g. "prelude" or a file name
};

struct CoreProgram {
    std::vector<CoreDef> defs;
    TermRef main;  // null when absent
    Span mainSpan;
    bool hasMain() const { return main != nullptr; }
};

// One desugared `rec` occurrence, kept for the metatheory suites.
struct RecInstance {
    std::string defName;
    // Types of enclosing term binders, innermost first; entries are empty for
    // binders whose type is not known at elaboration time (case/let binders).
    std::vector<TypeRef> binderTypes;
    bool contextKnown = true;  // all binderTypes present
    TypeRef annot;             // the full !A annotation
    TermRef body;              // core body with the rec variable at index 0
    TermRef desugared;
};

// Name scope threaded through elaboration: closed alias and definition
// tables, populated module by module (prelude first, then the user file).
class ElabEnv {
public:
    bool hasAlias(const std::string& name) const { return aliases_.count(name) > 0; }
    const TypeRef* alias(const std::string& name) const {
        auto it = aliases_.find(name);
        return it == aliases_.end() ? nullptr : &it->second;
    }
    void addAlias(const std::string& name, TypeRef ty) { aliases_.emplace(name, std::move(ty)); }

    const TermRef* def(const std::string& name) const {
        auto it = defs_.find(name);
        return it == defs_.end() ? nullptr : &it->second;
    }
    const TypeRef* defType(const std::string& name) const {
        auto it = defTypes_.find(name);
        return it == defTypes_.end() ? nullptr : &it->second;
    }
    void addDef(const std::string& name, TermRef body, TypeRef declared) {
        defs_.emplace(name, std::move(body));
        defTypes_.emplace(name, std::move(declared));
    }

    // Alias names of the module currently being elaborated that have not been
    // reached yet; referencing one is a forward reference (treated as a cycle).
    std::unordered_set<std::string> pendingAliases;

private:
    std::unordered_map<std::string, TypeRef> aliases_;
    std::unordered_map<std::string, TermRef> defs_;
    std::unordered_map<std::string, TypeRef> defTypes_;
};

// The derived fixpoint encoding: for rec z : !A. m, with R = mu X. (!X -o A),
//
//   alpha = lift fold \x : !R. (\z : !A. m) (lift (unfold force x) x)
//   result = (unfold force alpha) alpha
//
// Both alpha occurrences are the same subtree. Throws std::invalid_argument
// unless annot is a Bang type; elaboration reports that as E-REC-ANNOT.
TermRef desugarRec(const std::string& hint, const TypeRef& annot, const TermRef& body);

// Numeral expansion relative to the aliases in scope (requires Nat, I, Void).
Result<TermRef> expandNumeral(uint64_t n, const ElabEnv& env, Span span);

struct ElaborateResult {
    std::vector<CoreDef> defs;
    TermRef main;  // null when the module has none
    Span mainSpan;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

// Expands aliases, inlines definition references in order, expands numerals
// and desugars rec bottom-up. Extends `env` with this module's names.
ElaborateResult elaborateModule(const SurfaceModule& mod, ElabEnv& env, const std::string& origin,
                                std::vector<RecInstance>* recSink = nullptr);

// Elaborates a standalone term against an existing scope (REPL).
Result<TermRef> elaborateTerm(const STermRef& term, const ElabEnv& env,
                              std::vector<RecInstance>* recSink = nullptr);

}  // namespace lnlfpc
