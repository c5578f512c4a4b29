#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnlfpc/diagnostics.hpp"
#include "lnlfpc/elaborate.hpp"
#include "lnlfpc/syntax.hpp"

namespace lnlfpc {

struct ContextEntry {
    std::string nameHint;
    TypeRef type;
};

// Ordered typing context; entries[0] is the innermost binder, matching term
// De Bruijn indices.
using TypingContext = std::vector<ContextEntry>;

// Context extended with one inner binder.
TypingContext extendContext(const TypingContext& ctx, std::string hint, TypeRef type);

// Indices of linear context entries consumed by a subterm, kept sorted.
// Non-linear variables are never tracked: they may be shared and dropped
// freely, which realizes implicit contraction and weakening.
class UseSet {
public:
    bool contains(uint32_t index) const;
    void insert(uint32_t index);
    bool disjointWith(const UseSet& other) const;
    static UseSet unionOf(const UseSet& a, const UseSet& b);  // callers ensure disjoint
    // Drops indices < binders and shifts the rest down (leaving a binder scope).
    UseSet stripBinders(uint32_t binders) const;
    bool operator==(const UseSet& other) const { return elems_ == other.elems_; }
    bool empty() const { return elems_.empty(); }
    size_t size() const { return elems_.size(); }
    const std::vector<uint32_t>& indices() const { return elems_; }

private:
    std::vector<uint32_t> elems_;
};

// Every linear index of ctx (what a complete judgement must consume).
UseSet allLinearIndices(const TypingContext& ctx);

struct SynthResult {
    TypeRef type;
    UseSet uses;
};

// Synthesizes the unique type of an elaborated core term together with the
// set of linear variables it consumes. One clause per formation rule;
// deterministic.
Result<SynthResult> synth(const TypingContext& ctx, const TermRef& term);

// Full judgement: synth succeeds at expected (up to typeEq) and every linear
// variable of ctx is consumed exactly once. Empty optional means accept.
std::optional<Diagnostic> checkJudgement(const TypingContext& ctx, const TermRef& term,
                                         const TypeRef& expected);

struct CheckedProgram {
    std::vector<std::pair<std::string, TypeRef>> defTypes;
    std::optional<TypeRef> mainType;
    std::vector<Diagnostic> diagnostics;  // first failure per definition
    bool ok() const { return diagnostics.empty(); }
};

// Checks every definition body against its declared type in the empty
// context and synthesizes the type of main when present.
CheckedProgram checkProgram(const CoreProgram& prog);

}  // namespace lnlfpc
