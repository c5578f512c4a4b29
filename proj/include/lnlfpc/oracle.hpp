#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lnlfpc/check.hpp"
#include "lnlfpc/diagnostics.hpp"
#include "lnlfpc/syntax.hpp"

namespace lnlfpc::oracle {

// Brute-force instruments for cross-checking the main implementation. The
// typing search below is written directly from the declarative formation
// rules (nondeterministic context splitting, non-linear residue at the
// variable rule) and deliberately shares nothing with the use-set algorithm
// beyond the term/type representation.

// Unique type of a term computed from its annotations alone, ignoring
// linearity entirely. ctx holds the types of in-scope variables, innermost
// first. Returns nullopt when no type is assignable.
std::optional<TypeRef> simpleSynth(const std::vector<TypeRef>& ctx, const TermRef& term);

// True iff some declarative derivation tree of ctx |- term : type exists. The
// search enumerates, at every multi-premise rule, all assignments of the
// linear context variables to premise slots; non-linear variables are shared
// to every premise (the rules allow the non-linear part to appear in each).
// E-TOO-LARGE beyond maxSize term nodes (the search is exponential).
Result<bool> derivable(const TypingContext& ctx, const TermRef& term, const TypeRef& type,
                       uint64_t maxSize = 7);

// Number of distinct declarative derivation trees, additionally enumerating
// the placement of each non-linear variable (shared vs. treated as if
// linear). Exhibits the non-uniqueness of derivations; test instrument only.
Result<uint64_t> countDerivations(const TypingContext& ctx, const TermRef& term,
                                  const TypeRef& type, uint64_t maxSize = 7);

// All closed values of the given type discovered by structural enumeration
// over the value grammar. maxDepth bounds the number of nested fold
// constructors (the mu-unrolling depth), which is the only source of
// unbounded value structure; lift and lambda bodies are drawn from a small
// pool of closed terms plus already-enumerated values. Every returned value
// passes the declarative derivability check at the requested type.
std::vector<TermRef> enumClosedValues(const TypeRef& type, uint32_t maxDepth);

// Inverse of numeral expansion: n such that v is exactly the canonical Nat
// value for n. E-NOT-NUMERAL otherwise.
Result<uint64_t> decodeNat(const TermRef& v);

// Unrolls the canonical List Nat encoding. E-NOT-LIST otherwise.
Result<std::vector<uint64_t>> decodeListNat(const TermRef& v);

}  // namespace lnlfpc::oracle
