#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lnlfpc {

class CoreType;
class CoreTerm;
using TypeRef = std::shared_ptr<const CoreType>;
using TermRef = std::shared_ptr<const CoreTerm>;

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

enum class TypeTag : uint8_t { TVar, Sum, Tensor, Lolli, Bang, Mu };

// De Bruijn representation of a type. Index 0 refers to the innermost mu
// binder. Nodes are immutable and freely shared; structural properties are
// cached at construction so closedness and linearity queries are O(1).
class CoreType {
public:
    TypeTag tag;
    uint32_t varIndex = 0;   // TVar
    std::string nameHint;    // Mu binder name, diagnostics only
    TypeRef left;            // Sum/Tensor/Lolli left, Bang/Mu body
    TypeRef right;           // Sum/Tensor/Lolli right

    // 1 + largest free De Bruijn index (0 for closed types).
    uint32_t freeBound = 0;
    // Membership in the non-linear grammar P ::= X | P+R | P⊗R | !A | mu X.P.
    bool nonLinear = false;

    const TypeRef& body() const { return left; }
};

TypeRef tvar(uint32_t index);
TypeRef sumType(TypeRef a, TypeRef b);
TypeRef tensorType(TypeRef a, TypeRef b);
TypeRef lolliType(TypeRef domain, TypeRef codomain);
TypeRef bangType(TypeRef body);
TypeRef muType(std::string nameHint, TypeRef body);

// true iff every free type variable has index < contextLen.
bool wellFormedType(const TypeRef& ty, uint32_t contextLen);

// Non-linear classifier: values of such types may be copied and discarded.
bool isNonLinear(const TypeRef& ty);
inline bool isLinearType(const TypeRef& ty) { return !isNonLinear(ty); }

// Structural equality on De Bruijn form; name hints never participate.
bool typeEq(const TypeRef& a, const TypeRef& b);

// Shift free indices >= cutoff by amount.
TypeRef shiftType(const TypeRef& ty, uint32_t amount, uint32_t cutoff = 0);

// Substitute `replacement` for index 0 of `body` (the scope of a just-removed
// binder); remaining free indices are decremented. Capture avoidance is index
// arithmetic, so the operation is total on well-formed inputs.
TypeRef substType(const TypeRef& body, const TypeRef& replacement);

// For ty = mu X. A, the one-step unrolling A[mu X.A / X]. Requires tag == Mu.
TypeRef unrollMu(const TypeRef& ty);

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

enum class TermTag : uint8_t {
    Var,
    Left,
    Right,
    Case,
    Pair,
    LetPair,
    Lam,
    App,
    Lift,
    Force,
    Fold,
    Unfold,
};

// De Bruijn term. Field use by tag:
//   Var      varIndex, hint
//   Left     annotA, annotB, child0                      left[A,B] m, m : A
//   Right    annotA, annotB, child0                      right[A,B] m, m : B
//   Case     child0 scrutinee, hint/child1 left branch, hint2/child2 right
//            branch; each branch binds one variable at index 0
//   Pair     child0, child1
//   LetPair  child0 scrutinee, hint/hint2 binders, child1 body; the first
//            component is bound at index 1, the second at index 0
//   Lam      hint, annotA domain, child0 body
//   App      child0 function, child1 argument
//   Lift     child0
//   Force    child0
//   Fold     annotA (always a Mu type), child0
//   Unfold   child0
class CoreTerm {
public:
    TermTag tag;
    uint32_t varIndex = 0;
    std::string hint;
    std::string hint2;
    TypeRef annotA;
    TypeRef annotB;
    TermRef child0;
    TermRef child1;
    TermRef child2;

    uint32_t freeBound = 0;  // 1 + largest free term index
    bool valueFlag = false;  // membership in the value grammar
    uint64_t nodeCount = 1;  // term nodes in this subtree (annotations excluded)
};

TermRef var(uint32_t index, std::string hint = "");
TermRef leftTerm(TypeRef annotLeft, TypeRef annotRight, TermRef body);
TermRef rightTerm(TypeRef annotLeft, TypeRef annotRight, TermRef body);
TermRef caseTerm(TermRef scrutinee, std::string leftHint, TermRef leftBranch,
                 std::string rightHint, TermRef rightBranch);
TermRef pairTerm(TermRef first, TermRef second);
TermRef letPairTerm(TermRef scrutinee, std::string hint1, std::string hint2, TermRef body);
TermRef lamTerm(std::string hint, TypeRef annot, TermRef body);
TermRef appTerm(TermRef fn, TermRef arg);
TermRef liftTerm(TermRef body);
TermRef forceTerm(TermRef body);
// Throws std::invalid_argument unless annot is a Mu type.
TermRef foldTerm(TypeRef annot, TermRef body);
TermRef unfoldTerm(TermRef body);

// Value grammar: x | left v | right v | <v,w> | \x.m | lift m | fold v.
inline bool isValue(const TermRef& m) { return m->valueFlag; }

inline bool isClosedTerm(const TermRef& m) { return m->freeBound == 0; }

// Structural equality ignoring name hints (α-equivalence on De Bruijn form).
// Iterative; safe on very deep values.
bool termEq(const TermRef& a, const TermRef& b);

// Shift free indices >= cutoff by amount.
TermRef shiftTerm(const TermRef& t, uint32_t amount, uint32_t cutoff = 0);

// Substitute `value` for term index 0 of `body`; free indices above it are
// decremented and `value` is shifted as it crosses binders. Type annotations
// are untouched. Correct for open `value` via shifting.
TermRef substTerm(const TermRef& body, const TermRef& value);

// Indices of free variables of t, ascending.
std::vector<uint32_t> freeTermVars(const TermRef& t);

}  // namespace lnlfpc
