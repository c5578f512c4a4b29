#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lnlfpc/diagnostics.hpp"

namespace lnlfpc {

struct SurfaceType;
struct SurfaceTerm;
using STypeRef = std::shared_ptr<const SurfaceType>;
using STermRef = std::shared_ptr<const SurfaceTerm>;

enum class STypeTag : uint8_t { Name, Sum, Tensor, Lolli, Bang, Mu };

// Named (pre-De-Bruijn) type syntax as written in source.
struct SurfaceType {
    STypeTag tag;
    Span span;
    std::string name;  // Name: identifier; Mu: binder
    STypeRef left;     // Sum/Tensor/Lolli left, Bang/Mu body
    STypeRef right;
};

enum class STermTag : uint8_t {
    Name,
    Nat,
    Lam,
    Rec,
    Case,
    LetPair,
    Pair,
    App,
    Left,
    Right,
    Fold,
    Unfold,
    Lift,
    Force,
};

struct SurfaceTerm {
    STermTag tag;
    Span span;
    std::string name;   // Name ident; Lam/Rec binder; Case left binder; LetPair first binder
    std::string name2;  // Case right binder; LetPair second binder
    uint64_t natValue = 0;
    STypeRef typeA;  // Lam/Rec annotation; Left/Right first annot; Fold annot
    STypeRef typeB;  // Left/Right second annot
    STermRef sub0;   // primary subterm
    STermRef sub1;   // Case left branch; LetPair body; Pair second; App argument
    STermRef sub2;   // Case right branch
};

struct SurfaceAlias {
    std::string name;
    Span span;
    STypeRef body;  // aliases are closed: no parameters
};

struct SurfaceDef {
    std::string name;
    Span span;
    STypeRef annot;
    STermRef body;
};

struct SurfaceModule {
    std::vector<SurfaceAlias> aliases;
    std::vector<SurfaceDef> defs;
    std::optional<STermRef> main;
    Span mainSpan;
};

// Structural equality ignoring spans (used by round-trip tests).
bool surfaceTypeEq(const STypeRef& a, const STypeRef& b);
bool surfaceTermEq(const STermRef& a, const STermRef& b);

// Constructors.
STypeRef sName(std::string name, Span span = {});
STypeRef sSum(STypeRef a, STypeRef b, Span span = {});
STypeRef sTensor(STypeRef a, STypeRef b, Span span = {});
STypeRef sLolli(STypeRef a, STypeRef b, Span span = {});
STypeRef sBang(STypeRef a, Span span = {});
STypeRef sMu(std::string name, STypeRef body, Span span = {});

STermRef stName(std::string name, Span span = {});
STermRef stNat(uint64_t value, Span span = {});
STermRef stLam(std::string name, STypeRef annot, STermRef body, Span span = {});
STermRef stRec(std::string name, STypeRef annot, STermRef body, Span span = {});
STermRef stCase(STermRef scrutinee, std::string ln, STermRef lb, std::string rn, STermRef rb,
                Span span = {});
STermRef stLetPair(STermRef scrutinee, std::string n1, std::string n2, STermRef body,
                   Span span = {});
STermRef stPair(STermRef a, STermRef b, Span span = {});
STermRef stApp(STermRef f, STermRef a, Span span = {});
STermRef stLeft(STypeRef a, STypeRef b, STermRef m, Span span = {});
STermRef stRight(STypeRef a, STypeRef b, STermRef m, Span span = {});
STermRef stFold(STypeRef t, STermRef m, Span span = {});
STermRef stUnfold(STermRef m, Span span = {});
STermRef stLift(STermRef m, Span span = {});
STermRef stForce(STermRef m, Span span = {});

}  // namespace lnlfpc
