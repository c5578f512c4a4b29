#include "lnlfpc/surface.hpp"

namespace lnlfpc {

namespace {

STypeRef mkType(SurfaceType&& t) { return std::make_shared<const SurfaceType>(std::move(t)); }
STermRef mkTerm(SurfaceTerm&& t) { return std::make_shared<const SurfaceTerm>(std::move(t)); }

}  // namespace

STypeRef sName(std::string name, Span span) {
    SurfaceType t;
    t.tag = STypeTag::Name;
    t.span = span;
    t.name = std::move(name);
    return mkType(std::move(t));
}

static STypeRef sBinary(STypeTag tag, STypeRef a, STypeRef b, Span span) {
    SurfaceType t;
    t.tag = tag;
    t.span = span;
    t.left = std::move(a);
    t.right = std::move(b);
    return mkType(std::move(t));
}

STypeRef sSum(STypeRef a, STypeRef b, Span span) { return sBinary(STypeTag::Sum, std::move(a), std::move(b), span); }
STypeRef sTensor(STypeRef a, STypeRef b, Span span) { return sBinary(STypeTag::Tensor, std::move(a), std::move(b), span); }
STypeRef sLolli(STypeRef a, STypeRef b, Span span) { return sBinary(STypeTag::Lolli, std::move(a), std::move(b), span); }

STypeRef sBang(STypeRef a, Span span) {
    SurfaceType t;
    t.tag = STypeTag::Bang;
    t.span = span;
    t.left = std::move(a);
    return mkType(std::move(t));
}

STypeRef sMu(std::string name, STypeRef body, Span span) {
    SurfaceType t;
    t.tag = STypeTag::Mu;
    t.span = span;
    t.name = std::move(name);
    t.left = std::move(body);
    return mkType(std::move(t));
}

STermRef stName(std::string name, Span span) {
    SurfaceTerm t;
    t.tag = STermTag::Name;
    t.span = span;
    t.name = std::move(name);
    return mkTerm(std::move(t));
}

STermRef stNat(uint64_t value, Span span) {
    SurfaceTerm t;
    t.tag = STermTag::Nat;
    t.span = span;
    t.natValue = value;
    return mkTerm(std::move(t));
}

static STermRef stBinder(STermTag tag, std::string name, STypeRef annot, STermRef body, Span span) {
    SurfaceTerm t;
    t.tag = tag;
    t.span = span;
    t.name = std::move(name);
    t.typeA = std::move(annot);
    t.sub0 = std::move(body);
    return mkTerm(std::move(t));
}

STermRef stLam(std::string name, STypeRef annot, STermRef body, Span span) {
    return stBinder(STermTag::Lam, std::move(name), std::move(annot), std::move(body), span);
}

STermRef stRec(std::string name, STypeRef annot, STermRef body, Span span) {
    return stBinder(STermTag::Rec, std::move(name), std::move(annot), std::move(body), span);
}

STermRef stCase(STermRef scrutinee, std::string ln, STermRef lb, std::string rn, STermRef rb, Span span) {
    SurfaceTerm t;
    t.tag = STermTag::Case;
    t.span = span;
    t.name = std::move(ln);
    t.name2 = std::move(rn);
    t.sub0 = std::move(scrutinee);
    t.sub1 = std::move(lb);
    t.sub2 = std::move(rb);
    return mkTerm(std::move(t));
}

STermRef stLetPair(STermRef scrutinee, std::string n1, std::string n2, STermRef body, Span span) {
    SurfaceTerm t;
    t.tag = STermTag::LetPair;
    t.span = span;
    t.name = std::move(n1);
    t.name2 = std::move(n2);
    t.sub0 = std::move(scrutinee);
    t.sub1 = std::move(body);
    return mkTerm(std::move(t));
}

STermRef stPair(STermRef a, STermRef b, Span span) {
    SurfaceTerm t;
    t.tag = STermTag::Pair;
    t.span = span;
    t.sub0 = std::move(a);
    t.sub1 = std::move(b);
    return mkTerm(std::move(t));
}

STermRef stApp(STermRef f, STermRef a, Span span) {
    SurfaceTerm t;
    t.tag = STermTag::App;
    t.span = span;
    t.sub0 = std::move(f);
    t.sub1 = std::move(a);
    return mkTerm(std::move(t));
}

static STermRef stInj(STermTag tag, STypeRef a, STypeRef b, STermRef m, Span span) {
    SurfaceTerm t;
    t.tag = tag;
    t.span = span;
    t.typeA = std::move(a);
    t.typeB = std::move(b);
    t.sub0 = std::move(m);
    return mkTerm(std::move(t));
}

STermRef stLeft(STypeRef a, STypeRef b, STermRef m, Span span) {
    return stInj(STermTag::Left, std::move(a), std::move(b), std::move(m), span);
}

STermRef stRight(STypeRef a, STypeRef b, STermRef m, Span span) {
    return stInj(STermTag::Right, std::move(a), std::move(b), std::move(m), span);
}

STermRef stFold(STypeRef ty, STermRef m, Span span) {
    SurfaceTerm t;
    t.tag = STermTag::Fold;
    t.span = span;
    t.typeA = std::move(ty);
    t.sub0 = std::move(m);
    return mkTerm(std::move(t));
}

static STermRef stUnary(STermTag tag, STermRef m, Span span) {
    SurfaceTerm t;
    t.tag = tag;
    t.span = span;
    t.sub0 = std::move(m);
    return mkTerm(std::move(t));
}

STermRef stUnfold(STermRef m, Span span) { return stUnary(STermTag::Unfold, std::move(m), span); }
STermRef stLift(STermRef m, Span span) { return stUnary(STermTag::Lift, std::move(m), span); }
STermRef stForce(STermRef m, Span span) { return stUnary(STermTag::Force, std::move(m), span); }

bool surfaceTypeEq(const STypeRef& a, const STypeRef& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->tag != b->tag) return false;
    switch (a->tag) {
        case STypeTag::Name:
            return a->name == b->name;
        case STypeTag::Mu:
            return a->name == b->name && surfaceTypeEq(a->left, b->left);
        case STypeTag::Bang:
            return surfaceTypeEq(a->left, b->left);
        default:
            return surfaceTypeEq(a->left, b->left) && surfaceTypeEq(a->right, b->right);
    }
}

bool surfaceTermEq(const STermRef& a, const STermRef& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->tag != b->tag) return false;
    if (a->name != b->name || a->name2 != b->name2 || a->natValue != b->natValue) return false;
    if (!!a->typeA != !!b->typeA || (a->typeA && !surfaceTypeEq(a->typeA, b->typeA))) return false;
    if (!!a->typeB != !!b->typeB || (a->typeB && !surfaceTypeEq(a->typeB, b->typeB))) return false;
    const std::pair<const STermRef*, const STermRef*> subs[3] = {
        {&a->sub0, &b->sub0}, {&a->sub1, &b->sub1}, {&a->sub2, &b->sub2}};
    for (auto [x, y] : subs) {
        if (!!*x != !!*y) return false;
        if (*x && !surfaceTermEq(*x, *y)) return false;
    }
    return true;
}

}  // namespace lnlfpc
