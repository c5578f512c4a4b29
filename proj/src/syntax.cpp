#include "lnlfpc/syntax.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace lnlfpc {

namespace {

uint32_t satSub(uint32_t v, uint32_t k) { return v > k ? v - k : 0; }

TypeRef makeType(CoreType&& node) {
    return std::make_shared<const CoreType>(std::move(node));
}

TermRef makeTerm(CoreTerm&& node) {
    return std::make_shared<const CoreTerm>(std::move(node));
}

}  // namespace

// ---------------------------------------------------------------------------
// Type constructors
// ---------------------------------------------------------------------------

TypeRef tvar(uint32_t index) {
    CoreType n;
    n.tag = TypeTag::TVar;
    n.varIndex = index;
    n.freeBound = index + 1;
    n.nonLinear = true;
    return makeType(std::move(n));
}

static TypeRef binaryType(TypeTag tag, TypeRef a, TypeRef b, bool nonLinear) {
    CoreType n;
    n.tag = tag;
    n.freeBound = std::max(a->freeBound, b->freeBound);
    n.nonLinear = nonLinear;
    n.left = std::move(a);
    n.right = std::move(b);
    return makeType(std::move(n));
}

TypeRef sumType(TypeRef a, TypeRef b) {
    bool nl = a->nonLinear && b->nonLinear;
    return binaryType(TypeTag::Sum, std::move(a), std::move(b), nl);
}

TypeRef tensorType(TypeRef a, TypeRef b) {
    bool nl = a->nonLinear && b->nonLinear;
    return binaryType(TypeTag::Tensor, std::move(a), std::move(b), nl);
}

TypeRef lolliType(TypeRef domain, TypeRef codomain) {
    return binaryType(TypeTag::Lolli, std::move(domain), std::move(codomain), false);
}

TypeRef bangType(TypeRef body) {
    CoreType n;
    n.tag = TypeTag::Bang;
    n.freeBound = body->freeBound;
    n.nonLinear = true;
    n.left = std::move(body);
    return makeType(std::move(n));
}

TypeRef muType(std::string nameHint, TypeRef body) {
    CoreType n;
    n.tag = TypeTag::Mu;
    n.nameHint = std::move(nameHint);
    n.freeBound = satSub(body->freeBound, 1);
    n.nonLinear = body->nonLinear;  // the bound variable itself is non-linear
    n.left = std::move(body);
    return makeType(std::move(n));
}

bool wellFormedType(const TypeRef& ty, uint32_t contextLen) {
    return ty->freeBound <= contextLen;
}

bool isNonLinear(const TypeRef& ty) { return ty->nonLinear; }

bool typeEq(const TypeRef& a, const TypeRef& b) {
    if (a.get() == b.get()) return true;
    if (a->tag != b->tag) return false;
    switch (a->tag) {
        case TypeTag::TVar:
            return a->varIndex == b->varIndex;
        case TypeTag::Bang:
        case TypeTag::Mu:
            return typeEq(a->left, b->left);
        case TypeTag::Sum:
        case TypeTag::Tensor:
        case TypeTag::Lolli:
            return typeEq(a->left, b->left) && typeEq(a->right, b->right);
    }
    return false;
}

TypeRef shiftType(const TypeRef& ty, uint32_t amount, uint32_t cutoff) {
    if (amount == 0 || ty->freeBound <= cutoff) return ty;
    switch (ty->tag) {
        case TypeTag::TVar:
            return ty->varIndex >= cutoff ? tvar(ty->varIndex + amount) : ty;
        case TypeTag::Sum:
            return sumType(shiftType(ty->left, amount, cutoff), shiftType(ty->right, amount, cutoff));
        case TypeTag::Tensor:
            return tensorType(shiftType(ty->left, amount, cutoff), shiftType(ty->right, amount, cutoff));
        case TypeTag::Lolli:
            return lolliType(shiftType(ty->left, amount, cutoff), shiftType(ty->right, amount, cutoff));
        case TypeTag::Bang:
            return bangType(shiftType(ty->left, amount, cutoff));
        case TypeTag::Mu:
            return muType(ty->nameHint, shiftType(ty->left, amount, cutoff + 1));
    }
    return ty;
}

static TypeRef substTypeAt(const TypeRef& body, const TypeRef& replacement, uint32_t depth) {
    if (body->freeBound <= depth) return body;  // target index not free here
    switch (body->tag) {
        case TypeTag::TVar:
            if (body->varIndex == depth) return shiftType(replacement, depth, 0);
            if (body->varIndex > depth) return tvar(body->varIndex - 1);
            return body;
        case TypeTag::Sum:
            return sumType(substTypeAt(body->left, replacement, depth),
                           substTypeAt(body->right, replacement, depth));
        case TypeTag::Tensor:
            return tensorType(substTypeAt(body->left, replacement, depth),
                              substTypeAt(body->right, replacement, depth));
        case TypeTag::Lolli:
            return lolliType(substTypeAt(body->left, replacement, depth),
                             substTypeAt(body->right, replacement, depth));
        case TypeTag::Bang:
            return bangType(substTypeAt(body->left, replacement, depth));
        case TypeTag::Mu:
            return muType(body->nameHint, substTypeAt(body->left, replacement, depth + 1));
    }
    return body;
}

TypeRef substType(const TypeRef& body, const TypeRef& replacement) {
    return substTypeAt(body, replacement, 0);
}

TypeRef unrollMu(const TypeRef& ty) {
    if (ty->tag != TypeTag::Mu) throw std::invalid_argument("unrollMu: not a mu type");
    return substType(ty->left, ty);
}

// ---------------------------------------------------------------------------
// Term constructors
// ---------------------------------------------------------------------------

TermRef var(uint32_t index, std::string hint) {
    CoreTerm n;
    n.tag = TermTag::Var;
    n.varIndex = index;
    n.hint = std::move(hint);
    n.freeBound = index + 1;
    n.valueFlag = true;
    return makeTerm(std::move(n));
}

static TermRef injection(TermTag tag, TypeRef a, TypeRef b, TermRef body) {
    CoreTerm n;
    n.tag = tag;
    n.annotA = std::move(a);
    n.annotB = std::move(b);
    n.freeBound = body->freeBound;
    n.valueFlag = body->valueFlag;
    n.nodeCount = 1 + body->nodeCount;
    n.child0 = std::move(body);
    return makeTerm(std::move(n));
}

TermRef leftTerm(TypeRef annotLeft, TypeRef annotRight, TermRef body) {
    return injection(TermTag::Left, std::move(annotLeft), std::move(annotRight), std::move(body));
}

TermRef rightTerm(TypeRef annotLeft, TypeRef annotRight, TermRef body) {
    return injection(TermTag::Right, std::move(annotLeft), std::move(annotRight), std::move(body));
}

TermRef caseTerm(TermRef scrutinee, std::string leftHint, TermRef leftBranch,
                 std::string rightHint, TermRef rightBranch) {
    CoreTerm n;
    n.tag = TermTag::Case;
    n.hint = std::move(leftHint);
    n.hint2 = std::move(rightHint);
    n.freeBound = std::max(scrutinee->freeBound,
                           std::max(satSub(leftBranch->freeBound, 1), satSub(rightBranch->freeBound, 1)));
    n.valueFlag = false;
    n.nodeCount = 1 + scrutinee->nodeCount + leftBranch->nodeCount + rightBranch->nodeCount;
    n.child0 = std::move(scrutinee);
    n.child1 = std::move(leftBranch);
    n.child2 = std::move(rightBranch);
    return makeTerm(std::move(n));
}

TermRef pairTerm(TermRef first, TermRef second) {
    CoreTerm n;
    n.tag = TermTag::Pair;
    n.freeBound = std::max(first->freeBound, second->freeBound);
    n.valueFlag = first->valueFlag && second->valueFlag;
    n.nodeCount = 1 + first->nodeCount + second->nodeCount;
    n.child0 = std::move(first);
    n.child1 = std::move(second);
    return makeTerm(std::move(n));
}

TermRef letPairTerm(TermRef scrutinee, std::string hint1, std::string hint2, TermRef body) {
    CoreTerm n;
    n.tag = TermTag::LetPair;
    n.hint = std::move(hint1);
    n.hint2 = std::move(hint2);
    n.freeBound = std::max(scrutinee->freeBound, satSub(body->freeBound, 2));
    n.valueFlag = false;
    n.nodeCount = 1 + scrutinee->nodeCount + body->nodeCount;
    n.child0 = std::move(scrutinee);
    n.child1 = std::move(body);
    return makeTerm(std::move(n));
}

TermRef lamTerm(std::string hint, TypeRef annot, TermRef body) {
    CoreTerm n;
    n.tag = TermTag::Lam;
    n.hint = std::move(hint);
    n.annotA = std::move(annot);
    n.freeBound = satSub(body->freeBound, 1);
    n.valueFlag = true;  // lambdas wrap arbitrary bodies
    n.nodeCount = 1 + body->nodeCount;
    n.child0 = std::move(body);
    return makeTerm(std::move(n));
}

TermRef appTerm(TermRef fn, TermRef arg) {
    CoreTerm n;
    n.tag = TermTag::App;
    n.freeBound = std::max(fn->freeBound, arg->freeBound);
    n.valueFlag = false;
    n.nodeCount = 1 + fn->nodeCount + arg->nodeCount;
    n.child0 = std::move(fn);
    n.child1 = std::move(arg);
    return makeTerm(std::move(n));
}

TermRef liftTerm(TermRef body) {
    CoreTerm n;
    n.tag = TermTag::Lift;
    n.freeBound = body->freeBound;
    n.valueFlag = true;  // lift suspends an arbitrary term
    n.nodeCount = 1 + body->nodeCount;
    n.child0 = std::move(body);
    return makeTerm(std::move(n));
}

TermRef forceTerm(TermRef body) {
    CoreTerm n;
    n.tag = TermTag::Force;
    n.freeBound = body->freeBound;
    n.valueFlag = false;
    n.nodeCount = 1 + body->nodeCount;
    n.child0 = std::move(body);
    return makeTerm(std::move(n));
}

TermRef foldTerm(TypeRef annot, TermRef body) {
    if (!annot || annot->tag != TypeTag::Mu)
        throw std::invalid_argument("foldTerm: annotation must be a mu type");
    CoreTerm n;
    n.tag = TermTag::Fold;
    n.annotA = std::move(annot);
    n.freeBound = body->freeBound;
    n.valueFlag = body->valueFlag;
    n.nodeCount = 1 + body->nodeCount;
    n.child0 = std::move(body);
    return makeTerm(std::move(n));
}

TermRef unfoldTerm(TermRef body) {
    CoreTerm n;
    n.tag = TermTag::Unfold;
    n.freeBound = body->freeBound;
    n.valueFlag = false;
    n.nodeCount = 1 + body->nodeCount;
    n.child0 = std::move(body);
    return makeTerm(std::move(n));
}

// ---------------------------------------------------------------------------
// Term operations
// ---------------------------------------------------------------------------

bool termEq(const TermRef& a, const TermRef& b) {
    // Explicit work list: result values can be arbitrarily deep.
    std::vector<std::pair<const CoreTerm*, const CoreTerm*>> work;
    work.emplace_back(a.get(), b.get());
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (x == y) continue;
        if (x->tag != y->tag) return false;
        if (x->freeBound != y->freeBound || x->nodeCount != y->nodeCount) return false;
        switch (x->tag) {
            case TermTag::Var:
                if (x->varIndex != y->varIndex) return false;
                break;
            case TermTag::Left:
            case TermTag::Right:
                if (!typeEq(x->annotA, y->annotA) || !typeEq(x->annotB, y->annotB)) return false;
                work.emplace_back(x->child0.get(), y->child0.get());
                break;
            case TermTag::Lam:
                if (!typeEq(x->annotA, y->annotA)) return false;
                work.emplace_back(x->child0.get(), y->child0.get());
                break;
            case TermTag::Fold:
                if (!typeEq(x->annotA, y->annotA)) return false;
                work.emplace_back(x->child0.get(), y->child0.get());
                break;
            case TermTag::Lift:
            case TermTag::Force:
            case TermTag::Unfold:
                work.emplace_back(x->child0.get(), y->child0.get());
                break;
            case TermTag::Pair:
            case TermTag::App:
            case TermTag::LetPair:
                work.emplace_back(x->child0.get(), y->child0.get());
                work.emplace_back(x->child1.get(), y->child1.get());
                break;
            case TermTag::Case:
                work.emplace_back(x->child0.get(), y->child0.get());
                work.emplace_back(x->child1.get(), y->child1.get());
                work.emplace_back(x->child2.get(), y->child2.get());
                break;
        }
    }
    return true;
}

// Substitution and shifting recurse over the program skeleton only: subtrees
// without the target index (in particular all closed values previously
// substituted in) are returned unchanged via the freeBound fast path, so
// recursion depth stays bounded by the static nesting of the source program.

TermRef shiftTerm(const TermRef& t, uint32_t amount, uint32_t cutoff) {
    if (amount == 0 || t->freeBound <= cutoff) return t;
    switch (t->tag) {
        case TermTag::Var:
            return t->varIndex >= cutoff ? var(t->varIndex + amount, t->hint) : t;
        case TermTag::Left:
            return leftTerm(t->annotA, t->annotB, shiftTerm(t->child0, amount, cutoff));
        case TermTag::Right:
            return rightTerm(t->annotA, t->annotB, shiftTerm(t->child0, amount, cutoff));
        case TermTag::Case:
            return caseTerm(shiftTerm(t->child0, amount, cutoff), t->hint,
                            shiftTerm(t->child1, amount, cutoff + 1), t->hint2,
                            shiftTerm(t->child2, amount, cutoff + 1));
        case TermTag::Pair:
            return pairTerm(shiftTerm(t->child0, amount, cutoff), shiftTerm(t->child1, amount, cutoff));
        case TermTag::LetPair:
            return letPairTerm(shiftTerm(t->child0, amount, cutoff), t->hint, t->hint2,
                               shiftTerm(t->child1, amount, cutoff + 2));
        case TermTag::Lam:
            return lamTerm(t->hint, t->annotA, shiftTerm(t->child0, amount, cutoff + 1));
        case TermTag::App:
            return appTerm(shiftTerm(t->child0, amount, cutoff), shiftTerm(t->child1, amount, cutoff));
        case TermTag::Lift:
            return liftTerm(shiftTerm(t->child0, amount, cutoff));
        case TermTag::Force:
            return forceTerm(shiftTerm(t->child0, amount, cutoff));
        case TermTag::Fold:
            return foldTerm(t->annotA, shiftTerm(t->child0, amount, cutoff));
        case TermTag::Unfold:
            return unfoldTerm(shiftTerm(t->child0, amount, cutoff));
    }
    return t;
}

static TermRef substTermAt(const TermRef& body, const TermRef& value, uint32_t depth) {
    if (body->freeBound <= depth) return body;
    switch (body->tag) {
        case TermTag::Var:
            if (body->varIndex == depth) return shiftTerm(value, depth, 0);
            if (body->varIndex > depth) return var(body->varIndex - 1, body->hint);
            return body;
        case TermTag::Left:
            return leftTerm(body->annotA, body->annotB, substTermAt(body->child0, value, depth));
        case TermTag::Right:
            return rightTerm(body->annotA, body->annotB, substTermAt(body->child0, value, depth));
        case TermTag::Case:
            return caseTerm(substTermAt(body->child0, value, depth), body->hint,
                            substTermAt(body->child1, value, depth + 1), body->hint2,
                            substTermAt(body->child2, value, depth + 1));
        case TermTag::Pair:
            return pairTerm(substTermAt(body->child0, value, depth),
                            substTermAt(body->child1, value, depth));
        case TermTag::LetPair:
            return letPairTerm(substTermAt(body->child0, value, depth), body->hint, body->hint2,
                               substTermAt(body->child1, value, depth + 2));
        case TermTag::Lam:
            return lamTerm(body->hint, body->annotA, substTermAt(body->child0, value, depth + 1));
        case TermTag::App:
            return appTerm(substTermAt(body->child0, value, depth),
                           substTermAt(body->child1, value, depth));
        case TermTag::Lift:
            return liftTerm(substTermAt(body->child0, value, depth));
        case TermTag::Force:
            return forceTerm(substTermAt(body->child0, value, depth));
        case TermTag::Fold:
            return foldTerm(body->annotA, substTermAt(body->child0, value, depth));
        case TermTag::Unfold:
            return unfoldTerm(substTermAt(body->child0, value, depth));
    }
    return body;
}

TermRef substTerm(const TermRef& body, const TermRef& value) {
    return substTermAt(body, value, 0);
}

static void collectFreeVars(const CoreTerm* t, uint32_t depth, std::set<uint32_t>& out) {
    if (t->freeBound <= depth) return;
    switch (t->tag) {
        case TermTag::Var:
            if (t->varIndex >= depth) out.insert(t->varIndex - depth);
            return;
        case TermTag::Case:
            collectFreeVars(t->child0.get(), depth, out);
            collectFreeVars(t->child1.get(), depth + 1, out);
            collectFreeVars(t->child2.get(), depth + 1, out);
            return;
        case TermTag::LetPair:
            collectFreeVars(t->child0.get(), depth, out);
            collectFreeVars(t->child1.get(), depth + 2, out);
            return;
        case TermTag::Lam:
            collectFreeVars(t->child0.get(), depth + 1, out);
            return;
        default:
            if (t->child0) collectFreeVars(t->child0.get(), depth, out);
            if (t->child1) collectFreeVars(t->child1.get(), depth, out);
            if (t->child2) collectFreeVars(t->child2.get(), depth, out);
            return;
    }
}

std::vector<uint32_t> freeTermVars(const TermRef& t) {
    std::set<uint32_t> s;
    collectFreeVars(t.get(), 0, s);
    return std::vector<uint32_t>(s.begin(), s.end());
}

}  // namespace lnlfpc
