#include "lnlfpc/pretty.hpp"

#include <unordered_set>

namespace lnlfpc {

namespace {

// Surface type precedence: mu/arrow-rhs 0, lolli 1, sum 2, tensor 3, bang 4, atom 5.
int sTypeLevel(const SurfaceType& t) {
    switch (t.tag) {
        case STypeTag::Mu: return 0;
        case STypeTag::Lolli: return 1;
        case STypeTag::Sum: return 2;
        case STypeTag::Tensor: return 3;
        case STypeTag::Bang: return 4;
        case STypeTag::Name: return 5;
    }
    return 5;
}

void printSType(std::string& out, const STypeRef& t, int minLevel) {
    bool parens = sTypeLevel(*t) < minLevel;
    if (parens) out += '(';
    switch (t->tag) {
        case STypeTag::Name:
            out += t->name;
            break;
        case STypeTag::Mu:
            out += "mu ";
            out += t->name;
            out += ". ";
            printSType(out, t->left, 0);
            break;
        case STypeTag::Lolli:
            printSType(out, t->left, 2);
            out += " -o ";
            printSType(out, t->right, 0);
            break;
        case STypeTag::Sum:
            printSType(out, t->left, 2);
            out += " + ";
            printSType(out, t->right, 3);
            break;
        case STypeTag::Tensor:
            printSType(out, t->left, 3);
            out += " * ";
            printSType(out, t->right, 4);
            break;
        case STypeTag::Bang:
            out += '!';
            printSType(out, t->left, 4);
            break;
    }
    if (parens) out += ')';
}

// Surface term precedence: binder forms 0, application 1, prefix 2, atom 3.
int sTermLevel(const SurfaceTerm& t) {
    switch (t.tag) {
        case STermTag::Lam:
        case STermTag::Rec:
        case STermTag::Case:
        case STermTag::LetPair:
            return 0;
        case STermTag::App:
            return 1;
        case STermTag::Left:
        case STermTag::Right:
        case STermTag::Fold:
        case STermTag::Unfold:
        case STermTag::Lift:
        case STermTag::Force:
            return 2;
        default:
            return 3;
    }
}

void printSTerm(std::string& out, const STermRef& t, int minLevel) {
    bool parens = sTermLevel(*t) < minLevel;
    if (parens) out += '(';
    switch (t->tag) {
        case STermTag::Name:
            out += t->name;
            break;
        case STermTag::Nat:
            out += std::to_string(t->natValue);
            break;
        case STermTag::Lam:
        case STermTag::Rec:
            out += t->tag == STermTag::Lam ? "\\" : "rec ";
            out += t->name;
            out += " : ";
            printSType(out, t->typeA, 0);
            out += ". ";
            printSTerm(out, t->sub0, 0);
            break;
        case STermTag::Case:
            out += "case ";
            printSTerm(out, t->sub0, 0);
            out += " of { left ";
            out += t->name;
            out += " -> ";
            printSTerm(out, t->sub1, 0);
            out += " | right ";
            out += t->name2;
            out += " -> ";
            printSTerm(out, t->sub2, 0);
            out += " }";
            break;
        case STermTag::LetPair:
            out += "let <";
            out += t->name;
            out += ", ";
            out += t->name2;
            out += "> = ";
            printSTerm(out, t->sub0, 0);
            out += " in ";
            printSTerm(out, t->sub1, 0);
            break;
        case STermTag::Pair:
            out += '<';
            printSTerm(out, t->sub0, 0);
            out += ", ";
            printSTerm(out, t->sub1, 0);
            out += '>';
            break;
        case STermTag::App:
            printSTerm(out, t->sub0, 1);
            out += ' ';
            // Binder-form arguments are always parenthesized so that nothing
            // after them can be swallowed on reparse.
            printSTerm(out, t->sub1, sTermLevel(*t->sub1) == 0 ? 3 : 2);
            break;
        case STermTag::Left:
        case STermTag::Right:
            out += t->tag == STermTag::Left ? "left[" : "right[";
            printSType(out, t->typeA, 0);
            out += ", ";
            printSType(out, t->typeB, 0);
            out += "] ";
            printSTerm(out, t->sub0, sTermLevel(*t->sub0) == 0 ? 3 : 2);
            break;
        case STermTag::Fold:
            out += "fold[";
            printSType(out, t->typeA, 0);
            out += "] ";
            printSTerm(out, t->sub0, sTermLevel(*t->sub0) == 0 ? 3 : 2);
            break;
        case STermTag::Unfold:
        case STermTag::Lift:
        case STermTag::Force:
            out += t->tag == STermTag::Unfold ? "unfold " : t->tag == STermTag::Lift ? "lift " : "force ";
            printSTerm(out, t->sub0, sTermLevel(*t->sub0) == 0 ? 3 : 2);
            break;
    }
    if (parens) out += ')';
}

bool isKeywordName(const std::string& s) {
    static const std::unordered_set<std::string> kws = {
        "mu",   "rec",    "case", "of",    "left", "right", "let", "in",
        "fold", "unfold", "lift", "force", "type", "def",   "main"};
    return kws.count(s) > 0;
}

std::string freshName(const std::string& hint, const std::vector<std::string>& scope) {
    std::string base = hint;
    if (base.empty()) base = "x";
    if (isKeywordName(base)) base += '_';
    std::string candidate = base;
    int counter = 0;
    auto taken = [&](const std::string& n) {
        for (const auto& s : scope)
            if (s == n) return true;
        return false;
    };
    while (taken(candidate)) candidate = base + std::to_string(counter++);
    return candidate;
}

// Core -> surface conversion, inventing binder names from hints.
STypeRef coreTypeToSurface(const TypeRef& ty, std::vector<std::string>& scope) {
    switch (ty->tag) {
        case TypeTag::TVar: {
            uint32_t i = ty->varIndex;
            if (i < scope.size()) return sName(scope[scope.size() - 1 - i]);
            return sName("T" + std::to_string(i - scope.size()));  // free; diagnostics only
        }
        case TypeTag::Sum:
            return sSum(coreTypeToSurface(ty->left, scope), coreTypeToSurface(ty->right, scope));
        case TypeTag::Tensor:
            return sTensor(coreTypeToSurface(ty->left, scope), coreTypeToSurface(ty->right, scope));
        case TypeTag::Lolli:
            return sLolli(coreTypeToSurface(ty->left, scope), coreTypeToSurface(ty->right, scope));
        case TypeTag::Bang:
            return sBang(coreTypeToSurface(ty->left, scope));
        case TypeTag::Mu: {
            std::string name = freshName(ty->nameHint.empty() ? "X" : ty->nameHint, scope);
            scope.push_back(name);
            STypeRef body = coreTypeToSurface(ty->left, scope);
            scope.pop_back();
            return sMu(std::move(name), std::move(body));
        }
    }
    return sName("?");
}

STermRef coreTermToSurface(const TermRef& t, std::vector<std::string>& termScope,
                           std::vector<std::string>& typeScope) {
    auto ty = [&](const TypeRef& x) { return coreTypeToSurface(x, typeScope); };
    switch (t->tag) {
        case TermTag::Var: {
            uint32_t i = t->varIndex;
            if (i < termScope.size()) return stName(termScope[termScope.size() - 1 - i]);
            return stName("v" + std::to_string(i - termScope.size()));
        }
        case TermTag::Left:
            return stLeft(ty(t->annotA), ty(t->annotB), coreTermToSurface(t->child0, termScope, typeScope));
        case TermTag::Right:
            return stRight(ty(t->annotA), ty(t->annotB), coreTermToSurface(t->child0, termScope, typeScope));
        case TermTag::Case: {
            STermRef scr = coreTermToSurface(t->child0, termScope, typeScope);
            std::string ln = freshName(t->hint, termScope);
            termScope.push_back(ln);
            STermRef lb = coreTermToSurface(t->child1, termScope, typeScope);
            termScope.pop_back();
            std::string rn = freshName(t->hint2, termScope);
            termScope.push_back(rn);
            STermRef rb = coreTermToSurface(t->child2, termScope, typeScope);
            termScope.pop_back();
            return stCase(std::move(scr), std::move(ln), std::move(lb), std::move(rn), std::move(rb));
        }
        case TermTag::Pair:
            return stPair(coreTermToSurface(t->child0, termScope, typeScope),
                          coreTermToSurface(t->child1, termScope, typeScope));
        case TermTag::LetPair: {
            STermRef scr = coreTermToSurface(t->child0, termScope, typeScope);
            std::string n1 = freshName(t->hint, termScope);
            termScope.push_back(n1);
            std::string n2 = freshName(t->hint2, termScope);
            termScope.push_back(n2);
            STermRef body = coreTermToSurface(t->child1, termScope, typeScope);
            termScope.pop_back();
            termScope.pop_back();
            return stLetPair(std::move(scr), std::move(n1), std::move(n2), std::move(body));
        }
        case TermTag::Lam: {
            std::string n = freshName(t->hint, termScope);
            STypeRef annot = ty(t->annotA);
            termScope.push_back(n);
            STermRef body = coreTermToSurface(t->child0, termScope, typeScope);
            termScope.pop_back();
            return stLam(std::move(n), std::move(annot), std::move(body));
        }
        case TermTag::App:
            return stApp(coreTermToSurface(t->child0, termScope, typeScope),
                         coreTermToSurface(t->child1, termScope, typeScope));
        case TermTag::Lift:
            return stLift(coreTermToSurface(t->child0, termScope, typeScope));
        case TermTag::Force:
            return stForce(coreTermToSurface(t->child0, termScope, typeScope));
        case TermTag::Fold:
            return stFold(ty(t->annotA), coreTermToSurface(t->child0, termScope, typeScope));
        case TermTag::Unfold:
            return stUnfold(coreTermToSurface(t->child0, termScope, typeScope));
    }
    return stName("?");
}

}  // namespace

std::string printSurfaceType(const STypeRef& ty) {
    std::string out;
    printSType(out, ty, 0);
    return out;
}

std::string printSurfaceTerm(const STermRef& t) {
    std::string out;
    printSTerm(out, t, 0);
    return out;
}

std::string printCoreType(const TypeRef& ty) {
    std::vector<std::string> scope;
    return printSurfaceType(coreTypeToSurface(ty, scope));
}

std::string printCoreTerm(const TermRef& t) {
    std::vector<std::string> termScope, typeScope;
    return printSurfaceTerm(coreTermToSurface(t, termScope, typeScope));
}

}  // namespace lnlfpc
