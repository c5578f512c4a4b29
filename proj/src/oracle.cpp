#include "lnlfpc/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lnlfpc/basis.hpp"
#include "lnlfpc/sexpr.hpp"

namespace lnlfpc::oracle {

namespace {

using TypeCtx = std::vector<TypeRef>;  // innermost first

TypeCtx pushType(const TypeCtx& ctx, const TypeRef& ty) {
    TypeCtx out;
    out.reserve(ctx.size() + 1);
    out.push_back(ty);
    out.insert(out.end(), ctx.begin(), ctx.end());
    return out;
}

}  // namespace

// -- simple-type synthesis (linearity-blind) ----------------------------------

std::optional<TypeRef> simpleSynth(const TypeCtx& ctx, const TermRef& term) {
    switch (term->tag) {
        case TermTag::Var:
            if (term->varIndex >= ctx.size()) return std::nullopt;
            return ctx[term->varIndex];
        case TermTag::Left:
        case TermTag::Right: {
            auto sub = simpleSynth(ctx, term->child0);
            if (!sub) return std::nullopt;
            const TypeRef& want = term->tag == TermTag::Left ? term->annotA : term->annotB;
            if (!typeEq(*sub, want)) return std::nullopt;
            return sumType(term->annotA, term->annotB);
        }
        case TermTag::Case: {
            auto scr = simpleSynth(ctx, term->child0);
            if (!scr || (*scr)->tag != TypeTag::Sum) return std::nullopt;
            auto lhs = simpleSynth(pushType(ctx, (*scr)->left), term->child1);
            auto rhs = simpleSynth(pushType(ctx, (*scr)->right), term->child2);
            if (!lhs || !rhs || !typeEq(*lhs, *rhs)) return std::nullopt;
            return lhs;
        }
        case TermTag::Pair: {
            auto a = simpleSynth(ctx, term->child0);
            auto b = simpleSynth(ctx, term->child1);
            if (!a || !b) return std::nullopt;
            return tensorType(*a, *b);
        }
        case TermTag::LetPair: {
            auto scr = simpleSynth(ctx, term->child0);
            if (!scr || (*scr)->tag != TypeTag::Tensor) return std::nullopt;
            return simpleSynth(pushType(pushType(ctx, (*scr)->left), (*scr)->right), term->child1);
        }
        case TermTag::Lam: {
            auto body = simpleSynth(pushType(ctx, term->annotA), term->child0);
            if (!body) return std::nullopt;
            return lolliType(term->annotA, *body);
        }
        case TermTag::App: {
            auto fn = simpleSynth(ctx, term->child0);
            auto arg = simpleSynth(ctx, term->child1);
            if (!fn || !arg || (*fn)->tag != TypeTag::Lolli) return std::nullopt;
            if (!typeEq((*fn)->left, *arg)) return std::nullopt;
            return (*fn)->right;
        }
        case TermTag::Lift: {
            auto body = simpleSynth(ctx, term->child0);
            if (!body) return std::nullopt;
            return bangType(*body);
        }
        case TermTag::Force: {
            auto body = simpleSynth(ctx, term->child0);
            if (!body || (*body)->tag != TypeTag::Bang) return std::nullopt;
            return (*body)->body();
        }
        case TermTag::Fold: {
            auto body = simpleSynth(ctx, term->child0);
            if (!body || !typeEq(*body, unrollMu(term->annotA))) return std::nullopt;
            return term->annotA;
        }
        case TermTag::Unfold: {
            auto body = simpleSynth(ctx, term->child0);
            if (!body || (*body)->tag != TypeTag::Mu) return std::nullopt;
            return unrollMu(*body);
        }
    }
    return std::nullopt;
}

// -- declarative derivation search ---------------------------------------------

namespace {

using Indices = std::vector<uint32_t>;  // sorted

struct SearchCtx {
    TypeCtx types;
    std::vector<bool> linear;
};

SearchCtx pushEntry(const SearchCtx& ctx, const TypeRef& ty) {
    SearchCtx out;
    out.types = pushType(ctx.types, ty);
    out.linear.reserve(ctx.linear.size() + 1);
    out.linear.push_back(isLinearType(ty));
    out.linear.insert(out.linear.end(), ctx.linear.begin(), ctx.linear.end());
    return out;
}

Indices shiftUp(const Indices& s, uint32_t by) {
    Indices out;
    out.reserve(s.size());
    for (uint32_t i : s) out.push_back(i + by);
    return out;
}

// `active` is the set of linear variables present in the current judgement's
// context. Splitting a context for a two-premise rule means partitioning the
// active set; non-linear variables are shared to every premise, which the
// rules permit since the non-linear part appears in each premise context.
bool deriv(const SearchCtx& ctx, const Indices& active, const TermRef& term, const TypeRef& goal) {
    switch (term->tag) {
        case TermTag::Var: {
            uint32_t i = term->varIndex;
            if (i >= ctx.types.size() || !typeEq(ctx.types[i], goal)) return false;
            // Variable rule: the residue must be non-linear, so no other
            // linear variable may be present.
            if (ctx.linear[i]) return active.size() == 1 && active[0] == i;
            return active.empty();
        }
        case TermTag::Left:
        case TermTag::Right: {
            if (goal->tag != TypeTag::Sum || !typeEq(goal->left, term->annotA) ||
                !typeEq(goal->right, term->annotB))
                return false;
            const TypeRef& sub = term->tag == TermTag::Left ? term->annotA : term->annotB;
            return deriv(ctx, active, term->child0, sub);
        }
        case TermTag::Case: {
            auto scrTy = simpleSynth(ctx.types, term->child0);
            if (!scrTy || (*scrTy)->tag != TypeTag::Sum) return false;
            const TypeRef& a = (*scrTy)->left;
            const TypeRef& b = (*scrTy)->right;
            SearchCtx lctx = pushEntry(ctx, a);
            SearchCtx rctx = pushEntry(ctx, b);
            size_t n = active.size();
            for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                Indices toScr, toBranches;
                for (size_t k = 0; k < n; ++k)
                    (mask >> k & 1 ? toScr : toBranches).push_back(active[k]);
                if (!deriv(ctx, toScr, term->child0, *scrTy)) continue;
                Indices lactive = shiftUp(toBranches, 1);
                Indices ractive = lactive;
                if (isLinearType(a)) lactive.insert(lactive.begin(), 0);
                if (isLinearType(b)) ractive.insert(ractive.begin(), 0);
                if (deriv(lctx, lactive, term->child1, goal) &&
                    deriv(rctx, ractive, term->child2, goal))
                    return true;
            }
            return false;
        }
        case TermTag::Pair: {
            if (goal->tag != TypeTag::Tensor) return false;
            size_t n = active.size();
            for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                Indices s1, s2;
                for (size_t k = 0; k < n; ++k) (mask >> k & 1 ? s1 : s2).push_back(active[k]);
                if (deriv(ctx, s1, term->child0, goal->left) &&
                    deriv(ctx, s2, term->child1, goal->right))
                    return true;
            }
            return false;
        }
        case TermTag::LetPair: {
            auto scrTy = simpleSynth(ctx.types, term->child0);
            if (!scrTy || (*scrTy)->tag != TypeTag::Tensor) return false;
            const TypeRef& a = (*scrTy)->left;
            const TypeRef& b = (*scrTy)->right;
            SearchCtx bodyCtx = pushEntry(pushEntry(ctx, a), b);
            size_t n = active.size();
            for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                Indices toScr, toBody;
                for (size_t k = 0; k < n; ++k)
                    (mask >> k & 1 ? toScr : toBody).push_back(active[k]);
                if (!deriv(ctx, toScr, term->child0, *scrTy)) continue;
                Indices bactive = shiftUp(toBody, 2);
                if (isLinearType(b)) bactive.insert(bactive.begin(), 0);
                if (isLinearType(a)) {
                    bactive.push_back(1);
                    std::sort(bactive.begin(), bactive.end());
                }
                if (deriv(bodyCtx, bactive, term->child1, goal)) return true;
            }
            return false;
        }
        case TermTag::Lam: {
            if (goal->tag != TypeTag::Lolli || !typeEq(goal->left, term->annotA)) return false;
            SearchCtx bodyCtx = pushEntry(ctx, term->annotA);
            Indices bactive = shiftUp(active, 1);
            if (isLinearType(term->annotA)) bactive.insert(bactive.begin(), 0);
            return deriv(bodyCtx, bactive, term->child0, goal->right);
        }
        case TermTag::App: {
            auto fnTy = simpleSynth(ctx.types, term->child0);
            if (!fnTy || (*fnTy)->tag != TypeTag::Lolli || !typeEq((*fnTy)->right, goal))
                return false;
            size_t n = active.size();
            for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                Indices s1, s2;
                for (size_t k = 0; k < n; ++k) (mask >> k & 1 ? s1 : s2).push_back(active[k]);
                if (deriv(ctx, s1, term->child0, *fnTy) &&
                    deriv(ctx, s2, term->child1, (*fnTy)->left))
                    return true;
            }
            return false;
        }
        case TermTag::Lift:
            // Promotion: conclusion and premise contexts are the same Φ.
            if (goal->tag != TypeTag::Bang || !active.empty()) return false;
            return deriv(ctx, {}, term->child0, goal->body());
        case TermTag::Force:
            return deriv(ctx, active, term->child0, bangType(goal));
        case TermTag::Fold:
            if (goal->tag != TypeTag::Mu || !typeEq(goal, term->annotA)) return false;
            return deriv(ctx, active, term->child0, unrollMu(goal));
        case TermTag::Unfold: {
            auto muTy = simpleSynth(ctx.types, term->child0);
            if (!muTy || (*muTy)->tag != TypeTag::Mu || !typeEq(goal, unrollMu(*muTy)))
                return false;
            return deriv(ctx, active, term->child0, *muTy);
        }
    }
    return false;
}

SearchCtx toSearchCtx(const TypingContext& ctx) {
    SearchCtx out;
    for (const ContextEntry& e : ctx) {
        out.types.push_back(e.type);
        out.linear.push_back(isLinearType(e.type));
    }
    return out;
}

Indices allLinear(const SearchCtx& ctx) {
    Indices out;
    for (uint32_t i = 0; i < ctx.linear.size(); ++i)
        if (ctx.linear[i]) out.push_back(i);
    return out;
}

// -- derivation counting -------------------------------------------------------
//
// Counts distinct derivation trees. On top of the linear splits, each present
// non-linear variable is assigned per split: shared to all premises (part of
// Φ) or exclusively to one slot (treated as if linear). The two-premise rules
// have slots (first, second); Case and LetPair have slots (scrutinee, rest)
// where "rest" covers both branches resp. the body, matching the shared Σ of
// those rules.

struct Present {
    Indices linear;
    Indices nonlinear;

    Present under(uint32_t binders, const SearchCtx& inner) const {
        Present out;
        out.linear = shiftUp(linear, binders);
        out.nonlinear = shiftUp(nonlinear, binders);
        for (uint32_t i = 0; i < binders; ++i)
            (inner.linear[i] ? out.linear : out.nonlinear).insert(
                (inner.linear[i] ? out.linear : out.nonlinear).begin(), i);
        std::sort(out.linear.begin(), out.linear.end());
        std::sort(out.nonlinear.begin(), out.nonlinear.end());
        return out;
    }
};

uint64_t countDeriv(const SearchCtx& ctx, const Present& p, const TermRef& term,
                    const TypeRef& goal);

// Enumerates assignments for a two-slot split and calls back with the two
// present-sets.
template <typename Fn>
uint64_t sumOverSplits(const Present& p, Fn premises) {
    size_t nl = p.linear.size(), nn = p.nonlinear.size();
    uint64_t threePow = 1;
    for (size_t k = 0; k < nn; ++k) threePow *= 3;
    uint64_t total = 0;
    for (uint64_t lmask = 0; lmask < (uint64_t{1} << nl); ++lmask) {
        for (uint64_t nmask = 0; nmask < threePow; ++nmask) {
            Present p1, p2;
            for (size_t k = 0; k < nl; ++k)
                (lmask >> k & 1 ? p1.linear : p2.linear).push_back(p.linear[k]);
            uint64_t code = nmask;
            for (size_t k = 0; k < nn; ++k) {
                switch (code % 3) {
                    case 0:
                        p1.nonlinear.push_back(p.nonlinear[k]);
                        p2.nonlinear.push_back(p.nonlinear[k]);
                        break;
                    case 1: p1.nonlinear.push_back(p.nonlinear[k]); break;
                    default: p2.nonlinear.push_back(p.nonlinear[k]); break;
                }
                code /= 3;
            }
            total += premises(p1, p2);
        }
    }
    return total;
}

uint64_t countDeriv(const SearchCtx& ctx, const Present& p, const TermRef& term,
                    const TypeRef& goal) {
    switch (term->tag) {
        case TermTag::Var: {
            uint32_t i = term->varIndex;
            if (i >= ctx.types.size() || !typeEq(ctx.types[i], goal)) return 0;
            bool present = ctx.linear[i]
                               ? std::binary_search(p.linear.begin(), p.linear.end(), i)
                               : std::binary_search(p.nonlinear.begin(), p.nonlinear.end(), i);
            if (!present) return 0;
            if (ctx.linear[i] && p.linear.size() != 1) return 0;  // non-linear residue only
            if (!ctx.linear[i] && !p.linear.empty()) return 0;
            return 1;
        }
        case TermTag::Left:
        case TermTag::Right: {
            if (goal->tag != TypeTag::Sum || !typeEq(goal->left, term->annotA) ||
                !typeEq(goal->right, term->annotB))
                return 0;
            const TypeRef& sub = term->tag == TermTag::Left ? term->annotA : term->annotB;
            return countDeriv(ctx, p, term->child0, sub);
        }
        case TermTag::Case: {
            auto scrTy = simpleSynth(ctx.types, term->child0);
            if (!scrTy || (*scrTy)->tag != TypeTag::Sum) return 0;
            SearchCtx lctx = pushEntry(ctx, (*scrTy)->left);
            SearchCtx rctx = pushEntry(ctx, (*scrTy)->right);
            return sumOverSplits(p, [&](const Present& toScr, const Present& toBranches) -> uint64_t {
                uint64_t c0 = countDeriv(ctx, toScr, term->child0, *scrTy);
                if (c0 == 0) return 0;
                uint64_t c1 = countDeriv(lctx, toBranches.under(1, lctx), term->child1, goal);
                if (c1 == 0) return 0;
                uint64_t c2 = countDeriv(rctx, toBranches.under(1, rctx), term->child2, goal);
                return c0 * c1 * c2;
            });
        }
        case TermTag::Pair: {
            if (goal->tag != TypeTag::Tensor) return 0;
            return sumOverSplits(p, [&](const Present& p1, const Present& p2) -> uint64_t {
                uint64_t c1 = countDeriv(ctx, p1, term->child0, goal->left);
                if (c1 == 0) return 0;
                return c1 * countDeriv(ctx, p2, term->child1, goal->right);
            });
        }
        case TermTag::LetPair: {
            auto scrTy = simpleSynth(ctx.types, term->child0);
            if (!scrTy || (*scrTy)->tag != TypeTag::Tensor) return 0;
            SearchCtx bodyCtx = pushEntry(pushEntry(ctx, (*scrTy)->left), (*scrTy)->right);
            return sumOverSplits(p, [&](const Present& toScr, const Present& toBody) -> uint64_t {
                uint64_t c0 = countDeriv(ctx, toScr, term->child0, *scrTy);
                if (c0 == 0) return 0;
                return c0 * countDeriv(bodyCtx, toBody.under(2, bodyCtx), term->child1, goal);
            });
        }
        case TermTag::Lam: {
            if (goal->tag != TypeTag::Lolli || !typeEq(goal->left, term->annotA)) return 0;
            SearchCtx bodyCtx = pushEntry(ctx, term->annotA);
            return countDeriv(bodyCtx, p.under(1, bodyCtx), term->child0, goal->right);
        }
        case TermTag::App: {
            auto fnTy = simpleSynth(ctx.types, term->child0);
            if (!fnTy || (*fnTy)->tag != TypeTag::Lolli || !typeEq((*fnTy)->right, goal)) return 0;
            return sumOverSplits(p, [&](const Present& p1, const Present& p2) -> uint64_t {
                uint64_t c1 = countDeriv(ctx, p1, term->child0, *fnTy);
                if (c1 == 0) return 0;
                return c1 * countDeriv(ctx, p2, term->child1, (*fnTy)->left);
            });
        }
        case TermTag::Lift:
            if (goal->tag != TypeTag::Bang || !p.linear.empty()) return 0;
            return countDeriv(ctx, p, term->child0, goal->body());
        case TermTag::Force:
            return countDeriv(ctx, p, term->child0, bangType(goal));
        case TermTag::Fold:
            if (goal->tag != TypeTag::Mu || !typeEq(goal, term->annotA)) return 0;
            return countDeriv(ctx, p, term->child0, unrollMu(goal));
        case TermTag::Unfold: {
            auto muTy = simpleSynth(ctx.types, term->child0);
            if (!muTy || (*muTy)->tag != TypeTag::Mu || !typeEq(goal, unrollMu(*muTy))) return 0;
            return countDeriv(ctx, p, term->child0, *muTy);
        }
    }
    return 0;
}

constexpr size_t kMaxLinearSplit = 20;

}  // namespace

Result<bool> derivable(const TypingContext& ctx, const TermRef& term, const TypeRef& type,
                       uint64_t maxSize) {
    if (term->nodeCount > maxSize)
        return Diagnostic::error("E-TOO-LARGE", "term of size " + std::to_string(term->nodeCount) +
                                                    " exceeds the search bound " +
                                                    std::to_string(maxSize));
    SearchCtx sctx = toSearchCtx(ctx);
    Indices active = allLinear(sctx);
    if (active.size() > kMaxLinearSplit)
        return Diagnostic::error("E-TOO-LARGE", "too many linear variables for the split search");
    return deriv(sctx, active, term, type);
}

Result<uint64_t> countDerivations(const TypingContext& ctx, const TermRef& term,
                                  const TypeRef& type, uint64_t maxSize) {
    if (term->nodeCount > maxSize)
        return Diagnostic::error("E-TOO-LARGE", "term of size " + std::to_string(term->nodeCount) +
                                                    " exceeds the search bound " +
                                                    std::to_string(maxSize));
    SearchCtx sctx = toSearchCtx(ctx);
    Present p;
    p.linear = allLinear(sctx);
    for (uint32_t i = 0; i < sctx.linear.size(); ++i)
        if (!sctx.linear[i]) p.nonlinear.push_back(i);
    if (p.linear.size() + p.nonlinear.size() > kMaxLinearSplit)
        return Diagnostic::error("E-TOO-LARGE", "context too large for derivation counting");
    return countDeriv(sctx, p, term, type);
}

// -- closed-value enumeration ----------------------------------------------------

namespace {

// Closed terms used for lift and lambda bodies; the bound variable (for
// lambda bodies) is added separately.
const std::vector<TermRef>& bodyPool() {
    static const std::vector<TermRef> pool = {
        lamTerm("x", voidType(), var(0, "x")),  // \x:Void. x
        starValue(),                            // lift \x:Void. x
    };
    return pool;
}

void enumVals(const TypeRef& type, uint32_t foldBudget, std::vector<TermRef>& out) {
    switch (type->tag) {
        case TypeTag::TVar:
            return;  // no closed values
        case TypeTag::Sum: {
            std::vector<TermRef> ls, rs;
            enumVals(type->left, foldBudget, ls);
            enumVals(type->right, foldBudget, rs);
            for (const TermRef& v : ls) out.push_back(leftTerm(type->left, type->right, v));
            for (const TermRef& v : rs) out.push_back(rightTerm(type->left, type->right, v));
            return;
        }
        case TypeTag::Tensor: {
            std::vector<TermRef> ls, rs;
            enumVals(type->left, foldBudget, ls);
            enumVals(type->right, foldBudget, rs);
            for (const TermRef& a : ls)
                for (const TermRef& b : rs) out.push_back(pairTerm(a, b));
            return;
        }
        case TypeTag::Lolli:
            out.push_back(lamTerm("x", type->left, var(0, "x")));
            for (const TermRef& body : bodyPool()) out.push_back(lamTerm("x", type->left, body));
            return;
        case TypeTag::Bang: {
            std::vector<TermRef> inner;
            enumVals(type->left, foldBudget, inner);
            for (const TermRef& v : inner) out.push_back(liftTerm(v));
            for (const TermRef& body : bodyPool()) out.push_back(liftTerm(body));
            return;
        }
        case TypeTag::Mu: {
            if (foldBudget == 0) return;
            std::vector<TermRef> inner;
            enumVals(unrollMu(type), foldBudget - 1, inner);
            for (const TermRef& v : inner) out.push_back(foldTerm(type, v));
            return;
        }
    }
}

}  // namespace

std::vector<TermRef> enumClosedValues(const TypeRef& type, uint32_t maxDepth) {
    std::vector<TermRef> candidates;
    enumVals(type, maxDepth, candidates);
    std::vector<TermRef> out;
    std::set<std::string> seen;  // structural dedup (pool overlaps the generic cases)
    for (const TermRef& v : candidates) {
        if (!isValue(v) || !isClosedTerm(v)) continue;
        Result<bool> ok = derivable({}, v, type, /*maxSize=*/1u << 20);
        if (!ok || !*ok) continue;
        if (seen.insert(termToSexpr(v)).second) out.push_back(v);
    }
    return out;
}

// -- canonical codecs ------------------------------------------------------------

Result<uint64_t> decodeNat(const TermRef& v) {
    const TypeRef nat = natType();
    const TypeRef unit = unitType();
    const TermRef star = starValue();
    uint64_t n = 0;
    const CoreTerm* cur = v.get();
    for (;;) {
        if (cur->tag != TermTag::Fold || !typeEq(cur->annotA, nat))
            return Diagnostic::error("E-NOT-NUMERAL", "value is not a canonical Nat numeral");
        const CoreTerm* body = cur->child0.get();
        if (body->tag == TermTag::Left) {
            if (!typeEq(body->annotA, unit) || !typeEq(body->annotB, nat) ||
                !termEq(body->child0, star))
                return Diagnostic::error("E-NOT-NUMERAL", "value is not a canonical Nat numeral");
            return n;
        }
        if (body->tag == TermTag::Right) {
            if (!typeEq(body->annotA, unit) || !typeEq(body->annotB, nat))
                return Diagnostic::error("E-NOT-NUMERAL", "value is not a canonical Nat numeral");
            ++n;
            cur = body->child0.get();
            continue;
        }
        return Diagnostic::error("E-NOT-NUMERAL", "value is not a canonical Nat numeral");
    }
}

Result<std::vector<uint64_t>> decodeListNat(const TermRef& v) {
    const TypeRef list = listNatType();
    const TypeRef unit = unitType();
    const TypeRef cell = tensorType(natType(), list);
    const TermRef star = starValue();
    std::vector<uint64_t> out;
    TermRef cur = v;
    for (;;) {
        if (cur->tag != TermTag::Fold || !typeEq(cur->annotA, list))
            return Diagnostic::error("E-NOT-LIST", "value is not a canonical List Nat");
        const CoreTerm* body = cur->child0.get();
        if (body->tag == TermTag::Left) {
            if (!typeEq(body->annotA, unit) || !typeEq(body->annotB, cell) ||
                !termEq(body->child0, star))
                return Diagnostic::error("E-NOT-LIST", "value is not a canonical List Nat");
            return out;
        }
        if (body->tag == TermTag::Right) {
            if (!typeEq(body->annotA, unit) || !typeEq(body->annotB, cell) ||
                body->child0->tag != TermTag::Pair)
                return Diagnostic::error("E-NOT-LIST", "value is not a canonical List Nat");
            Result<uint64_t> head = decodeNat(body->child0->child0);
            if (!head)
                return Diagnostic::error("E-NOT-LIST", "list element is not a canonical numeral");
            out.push_back(*head);
            cur = body->child0->child1;
            continue;
        }
        return Diagnostic::error("E-NOT-LIST", "value is not a canonical List Nat");
    }
}

}  // namespace lnlfpc::oracle
