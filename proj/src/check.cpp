#include "lnlfpc/check.hpp"

#include <algorithm>

#include "lnlfpc/pretty.hpp"

namespace lnlfpc {

TypingContext extendContext(const TypingContext& ctx, std::string hint, TypeRef type) {
    TypingContext out;
    out.reserve(ctx.size() + 1);
    out.push_back(ContextEntry{std::move(hint), std::move(type)});
    out.insert(out.end(), ctx.begin(), ctx.end());
    return out;
}

bool UseSet::contains(uint32_t index) const {
    return std::binary_search(elems_.begin(), elems_.end(), index);
}

void UseSet::insert(uint32_t index) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), index);
    if (it == elems_.end() || *it != index) elems_.insert(it, index);
}

bool UseSet::disjointWith(const UseSet& other) const {
    size_t i = 0, j = 0;
    while (i < elems_.size() && j < other.elems_.size()) {
        if (elems_[i] == other.elems_[j]) return false;
        if (elems_[i] < other.elems_[j]) ++i;
        else ++j;
    }
    return true;
}

UseSet UseSet::unionOf(const UseSet& a, const UseSet& b) {
    UseSet out;
    out.elems_.resize(a.elems_.size() + b.elems_.size());
    std::merge(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
               out.elems_.begin());
    out.elems_.erase(std::unique(out.elems_.begin(), out.elems_.end()), out.elems_.end());
    return out;
}

UseSet UseSet::stripBinders(uint32_t binders) const {
    UseSet out;
    for (uint32_t i : elems_)
        if (i >= binders) out.elems_.push_back(i - binders);
    return out;
}

UseSet allLinearIndices(const TypingContext& ctx) {
    UseSet out;
    for (uint32_t i = 0; i < ctx.size(); ++i)
        if (isLinearType(ctx[i].type)) out.insert(i);
    return out;
}

namespace {

Diagnostic err(std::string code, std::string message) {
    return Diagnostic::error(std::move(code), std::move(message));
}

std::string describe(const TypeRef& ty) { return printCoreType(ty); }

std::string binderName(const std::string& hint) { return hint.empty() ? "_" : hint; }

// Shared tail of the Lam/Case/LetPair clauses: binder obligations and scope exit.
std::optional<Diagnostic> requireBinderUse(const UseSet& uses, uint32_t index, const TypeRef& ty,
                                           const std::string& hint) {
    if (isLinearType(ty) && !uses.contains(index))
        return err("E-LINEAR-UNUSED",
                   "linear variable '" + binderName(hint) + "' of type " + describe(ty) +
                       " is never used");
    return std::nullopt;
}

}  // namespace

Result<SynthResult> synth(const TypingContext& ctx, const TermRef& term) {
    switch (term->tag) {
        case TermTag::Var: {
            uint32_t i = term->varIndex;
            if (i >= ctx.size())
                return err("E-UNBOUND", "unbound variable index " + std::to_string(i));
            SynthResult r;
            r.type = ctx[i].type;
            if (isLinearType(r.type)) r.uses.insert(i);
            return r;
        }
        case TermTag::Left:
        case TermTag::Right: {
            Result<SynthResult> sub = synth(ctx, term->child0);
            if (!sub) return sub;
            const TypeRef& want = term->tag == TermTag::Left ? term->annotA : term->annotB;
            if (!typeEq(sub->type, want))
                return err("E-TYPE-MISMATCH",
                           std::string(term->tag == TermTag::Left ? "left" : "right") +
                               " injection body has type " + describe(sub->type) + ", expected " +
                               describe(want));
            return SynthResult{sumType(term->annotA, term->annotB), sub->uses};
        }
        case TermTag::Case: {
            Result<SynthResult> scr = synth(ctx, term->child0);
            if (!scr) return scr;
            if (scr->type->tag != TypeTag::Sum)
                return err("E-NOT-SUM",
                           "case scrutinee has type " + describe(scr->type) + ", not a sum");
            const TypeRef& a = scr->type->left;
            const TypeRef& b = scr->type->right;
            Result<SynthResult> lhs = synth(extendContext(ctx, term->hint, a), term->child1);
            if (!lhs) return lhs;
            Result<SynthResult> rhs = synth(extendContext(ctx, term->hint2, b), term->child2);
            if (!rhs) return rhs;
            if (auto d = requireBinderUse(lhs->uses, 0, a, term->hint)) return *d;
            if (auto d = requireBinderUse(rhs->uses, 0, b, term->hint2)) return *d;
            UseSet lu = lhs->uses.stripBinders(1);
            UseSet ru = rhs->uses.stripBinders(1);
            if (!(lu == ru))
                return err("E-BRANCH-MISMATCH",
                           "case branches consume different linear variables");
            if (!typeEq(lhs->type, rhs->type))
                return err("E-BRANCH-MISMATCH", "case branches have different types: " +
                                                    describe(lhs->type) + " vs " +
                                                    describe(rhs->type));
            if (!scr->uses.disjointWith(lu))
                return err("E-LINEAR-REUSED",
                           "a linear variable is used by both the scrutinee and a branch");
            return SynthResult{lhs->type, UseSet::unionOf(scr->uses, lu)};
        }
        case TermTag::Pair: {
            Result<SynthResult> first = synth(ctx, term->child0);
            if (!first) return first;
            Result<SynthResult> second = synth(ctx, term->child1);
            if (!second) return second;
            if (!first->uses.disjointWith(second->uses))
                return err("E-LINEAR-REUSED",
                           "a linear variable is used by both components of a pair");
            return SynthResult{tensorType(first->type, second->type),
                               UseSet::unionOf(first->uses, second->uses)};
        }
        case TermTag::LetPair: {
            Result<SynthResult> scr = synth(ctx, term->child0);
            if (!scr) return scr;
            if (scr->type->tag != TypeTag::Tensor)
                return err("E-NOT-PAIR",
                           "let-pair scrutinee has type " + describe(scr->type) + ", not a tensor");
            const TypeRef& a = scr->type->left;
            const TypeRef& b = scr->type->right;
            // First component at index 1, second at index 0.
            TypingContext inner = extendContext(extendContext(ctx, term->hint, a), term->hint2, b);
            Result<SynthResult> body = synth(inner, term->child1);
            if (!body) return body;
            if (auto d = requireBinderUse(body->uses, 1, a, term->hint)) return *d;
            if (auto d = requireBinderUse(body->uses, 0, b, term->hint2)) return *d;
            UseSet bu = body->uses.stripBinders(2);
            if (!scr->uses.disjointWith(bu))
                return err("E-LINEAR-REUSED",
                           "a linear variable is used by both the pair and the let body");
            return SynthResult{body->type, UseSet::unionOf(scr->uses, bu)};
        }
        case TermTag::Lam: {
            Result<SynthResult> body =
                synth(extendContext(ctx, term->hint, term->annotA), term->child0);
            if (!body) return body;
            if (auto d = requireBinderUse(body->uses, 0, term->annotA, term->hint)) return *d;
            return SynthResult{lolliType(term->annotA, body->type), body->uses.stripBinders(1)};
        }
        case TermTag::App: {
            Result<SynthResult> fn = synth(ctx, term->child0);
            if (!fn) return fn;
            if (fn->type->tag != TypeTag::Lolli)
                return err("E-NOT-FUNCTION",
                           "applied term has type " + describe(fn->type) + ", not a function");
            Result<SynthResult> arg = synth(ctx, term->child1);
            if (!arg) return arg;
            if (!typeEq(arg->type, fn->type->left))
                return err("E-TYPE-MISMATCH", "argument has type " + describe(arg->type) +
                                                  ", expected " + describe(fn->type->left));
            if (!fn->uses.disjointWith(arg->uses))
                return err("E-LINEAR-REUSED",
                           "a linear variable is used by both function and argument");
            return SynthResult{fn->type->right, UseSet::unionOf(fn->uses, arg->uses)};
        }
        case TermTag::Lift: {
            Result<SynthResult> body = synth(ctx, term->child0);
            if (!body) return body;
            // The promotion rule requires a non-linear premise context: a
            // suspended computation may be copied, so it cannot capture
            // linear resources.
            if (!body->uses.empty()) {
                uint32_t i = body->uses.indices().front();
                return err("E-LIFT-LINEAR", "lift body consumes linear variable '" +
                                                binderName(ctx[i].nameHint) + "'");
            }
            return SynthResult{bangType(body->type), UseSet{}};
        }
        case TermTag::Force: {
            Result<SynthResult> body = synth(ctx, term->child0);
            if (!body) return body;
            if (body->type->tag != TypeTag::Bang)
                return err("E-NOT-BANG",
                           "forced term has type " + describe(body->type) + ", not a ! type");
            return SynthResult{body->type->body(), body->uses};
        }
        case TermTag::Fold: {
            Result<SynthResult> body = synth(ctx, term->child0);
            if (!body) return body;
            TypeRef expected = unrollMu(term->annotA);
            if (!typeEq(body->type, expected))
                return err("E-TYPE-MISMATCH", "fold body has type " + describe(body->type) +
                                                  ", expected the unrolling " + describe(expected));
            return SynthResult{term->annotA, body->uses};
        }
        case TermTag::Unfold: {
            Result<SynthResult> body = synth(ctx, term->child0);
            if (!body) return body;
            if (body->type->tag != TypeTag::Mu)
                return err("E-NOT-MU",
                           "unfolded term has type " + describe(body->type) + ", not a mu type");
            return SynthResult{unrollMu(body->type), body->uses};
        }
    }
    return err("E-PARSE", "malformed core term");
}

std::optional<Diagnostic> checkJudgement(const TypingContext& ctx, const TermRef& term,
                                         const TypeRef& expected) {
    Result<SynthResult> r = synth(ctx, term);
    if (!r) return r.takeError();
    if (!typeEq(r->type, expected))
        return err("E-TYPE-MISMATCH",
                   "term has type " + describe(r->type) + ", expected " + describe(expected));
    UseSet required = allLinearIndices(ctx);
    if (!(r->uses == required)) {
        std::string names;
        for (uint32_t i : required.indices()) {
            if (r->uses.contains(i)) continue;
            if (!names.empty()) names += ", ";
            names += "'" + binderName(ctx[i].nameHint) + "'";
        }
        return err("E-LINEAR-UNUSED", "linear variables left unconsumed: " + names);
    }
    return std::nullopt;
}

CheckedProgram checkProgram(const CoreProgram& prog) {
    CheckedProgram out;
    for (const CoreDef& def : prog.defs) {
        if (auto d = checkJudgement({}, def.body, def.declaredType)) {
            d->definition = def.name;
            if (d->span.line == 0) d->span = def.span;
            out.diagnostics.push_back(std::move(*d));
            continue;
        }
        out.defTypes.emplace_back(def.name, def.declaredType);
    }
    if (prog.hasMain()) {
        Result<SynthResult> r = synth({}, prog.main);
        if (!r) {
            Diagnostic d = r.takeError();
            d.definition = "main";
            if (d.span.line == 0) d.span = prog.mainSpan;
            out.diagnostics.push_back(std::move(d));
        } else {
            out.mainType = r->type;
        }
    }
    return out;
}

}  // namespace lnlfpc
