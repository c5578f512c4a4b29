#include "lnlfpc/elaborate.hpp"

#include <stdexcept>

namespace lnlfpc {

namespace {

struct ElabFailure {
    Diagnostic diag;
};

[[noreturn]] void fail(std::string code, std::string message, Span span) {
    throw ElabFailure{Diagnostic::error(std::move(code), std::move(message), span)};
}

struct TermBinder {
    std::string name;
    TypeRef type;  // null when unknown at elaboration time (case/let binders)
};

class Elaborator {
public:
    Elaborator(const ElabEnv& env, std::vector<RecInstance>* recSink, std::string defName)
        : env_(env), recSink_(recSink), defName_(std::move(defName)) {}

    TypeRef type(const STypeRef& t) {
        switch (t->tag) {
            case STypeTag::Name: {
                for (size_t i = typeBound_.size(); i-- > 0;) {
                    if (typeBound_[i] == t->name)
                        return tvar(static_cast<uint32_t>(typeBound_.size() - 1 - i));
                }
                if (const TypeRef* alias = env_.alias(t->name)) return *alias;  // aliases are closed
                if (env_.pendingAliases.count(t->name))
                    fail("E-ALIAS-CYCLE",
                         "type alias '" + t->name + "' refers to itself or to a later alias",
                         t->span);
                fail("E-UNKNOWN-NAME", "unknown type name '" + t->name + "'", t->span);
            }
            case STypeTag::Sum:
                return sumType(type(t->left), type(t->right));
            case STypeTag::Tensor:
                return tensorType(type(t->left), type(t->right));
            case STypeTag::Lolli:
                return lolliType(type(t->left), type(t->right));
            case STypeTag::Bang:
                return bangType(type(t->left));
            case STypeTag::Mu: {
                typeBound_.push_back(t->name);
                TypeRef body = type(t->left);
                typeBound_.pop_back();
                return muType(t->name, std::move(body));
            }
        }
        fail("E-PARSE", "malformed type", t->span);
    }

    TermRef term(const STermRef& t) {
        switch (t->tag) {
            case STermTag::Name: {
                for (size_t i = termBound_.size(); i-- > 0;) {
                    if (termBound_[i].name == t->name)
                        return var(static_cast<uint32_t>(termBound_.size() - 1 - i), t->name);
                }
                if (const TermRef* d = env_.def(t->name)) return *d;  // inline the closed body
                fail("E-UNKNOWN-NAME", "unknown name '" + t->name + "'", t->span);
            }
            case STermTag::Nat: {
                Result<TermRef> r = expandNumeral(t->natValue, env_, t->span);
                if (!r) throw ElabFailure{r.takeError()};
                return *r;
            }
            case STermTag::Lam: {
                TypeRef annot = type(t->typeA);
                termBound_.push_back(TermBinder{t->name, annot});
                TermRef body = term(t->sub0);
                termBound_.pop_back();
                return lamTerm(t->name, std::move(annot), std::move(body));
            }
            case STermTag::Rec: {
                TypeRef annot = type(t->typeA);
                if (annot->tag != TypeTag::Bang)
                    fail("E-REC-ANNOT",
                         "rec binds a suspended value: the annotation must be a ! type",
                         t->span);
                termBound_.push_back(TermBinder{t->name, annot});
                TermRef body = term(t->sub0);
                termBound_.pop_back();
                TermRef encoded = desugarRec(t->name, annot, body);
                if (recSink_) {
                    RecInstance inst;
                    inst.defName = defName_;
                    inst.contextKnown = true;
                    for (size_t i = termBound_.size(); i-- > 0;) {
                        inst.binderTypes.push_back(termBound_[i].type);
                        if (!termBound_[i].type) inst.contextKnown = false;
                    }
                    inst.annot = annot;
                    inst.body = body;
                    inst.desugared = encoded;
                    recSink_->push_back(std::move(inst));
                }
                return encoded;
            }
            case STermTag::Case: {
                TermRef scr = term(t->sub0);
                termBound_.push_back(TermBinder{t->name, nullptr});
                TermRef lb = term(t->sub1);
                termBound_.pop_back();
                termBound_.push_back(TermBinder{t->name2, nullptr});
                TermRef rb = term(t->sub2);
                termBound_.pop_back();
                return caseTerm(std::move(scr), t->name, std::move(lb), t->name2, std::move(rb));
            }
            case STermTag::LetPair: {
                TermRef scr = term(t->sub0);
                termBound_.push_back(TermBinder{t->name, nullptr});
                termBound_.push_back(TermBinder{t->name2, nullptr});
                TermRef body = term(t->sub1);
                termBound_.pop_back();
                termBound_.pop_back();
                return letPairTerm(std::move(scr), t->name, t->name2, std::move(body));
            }
            case STermTag::Pair:
                return pairTerm(term(t->sub0), term(t->sub1));
            case STermTag::App:
                return appTerm(term(t->sub0), term(t->sub1));
            case STermTag::Left:
                return leftTerm(type(t->typeA), type(t->typeB), term(t->sub0));
            case STermTag::Right:
                return rightTerm(type(t->typeA), type(t->typeB), term(t->sub0));
            case STermTag::Fold: {
                TypeRef annot = type(t->typeA);
                if (annot->tag != TypeTag::Mu)
                    fail("E-TYPE-MISMATCH", "fold annotation must be a mu type", t->span);
                return foldTerm(std::move(annot), term(t->sub0));
            }
            case STermTag::Unfold:
                return unfoldTerm(term(t->sub0));
            case STermTag::Lift:
                return liftTerm(term(t->sub0));
            case STermTag::Force:
                return forceTerm(term(t->sub0));
        }
        fail("E-PARSE", "malformed term", t->span);
    }

private:
    const ElabEnv& env_;
    std::vector<RecInstance>* recSink_;
    std::string defName_;
    std::vector<std::string> typeBound_;     // innermost last
    std::vector<TermBinder> termBound_;      // innermost last
};

}  // namespace

TermRef desugarRec(const std::string& hint, const TypeRef& annot, const TermRef& body) {
    if (annot->tag != TypeTag::Bang)
        throw std::invalid_argument("desugarRec: annotation must be a Bang type");
    const TypeRef& resultTy = annot->body();
    TypeRef recTy = muType("X", lolliType(bangType(tvar(0)), shiftType(resultTy, 1, 0)));
    TermRef x = var(0, "x");
    TermRef selfApply = liftTerm(appTerm(unfoldTerm(forceTerm(x)), x));
    // Free variables of body other than the rec binder move below one more
    // binder (the new x), hence the shift at cutoff 1.
    TermRef wrapped = appTerm(lamTerm(hint, annot, shiftTerm(body, 1, 1)), std::move(selfApply));
    TermRef alpha = liftTerm(foldTerm(recTy, lamTerm("x", bangType(recTy), std::move(wrapped))));
    return appTerm(unfoldTerm(forceTerm(alpha)), alpha);
}

Result<TermRef> expandNumeral(uint64_t n, const ElabEnv& env, Span span) {
    const TypeRef* natT = env.alias("Nat");
    const TypeRef* unitT = env.alias("I");
    const TypeRef* voidT = env.alias("Void");
    if (!natT || !unitT || !voidT)
        return Diagnostic::error("E-UNKNOWN-NAME",
                                 "numeral literals need the Nat, I and Void aliases in scope",
                                 span);
    if ((*natT)->tag != TypeTag::Mu)
        return Diagnostic::error("E-TYPE-MISMATCH", "the Nat alias must be a mu type", span);
    TermRef star = liftTerm(lamTerm("x", *voidT, var(0, "x")));
    TermRef acc = foldTerm(*natT, leftTerm(*unitT, *natT, std::move(star)));
    for (uint64_t i = 0; i < n; ++i) acc = foldTerm(*natT, rightTerm(*unitT, *natT, std::move(acc)));
    return acc;
}

ElaborateResult elaborateModule(const SurfaceModule& mod, ElabEnv& env, const std::string& origin,
                                std::vector<RecInstance>* recSink) {
    ElaborateResult result;
    env.pendingAliases.clear();
    for (const SurfaceAlias& a : mod.aliases) env.pendingAliases.insert(a.name);

    for (const SurfaceAlias& a : mod.aliases) {
        env.pendingAliases.erase(a.name);
        if (env.hasAlias(a.name)) {
            result.diagnostics.push_back(Diagnostic::error(
                "E-DUPLICATE-NAME", "type alias '" + a.name + "' is already defined", a.span));
            continue;
        }
        try {
            Elaborator el(env, nullptr, a.name);
            env.addAlias(a.name, el.type(a.body));
        } catch (ElabFailure& f) {
            f.diag.definition = a.name;
            result.diagnostics.push_back(std::move(f.diag));
        }
    }
    env.pendingAliases.clear();

    for (const SurfaceDef& d : mod.defs) {
        if (env.def(d.name)) {
            result.diagnostics.push_back(Diagnostic::error(
                "E-DUPLICATE-NAME", "definition '" + d.name + "' is already defined", d.span));
            continue;
        }
        try {
            Elaborator el(env, recSink, d.name);
            TypeRef annot = el.type(d.annot);
            TermRef body = el.term(d.body);
            env.addDef(d.name, body, annot);
            result.defs.push_back(CoreDef{d.name, std::move(annot), std::move(body), d.span, origin});
        } catch (ElabFailure& f) {
            f.diag.definition = d.name;
            result.diagnostics.push_back(std::move(f.diag));
        }
    }

    if (mod.main) {
        try {
            Elaborator el(env, recSink, "main");
            result.main = el.term(*mod.main);
            result.mainSpan = mod.mainSpan;
        } catch (ElabFailure& f) {
            f.diag.definition = "main";
            result.diagnostics.push_back(std::move(f.diag));
        }
    }
    return result;
}

Result<TermRef> elaborateTerm(const STermRef& term, const ElabEnv& env,
                              std::vector<RecInstance>* recSink) {
    try {
        Elaborator el(env, recSink, "<term>");
        return el.term(term);
    } catch (ElabFailure& f) {
        return std::move(f.diag);
    }
}

}  // namespace lnlfpc
