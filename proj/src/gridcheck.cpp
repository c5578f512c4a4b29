#include "lnlfpc/gridcheck.hpp"

#include <map>
#include <unordered_map>

#include "lnlfpc/basis.hpp"
#include "lnlfpc/oracle.hpp"
#include "lnlfpc/sexpr.hpp"

namespace lnlfpc {

const std::vector<TypeRef>& gridTypeAtoms() {
    static const std::vector<TypeRef> atoms = {
        unitType(),
        voidType(),
        lolliType(unitType(), unitType()),
        natType(),
    };
    return atoms;
}

const std::vector<TypingContext>& gridContextPool() {
    static const std::vector<TypingContext> pool = [] {
        TypeRef i = unitType(), v = voidType(), f = lolliType(unitType(), unitType()),
                n = natType();
        auto ctx = [](std::vector<TypeRef> types) {
            TypingContext c;
            char name = 'a';
            for (TypeRef& t : types) c.push_back(ContextEntry{std::string(1, name++), std::move(t)});
            return c;
        };
        return std::vector<TypingContext>{
            ctx({}),     ctx({i}),    ctx({v}),    ctx({f}),    ctx({n}),
            ctx({f, n}), ctx({n, f}), ctx({f, f}), ctx({n, n}), ctx({i, f}),
        };
    }();
    return pool;
}

namespace {

std::vector<TypeRef> contextTypes(const TypingContext& ctx) {
    std::vector<TypeRef> out;
    for (const ContextEntry& e : ctx) out.push_back(e.type);
    return out;
}

// One grid point: both systems must agree at the unique annotation-determined
// type; a term with no such type must fail the algorithmic checker too.
void comparePoint(const TypingContext& ctx, const std::vector<TypeRef>& types, const TermRef& term,
                  GridStats& stats) {
    ++stats.points;
    auto simple = oracle::simpleSynth(types, term);
    Result<SynthResult> algo = synth(ctx, term);
    if (!simple) {
        if (algo) {
            ++stats.disagreements;
            if (stats.samples.size() < 8)
                stats.samples.push_back("algorithmic checker typed a term the simple synthesis "
                                        "rejects: " +
                                        termToSexpr(term));
        }
        return;
    }
    bool algoAccepts = !checkJudgement(ctx, term, *simple).has_value();
    Result<bool> dr = oracle::derivable(ctx, term, *simple, /*maxSize=*/1u << 20);
    bool oracleAccepts = dr && *dr;
    if (algoAccepts != oracleAccepts) {
        ++stats.disagreements;
        if (stats.samples.size() < 8)
            stats.samples.push_back(std::string(algoAccepts ? "checker" : "oracle") +
                                    " accepts, the other rejects: " + termToSexpr(term) + " : " +
                                    typeToSexpr(*simple));
    } else if (algoAccepts) {
        ++stats.accepted;
    }
}

// -- exhaustive enumeration (all annotation assignments) ----------------------

// Memo key: (size, number of variables in scope). Terms only mention
// variable indices, so lists are shared across contexts of equal length.
using ExhaustiveMemo = std::map<std::pair<uint32_t, uint32_t>, std::vector<TermRef>>;

const std::vector<TypeRef>& muAtoms() {
    static const std::vector<TypeRef> mus = [] {
        std::vector<TypeRef> out;
        for (const TypeRef& a : gridTypeAtoms())
            if (a->tag == TypeTag::Mu) out.push_back(a);
        return out;
    }();
    return mus;
}

const std::vector<TermRef>& enumExhaustive(uint32_t size, uint32_t scope, ExhaustiveMemo& memo) {
    auto key = std::make_pair(size, scope);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<TermRef> out;
    if (size == 1) {
        for (uint32_t i = 0; i < scope; ++i) out.push_back(var(i, "v"));
    } else {
        const auto& atoms = gridTypeAtoms();
        for (const TermRef& m : enumExhaustive(size - 1, scope, memo)) {
            for (const TypeRef& a : atoms) {
                for (const TypeRef& b : atoms) {
                    out.push_back(leftTerm(a, b, m));
                    out.push_back(rightTerm(a, b, m));
                }
            }
            out.push_back(liftTerm(m));
            out.push_back(forceTerm(m));
            out.push_back(unfoldTerm(m));
            for (const TypeRef& t : muAtoms()) out.push_back(foldTerm(t, m));
        }
        for (const TermRef& m : enumExhaustive(size - 1, scope + 1, memo))
            for (const TypeRef& a : atoms) out.push_back(lamTerm("x", a, m));
        for (uint32_t i = 1; i + 1 < size; ++i) {
            uint32_t j = size - 1 - i;
            for (const TermRef& m : enumExhaustive(i, scope, memo)) {
                for (const TermRef& n : enumExhaustive(j, scope, memo)) {
                    out.push_back(pairTerm(m, n));
                    out.push_back(appTerm(m, n));
                }
                for (const TermRef& n : enumExhaustive(j, scope + 2, memo))
                    out.push_back(letPairTerm(m, "x", "y", n));
            }
            for (uint32_t j2 = 1; i + j2 + 1 < size; ++j2) {
                uint32_t k = size - 1 - i - j2;
                for (const TermRef& m : enumExhaustive(i, scope, memo))
                    for (const TermRef& l : enumExhaustive(j2, scope + 1, memo))
                        for (const TermRef& r : enumExhaustive(k, scope + 1, memo))
                            out.push_back(caseTerm(m, "x", l, "y", r));
            }
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

// -- type-coherent enumeration -------------------------------------------------

struct Typed {
    TermRef term;
    TypeRef type;
};

// Annotation slots that are not forced by child types draw from one
// non-linear and one linear atom; that is the axis the linearity rules see.
const std::vector<TypeRef>& freeAnnots() {
    static const std::vector<TypeRef> out = {unitType(), lolliType(unitType(), unitType())};
    return out;
}

// Binder domains for the coherent enumeration. Nat additionally enables
// fold/unfold interactions; the full atom pool would mostly multiply
// behaviorally equivalent non-linear binders (and the memo tables with them).
const std::vector<TypeRef>& lamAnnots() {
    static const std::vector<TypeRef> out = {natType(), lolliType(unitType(), unitType())};
    return out;
}

class CoherentEnumerator {
public:
    // Term lists are memoized per (context, size) while building; the largest
    // size is streamed through `sink` without being stored, which keeps the
    // working set bounded by the sub-term tables.
    template <typename Sink>
    void enumerate(const std::vector<TypeRef>& ctx, uint32_t size, Sink&& sink) {
        build(ctx, size, std::forward<Sink>(sink));
    }

    const std::vector<Typed>& terms(const std::vector<TypeRef>& ctx, uint32_t size) {
        std::string key = ctxKey(ctx) + "#" + std::to_string(size);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<Typed> out;
        build(ctx, size, [&](const Typed& t) { out.push_back(t); });
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    static std::string ctxKey(const std::vector<TypeRef>& ctx) {
        std::string key;
        for (const TypeRef& t : ctx) {
            key += typeToSexpr(t);
            key += ';';
        }
        return key;
    }

    static std::vector<TypeRef> pushed(const std::vector<TypeRef>& ctx, const TypeRef& ty) {
        std::vector<TypeRef> out;
        out.reserve(ctx.size() + 1);
        out.push_back(ty);
        out.insert(out.end(), ctx.begin(), ctx.end());
        return out;
    }

    template <typename Sink>
    void build(const std::vector<TypeRef>& ctx, uint32_t size, Sink&& sink) {
        if (size == 1) {
            for (uint32_t i = 0; i < ctx.size(); ++i) sink(Typed{var(i, "v"), ctx[i]});
            return;
        }
        for (const Typed& m : terms(ctx, size - 1)) {
            for (const TypeRef& b : freeAnnots()) {
                sink(Typed{leftTerm(m.type, b, m.term), sumType(m.type, b)});
                sink(Typed{rightTerm(b, m.type, m.term), sumType(b, m.type)});
            }
            sink(Typed{liftTerm(m.term), bangType(m.type)});
            if (m.type->tag == TypeTag::Bang) sink(Typed{forceTerm(m.term), m.type->body()});
            if (m.type->tag == TypeTag::Mu) sink(Typed{unfoldTerm(m.term), unrollMu(m.type)});
            for (const TypeRef& t : muAtoms())
                if (typeEq(m.type, unrollMu(t))) sink(Typed{foldTerm(t, m.term), t});
        }
        for (const TypeRef& a : lamAnnots())
            for (const Typed& m : terms(pushed(ctx, a), size - 1))
                sink(Typed{lamTerm("x", a, m.term), lolliType(a, m.type)});
        for (uint32_t i = 1; i + 1 < size; ++i) {
            uint32_t j = size - 1 - i;
            for (const Typed& m : terms(ctx, i)) {
                for (const Typed& n : terms(ctx, j)) {
                    sink(Typed{pairTerm(m.term, n.term), tensorType(m.type, n.type)});
                    if (m.type->tag == TypeTag::Lolli && typeEq(m.type->left, n.type))
                        sink(Typed{appTerm(m.term, n.term), m.type->right});
                }
                if (m.type->tag == TypeTag::Tensor) {
                    auto inner = pushed(pushed(ctx, m.type->left), m.type->right);
                    for (const Typed& n : terms(inner, j))
                        sink(Typed{letPairTerm(m.term, "x", "y", n.term), n.type});
                }
            }
            for (uint32_t j2 = 1; i + j2 + 1 < size; ++j2) {
                uint32_t k = size - 1 - i - j2;
                for (const Typed& m : terms(ctx, i)) {
                    if (m.type->tag != TypeTag::Sum) continue;
                    for (const Typed& l : terms(pushed(ctx, m.type->left), j2))
                        for (const Typed& r : terms(pushed(ctx, m.type->right), k))
                            if (typeEq(l.type, r.type))
                                sink(Typed{caseTerm(m.term, "x", l.term, "y", r.term), l.type});
                }
            }
        }
    }

    std::unordered_map<std::string, std::vector<Typed>> memo_;
};

}  // namespace

GridStats runOracleGrid(const GridOptions& opts) {
    GridStats stats;

    {
        // Exhaustive phase in its own scope so the tables are freed before the
        // larger type-coherent phase starts.
        ExhaustiveMemo exhaustiveMemo;
        for (const TypingContext& ctx : gridContextPool()) {
            std::vector<TypeRef> types = contextTypes(ctx);
            for (uint32_t size = 1; size <= opts.exhaustiveMaxSize; ++size) {
                for (const TermRef& term :
                     enumExhaustive(size, static_cast<uint32_t>(ctx.size()), exhaustiveMemo)) {
                    comparePoint(ctx, types, term, stats);
                    ++stats.exhaustivePoints;
                }
            }
        }
    }

    CoherentEnumerator coherent;
    for (const TypingContext& ctx : gridContextPool()) {
        std::vector<TypeRef> types = contextTypes(ctx);
        for (uint32_t size = 1; size <= opts.wellTypedMaxSize; ++size) {
            if (size < opts.wellTypedMaxSize) {
                for (const Typed& t : coherent.terms(types, size)) {
                    comparePoint(ctx, types, t.term, stats);
                    ++stats.wellTypedPoints;
                }
            } else {
                coherent.enumerate(types, size, [&](const Typed& t) {
                    comparePoint(ctx, types, t.term, stats);
                    ++stats.wellTypedPoints;
                });
            }
        }
    }
    return stats;
}

std::vector<TypeRef> enumTypes(uint32_t maxSize, uint32_t maxFree) {
    // memo[(size, free)] -> all types of exactly `size` nodes
    std::map<std::pair<uint32_t, uint32_t>, std::vector<TypeRef>> memo;
    auto rec = [&](auto&& self, uint32_t size, uint32_t free) -> const std::vector<TypeRef>& {
        auto key = std::make_pair(size, free);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<TypeRef> out;
        if (size == 1) {
            for (uint32_t i = 0; i < free; ++i) out.push_back(tvar(i));
        } else {
            for (const TypeRef& b : self(self, size - 1, free)) out.push_back(bangType(b));
            for (const TypeRef& b : self(self, size - 1, free + 1)) out.push_back(muType("X", b));
            for (uint32_t i = 1; i + 1 < size; ++i) {
                for (const TypeRef& l : self(self, i, free)) {
                    for (const TypeRef& r : self(self, size - 1 - i, free)) {
                        out.push_back(sumType(l, r));
                        out.push_back(tensorType(l, r));
                        out.push_back(lolliType(l, r));
                    }
                }
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    };
    std::vector<TypeRef> all;
    for (uint32_t s = 1; s <= maxSize; ++s) {
        const auto& batch = rec(rec, s, maxFree);
        all.insert(all.end(), batch.begin(), batch.end());
    }
    return all;
}

}  // namespace lnlfpc
