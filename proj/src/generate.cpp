#include "lnlfpc/generate.hpp"

#include <algorithm>
#include <vector>

#include "lnlfpc/basis.hpp"

namespace lnlfpc {

namespace {

using Obligations = std::vector<uint32_t>;  // sorted linear indices that must be consumed

struct Scope {
    std::vector<TypeRef> types;  // innermost first
};

Scope pushScope(const Scope& s, const TypeRef& ty) {
    Scope out;
    out.types.reserve(s.types.size() + 1);
    out.types.push_back(ty);
    out.types.insert(out.types.end(), s.types.begin(), s.types.end());
    return out;
}

Obligations shiftObl(const Obligations& o, uint32_t by) {
    Obligations out;
    out.reserve(o.size());
    for (uint32_t i : o) out.push_back(i + by);
    return out;
}

class Gen {
public:
    explicit Gen(std::mt19937_64& rng) : rng_(rng) {}

    // Goal types with known closed inhabitants.
    const std::vector<TypeRef>& goalPool() {
        static const std::vector<TypeRef> pool = [] {
            TypeRef i = unitType(), n = natType(), f = lolliType(unitType(), unitType());
            return std::vector<TypeRef>{
                i,
                n,
                f,
                lolliType(n, n),
                bangType(n),
                bangType(f),
                tensorType(n, n),
                tensorType(i, n),
                sumType(i, n),
                sumType(f, n),
                listNatType(),
                lolliType(n, tensorType(n, n)),
            };
        }();
        return pool;
    }

    uint64_t roll(uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }
    bool chance(uint32_t percent) { return roll(100) < percent; }

    // Closed inhabitant built from introduction forms only; consumes nothing.
    std::optional<TermRef> canonical(const TypeRef& goal, uint32_t guard = 8) {
        if (guard == 0) return std::nullopt;
        switch (goal->tag) {
            case TypeTag::TVar:
                return std::nullopt;
            case TypeTag::Bang: {
                auto body = canonical(goal->body(), guard - 1);
                if (!body) return std::nullopt;
                return liftTerm(*body);
            }
            case TypeTag::Lolli:
                if (typeEq(goal->left, goal->right)) return lamTerm("x", goal->left, var(0, "x"));
                if (isNonLinear(goal->left)) {
                    auto body = canonical(goal->right, guard - 1);
                    if (!body) return std::nullopt;
                    return lamTerm("x", goal->left, shiftTerm(*body, 1, 0));
                }
                return std::nullopt;
            case TypeTag::Sum: {
                bool leftFirst = chance(50);
                for (int attempt = 0; attempt < 2; ++attempt) {
                    bool pickLeft = (attempt == 0) == leftFirst;
                    auto sub = canonical(pickLeft ? goal->left : goal->right, guard - 1);
                    if (sub)
                        return pickLeft ? leftTerm(goal->left, goal->right, *sub)
                                        : rightTerm(goal->left, goal->right, *sub);
                }
                return std::nullopt;
            }
            case TypeTag::Tensor: {
                auto a = canonical(goal->left, guard - 1);
                auto b = canonical(goal->right, guard - 1);
                if (!a || !b) return std::nullopt;
                return pairTerm(*a, *b);
            }
            case TypeTag::Mu: {
                if (typeEq(goal, natType())) return numeralValue(roll(4));
                auto body = canonical(unrollMu(goal), guard - 1);
                if (!body) return std::nullopt;
                return foldTerm(goal, *body);
            }
        }
        return std::nullopt;
    }

    // A term of type `goal` under `scope` consuming exactly the linear
    // variables in `must`.
    std::optional<TermRef> gen(const Scope& scope, const Obligations& must, const TypeRef& goal,
                               uint32_t depth) {
        for (int attempt = 0; attempt < 10; ++attempt) {
            auto result = genOnce(scope, must, goal, depth);
            if (result) return result;
        }
        return std::nullopt;
    }

private:
    std::optional<TermRef> tryVar(const Scope& scope, const Obligations& must,
                                  const TypeRef& goal) {
        std::vector<uint32_t> candidates;
        for (uint32_t i = 0; i < scope.types.size(); ++i) {
            if (!typeEq(scope.types[i], goal)) continue;
            if (isLinearType(scope.types[i])) {
                if (must.size() == 1 && must[0] == i) candidates.push_back(i);
            } else if (must.empty()) {
                candidates.push_back(i);
            }
        }
        if (candidates.empty()) return std::nullopt;
        return var(candidates[roll(candidates.size())], "v");
    }

    std::pair<Obligations, Obligations> splitObl(const Obligations& must) {
        Obligations a, b;
        for (uint32_t i : must) (chance(50) ? a : b).push_back(i);
        return {std::move(a), std::move(b)};
    }

    std::optional<TermRef> genOnce(const Scope& scope, const Obligations& must,
                                   const TypeRef& goal, uint32_t depth) {
        // Base: a variable hit or a canonical inhabitant.
        if (depth == 0 || chance(15)) {
            if (auto v = tryVar(scope, must, goal)) return v;
            if (must.empty()) {
                if (auto c = canonical(goal)) {
                    // Canonical terms are closed; lift them into scope.
                    return shiftTerm(*c, static_cast<uint32_t>(scope.types.size()), 0);
                }
            }
            if (depth == 0) return std::nullopt;
        }

        enum Rule { Intro, UseApp, UseCase, UseLetPair, UseForce, UseUnfold, UseVar };
        std::vector<Rule> rules = {Intro, Intro, Intro, UseApp, UseCase, UseLetPair, UseVar};
        if (must.empty()) rules.push_back(UseForce);
        if (typeEq(goal, unrollMu(natType())) || typeEq(goal, unrollMu(listNatType())))
            rules.push_back(UseUnfold);

        switch (rules[roll(rules.size())]) {
            case UseVar:
                return tryVar(scope, must, goal);
            case Intro:
                return genIntro(scope, must, goal, depth);
            case UseApp: {
                TypeRef argTy = pickFirstOrderType(scope);
                auto [toFn, toArg] = splitObl(must);
                auto fn = gen(scope, toFn, lolliType(argTy, goal), depth - 1);
                if (!fn) return std::nullopt;
                auto arg = gen(scope, toArg, argTy, depth - 1);
                if (!arg) return std::nullopt;
                return appTerm(*fn, *arg);
            }
            case UseCase: {
                TypeRef scrTy = pickSumType(scope);
                auto [toScr, toBranches] = splitObl(must);
                auto scr = gen(scope, toScr, scrTy, depth - 1);
                if (!scr) return std::nullopt;
                auto mkBranch = [&](const TypeRef& binder) -> std::optional<TermRef> {
                    Scope inner = pushScope(scope, binder);
                    Obligations innerMust = shiftObl(toBranches, 1);
                    if (isLinearType(binder)) innerMust.insert(innerMust.begin(), 0);
                    return gen(inner, innerMust, goal, depth - 1);
                };
                auto lb = mkBranch(scrTy->left);
                if (!lb) return std::nullopt;
                auto rb = mkBranch(scrTy->right);
                if (!rb) return std::nullopt;
                return caseTerm(*scr, "x", *lb, "y", *rb);
            }
            case UseLetPair: {
                TypeRef scrTy = pickTensorType(scope);
                auto [toScr, toBody] = splitObl(must);
                auto scr = gen(scope, toScr, scrTy, depth - 1);
                if (!scr) return std::nullopt;
                Scope inner = pushScope(pushScope(scope, scrTy->left), scrTy->right);
                Obligations innerMust = shiftObl(toBody, 2);
                if (isLinearType(scrTy->right)) innerMust.insert(innerMust.begin(), 0);
                if (isLinearType(scrTy->left)) {
                    innerMust.push_back(1);
                    std::sort(innerMust.begin(), innerMust.end());
                }
                auto body = gen(inner, innerMust, goal, depth - 1);
                if (!body) return std::nullopt;
                return letPairTerm(*scr, "x", "y", *body);
            }
            case UseForce: {
                auto body = gen(scope, must, bangType(goal), depth - 1);
                if (!body) return std::nullopt;
                return forceTerm(*body);
            }
            case UseUnfold: {
                TypeRef muTy = typeEq(goal, unrollMu(natType())) ? natType() : listNatType();
                auto body = gen(scope, must, muTy, depth - 1);
                if (!body) return std::nullopt;
                return unfoldTerm(*body);
            }
        }
        return std::nullopt;
    }

    std::optional<TermRef> genIntro(const Scope& scope, const Obligations& must,
                                    const TypeRef& goal, uint32_t depth) {
        switch (goal->tag) {
            case TypeTag::Sum: {
                bool leftSide = chance(50);
                const TypeRef& sub = leftSide ? goal->left : goal->right;
                auto body = gen(scope, must, sub, depth - 1);
                if (!body) return std::nullopt;
                return leftSide ? leftTerm(goal->left, goal->right, *body)
                                : rightTerm(goal->left, goal->right, *body);
            }
            case TypeTag::Tensor: {
                auto [toFirst, toSecond] = splitObl(must);
                auto a = gen(scope, toFirst, goal->left, depth - 1);
                if (!a) return std::nullopt;
                auto b = gen(scope, toSecond, goal->right, depth - 1);
                if (!b) return std::nullopt;
                return pairTerm(*a, *b);
            }
            case TypeTag::Lolli: {
                Scope inner = pushScope(scope, goal->left);
                Obligations innerMust = shiftObl(must, 1);
                if (isLinearType(goal->left)) innerMust.insert(innerMust.begin(), 0);
                auto body = gen(inner, innerMust, goal->right, depth - 1);
                if (!body) return std::nullopt;
                return lamTerm("x", goal->left, *body);
            }
            case TypeTag::Bang: {
                if (!must.empty()) return std::nullopt;  // promotion needs a non-linear context
                auto body = gen(scope, {}, goal->body(), depth - 1);
                if (!body) return std::nullopt;
                return liftTerm(*body);
            }
            case TypeTag::Mu: {
                auto body = gen(scope, must, unrollMu(goal), depth - 1);
                if (!body) return std::nullopt;
                return foldTerm(goal, *body);
            }
            case TypeTag::TVar:
                return std::nullopt;
        }
        return std::nullopt;
    }

    TypeRef pickFirstOrderType(const Scope& scope) {
        // Prefer a type already in scope so variables get exercised.
        if (!scope.types.empty() && chance(40)) {
            const TypeRef& t = scope.types[roll(scope.types.size())];
            if (t->tag != TypeTag::TVar) return t;
        }
        return goalPool()[roll(goalPool().size())];
    }

    TypeRef pickSumType(const Scope& scope) {
        for (const TypeRef& t : scope.types)
            if (t->tag == TypeTag::Sum && chance(50)) return t;
        static const std::vector<TypeRef> sums = {
            sumType(unitType(), natType()),
            sumType(natType(), natType()),
            sumType(lolliType(unitType(), unitType()), unitType()),
        };
        return sums[roll(sums.size())];
    }

    TypeRef pickTensorType(const Scope& scope) {
        for (const TypeRef& t : scope.types)
            if (t->tag == TypeTag::Tensor && chance(50)) return t;
        static const std::vector<TypeRef> tensors = {
            tensorType(natType(), natType()),
            tensorType(unitType(), natType()),
            tensorType(lolliType(unitType(), unitType()), natType()),
        };
        return tensors[roll(tensors.size())];
    }

    std::mt19937_64& rng_;
};

}  // namespace

GeneratedTerm TermGenerator::closed(uint32_t maxDepth) {
    Gen gen(rng_);
    for (;;) {
        const auto& pool = gen.goalPool();
        TypeRef goal = pool[rng_() % pool.size()];
        Scope scope;
        if (auto term = gen.gen(scope, {}, goal, maxDepth)) return GeneratedTerm{*term, goal};
    }
}

}  // namespace lnlfpc
