#include "lnlfpc/basis.hpp"

namespace lnlfpc {

TypeRef voidType() {
    static const TypeRef t = muType("X", tvar(0));
    return t;
}

TypeRef unitType() {
    static const TypeRef t = bangType(lolliType(voidType(), voidType()));
    return t;
}

TypeRef natType() {
    static const TypeRef t = muType("X", sumType(unitType(), tvar(0)));
    return t;
}

TypeRef listNatType() {
    static const TypeRef t = muType("X", sumType(unitType(), tensorType(natType(), tvar(0))));
    return t;
}

TypeRef streamOf(const TypeRef& elem) {
    return muType("X", tensorType(shiftType(elem, 1, 0), bangType(tvar(0))));
}

TypeRef streamNatType() {
    static const TypeRef t = streamOf(natType());
    return t;
}

TermRef starValue() {
    static const TermRef t = liftTerm(lamTerm("x", voidType(), var(0, "x")));
    return t;
}

TermRef numeralValue(uint64_t n) {
    TermRef acc = foldTerm(natType(), leftTerm(unitType(), natType(), starValue()));
    for (uint64_t i = 0; i < n; ++i)
        acc = foldTerm(natType(), rightTerm(unitType(), natType(), acc));
    return acc;
}

}  // namespace lnlfpc
