#pragma once

#include "lnlfpc/syntax.hpp"

namespace lnlfpc {

// Canonical closed types of the standard prelude, in core form.
//   Void      = mu X. X
//   I         = !(Void -o Void)
//   Nat       = mu X. I + X
//   ListNat   = mu X. I + Nat * X
//   StreamNat = mu X. Nat * !X
TypeRef voidType();
TypeRef unitType();
TypeRef natType();
TypeRef listNatType();
TypeRef streamOf(const TypeRef& elem);  // mu X. elem * !X
TypeRef streamNatType();

// star = lift \x:Void. x, the canonical value of unit type.
TermRef starValue();

// The canonical Nat value for n: n nested right-injections under fold
// around left star.
TermRef numeralValue(uint64_t n);

}  // namespace lnlfpc
