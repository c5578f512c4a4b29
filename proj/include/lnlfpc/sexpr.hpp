#pragma once

#include <string>

#include "lnlfpc/syntax.hpp"

namespace lnlfpc {

// Stable s-expression text forms used by the `elab` command and golden tests.
//
//   types:  (tvar N) (sum A B) (tensor A B) (lolli A B) (bang A) (mu "X" A)
//   terms:  (var N "x") (left A B M) (right A B M) (case M "x" N "y" P)
//           (pair M N) (letpair M "x" "y" N) (lam "x" A M) (app M N)
//           (lift M) (force M) (fold T M) (unfold M)
//
// Name hints are carried for readability but never affect equality.
std::string typeToSexpr(const TypeRef& ty);
std::string termToSexpr(const TermRef& t);

}  // namespace lnlfpc
