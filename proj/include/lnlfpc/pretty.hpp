#pragma once

#include <string>

#include "lnlfpc/surface.hpp"
#include "lnlfpc/syntax.hpp"

namespace lnlfpc {

// Concrete-syntax printers. printSurfaceTerm(parse(s)) reparses to an equal
// surface AST; parentheses are inserted from precedence, never stored.
std::string printSurfaceType(const STypeRef& ty);
std::string printSurfaceTerm(const STermRef& t);

// Renders a core (De Bruijn) type or term back to concrete syntax, inventing
// names from hints. Reparsing and elaborating the output of a closed core
// term yields an identical core term.
std::string printCoreType(const TypeRef& ty);
std::string printCoreTerm(const TermRef& t);

}  // namespace lnlfpc
