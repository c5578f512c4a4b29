#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lnlfpc/check.hpp"
#include "lnlfpc/syntax.hpp"

namespace lnlfpc {

// The fixed pools for the checker/oracle agreement grid.
const std::vector<TypeRef>& gridTypeAtoms();          // I, Void, I -o I, Nat
const std::vector<TypingContext>& gridContextPool();  // closed contexts, <= 2 entries

struct GridOptions {
    // Bound for the type-coherent enumeration (annotations chosen so child
    // types line up; rejects still arise from linearity).
    uint64_t wellTypedMaxSize = 7;
    // Bound for the exhaustive enumeration over all annotation assignments
    // (kept smaller: it grows much faster and mostly exercises the
    // ill-annotated reject paths).
    uint64_t exhaustiveMaxSize = 4;
};

struct GridStats {
    uint64_t points = 0;
    uint64_t wellTypedPoints = 0;
    uint64_t exhaustivePoints = 0;
    uint64_t accepted = 0;       // points both sides accept
    uint64_t disagreements = 0;
    std::vector<std::string> samples;  // first few disagreements, for reports
};

// Compares checkJudgement against the declarative derivation search on every
// enumerated (context, term) pair, at the unique annotation-determined type.
// A term with no such type must be rejected by both sides.
GridStats runOracleGrid(const GridOptions& opts = {});

// All core types with at most maxSize nodes and free indices < maxFree,
// over mu/sum/tensor/lolli/bang/tvar (for quantified type-level properties).
std::vector<TypeRef> enumTypes(uint32_t maxSize, uint32_t maxFree);

}  // namespace lnlfpc
