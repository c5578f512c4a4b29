#pragma once

#include <cstdint>
#include <string>

#include "lnlfpc/diagnostics.hpp"
#include "lnlfpc/elaborate.hpp"
#include "lnlfpc/syntax.hpp"

namespace lnlfpc {

enum class OutcomeKind : uint8_t { Value, OutOfFuel, Stuck };

struct EvalOutcome {
    OutcomeKind kind;
    TermRef value;    // Value: satisfies isValue
    TermRef stuckAt;  // Stuck: the offending eliminator or free variable
    std::string reason;

    bool isValue() const { return kind == OutcomeKind::Value; }

    static EvalOutcome ofValue(TermRef v) { return {OutcomeKind::Value, std::move(v), nullptr, {}}; }
    static EvalOutcome outOfFuel() { return {OutcomeKind::OutOfFuel, nullptr, nullptr, {}}; }
    static EvalOutcome stuck(TermRef at, std::string reason) {
        return {OutcomeKind::Stuck, nullptr, std::move(at), std::move(reason)};
    }
};

// Fuel-bounded call-by-value big-step evaluation by substitution. Each
// big-step rule application (one recursive evaluation of a subterm) costs one
// unit of fuel, which makes results monotone in the fuel bound. The machine
// keeps its own continuation stack on the heap, so deep or divergent programs
// exhaust fuel rather than the native stack.
//
// Intended for closed terms: reaching a free variable is Stuck, as is any
// eliminator applied to a value of the wrong shape (impossible for well-typed
// closed programs).
EvalOutcome eval(const TermRef& term, uint64_t fuel);

// Evaluates prog.main; E-NO-MAIN when the program has none.
Result<EvalOutcome> runMain(const CoreProgram& prog, uint64_t fuel);

}  // namespace lnlfpc
