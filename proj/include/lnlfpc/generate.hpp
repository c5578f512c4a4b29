#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "lnlfpc/syntax.hpp"

namespace lnlfpc {

struct GeneratedTerm {
    TermRef term;
    TypeRef type;
};

// Random well-typed closed terms, produced by inverting the formation rules:
// the generator picks a goal type and a rule whose conclusion matches it,
// splitting linear obligations between premises and retrying on dead ends.
// Every produced term passes checkJudgement at its reported type (asserted by
// the test suites, not assumed).
class TermGenerator {
public:
    explicit TermGenerator(uint64_t seed) : rng_(seed) {}

    GeneratedTerm closed(uint32_t maxDepth = 8);

private:
    std::mt19937_64 rng_;
};

}  // namespace lnlfpc
