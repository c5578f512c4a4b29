#include "lnlfpc/eval.hpp"

#include <vector>

namespace lnlfpc {

namespace {

enum class FrameKind : uint8_t {
    SumWrap,     // rebuild left/right around the child value
    FoldWrap,    // rebuild fold around the child value
    PairFirst,   // first component done next: evaluate second (term in a)
    PairSecond,  // second done: rebuild pair (first value in a)
    CaseScrut,   // scrutinee done: branch and substitute (node in src)
    LetScrut,    // scrutinee done: destructure and substitute (node in src)
    AppFn,       // function done: evaluate argument (arg term in a, node in src)
    AppArg,      // argument done: beta-reduce (function value in a, node in src)
    ForceBody,   // body done: run the suspension (node in src)
    UnfoldBody,  // body done: strip the fold (node in src)
};

struct Frame {
    FrameKind kind;
    TermRef a;    // payload term/value, per kind
    TermRef src;  // originating node, kept alive for Stuck reports
};

}  // namespace

EvalOutcome eval(const TermRef& term, uint64_t fuel) {
    std::vector<Frame> stack;
    TermRef current = term;   // term being descended into
    TermRef produced;         // value being returned to the top frame
    bool descending = true;

    for (;;) {
        if (descending) {
            if (fuel == 0) return EvalOutcome::outOfFuel();
            --fuel;
            if (current->tag == TermTag::Var)
                return EvalOutcome::stuck(current, "free variable reached during evaluation");
            if (isValue(current)) {
                produced = current;
                descending = false;
                continue;
            }
            switch (current->tag) {
                case TermTag::Left:
                case TermTag::Right:
                    stack.push_back(Frame{FrameKind::SumWrap, nullptr, current});
                    current = current->child0;
                    continue;
                case TermTag::Fold:
                    stack.push_back(Frame{FrameKind::FoldWrap, nullptr, current});
                    current = current->child0;
                    continue;
                case TermTag::Pair:
                    stack.push_back(Frame{FrameKind::PairFirst, current->child1, current});
                    current = current->child0;
                    continue;
                case TermTag::Case:
                    stack.push_back(Frame{FrameKind::CaseScrut, nullptr, current});
                    current = current->child0;
                    continue;
                case TermTag::LetPair:
                    stack.push_back(Frame{FrameKind::LetScrut, nullptr, current});
                    current = current->child0;
                    continue;
                case TermTag::App:
                    stack.push_back(Frame{FrameKind::AppFn, current->child1, current});
                    current = current->child0;
                    continue;
                case TermTag::Force:
                    stack.push_back(Frame{FrameKind::ForceBody, nullptr, current});
                    current = current->child0;
                    continue;
                case TermTag::Unfold:
                    stack.push_back(Frame{FrameKind::UnfoldBody, nullptr, current});
                    current = current->child0;
                    continue;
                default:
                    // Var/Lam/Lift are handled above (values or stuck).
                    return EvalOutcome::stuck(current, "malformed term");
            }
        }

        // Returning `produced` to the innermost pending frame.
        if (stack.empty()) return EvalOutcome::ofValue(produced);
        Frame frame = std::move(stack.back());
        stack.pop_back();
        switch (frame.kind) {
            case FrameKind::SumWrap:
                produced = frame.src->tag == TermTag::Left
                               ? leftTerm(frame.src->annotA, frame.src->annotB, produced)
                               : rightTerm(frame.src->annotA, frame.src->annotB, produced);
                continue;
            case FrameKind::FoldWrap:
                produced = foldTerm(frame.src->annotA, produced);
                continue;
            case FrameKind::PairFirst:
                stack.push_back(Frame{FrameKind::PairSecond, produced, frame.src});
                current = frame.a;
                descending = true;
                continue;
            case FrameKind::PairSecond:
                produced = pairTerm(frame.a, produced);
                continue;
            case FrameKind::CaseScrut: {
                const TermRef& scrutinee = produced;
                if (scrutinee->tag == TermTag::Left) {
                    current = substTerm(frame.src->child1, scrutinee->child0);
                } else if (scrutinee->tag == TermTag::Right) {
                    current = substTerm(frame.src->child2, scrutinee->child0);
                } else {
                    return EvalOutcome::stuck(frame.src, "case scrutinee is not an injection");
                }
                descending = true;
                continue;
            }
            case FrameKind::LetScrut: {
                if (produced->tag != TermTag::Pair)
                    return EvalOutcome::stuck(frame.src, "let-pair scrutinee is not a pair");
                // n[v/x, v'/y]: the second component is bound at index 0, the
                // first at index 1. Both components are closed here, so the
                // two single substitutions compose to the simultaneous one.
                TermRef body = substTerm(frame.src->child1, produced->child1);
                current = substTerm(body, produced->child0);
                descending = true;
                continue;
            }
            case FrameKind::AppFn:
                stack.push_back(Frame{FrameKind::AppArg, produced, frame.src});
                current = frame.a;
                descending = true;
                continue;
            case FrameKind::AppArg: {
                const TermRef& fn = frame.a;
                if (fn->tag != TermTag::Lam)
                    return EvalOutcome::stuck(frame.src, "applied value is not a function");
                current = substTerm(fn->child0, produced);
                descending = true;
                continue;
            }
            case FrameKind::ForceBody: {
                if (produced->tag != TermTag::Lift)
                    return EvalOutcome::stuck(frame.src, "forced value is not a suspension");
                current = produced->child0;
                descending = true;
                continue;
            }
            case FrameKind::UnfoldBody: {
                if (produced->tag != TermTag::Fold)
                    return EvalOutcome::stuck(frame.src, "unfolded value is not a fold");
                produced = produced->child0;  // already a value; no extra step
                continue;
            }
        }
    }
}

Result<EvalOutcome> runMain(const CoreProgram& prog, uint64_t fuel) {
    if (!prog.hasMain())
        return Diagnostic::error("E-NO-MAIN", "program has no main definition");
    return eval(prog.main, fuel);
}

}  // namespace lnlfpc
