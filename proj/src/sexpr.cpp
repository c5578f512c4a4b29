#include "lnlfpc/sexpr.hpp"

#include <vector>

namespace lnlfpc {

namespace {

void appendQuoted(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
}

void appendType(std::string& out, const CoreType* ty) {
    switch (ty->tag) {
        case TypeTag::TVar:
            out += "(tvar ";
            out += std::to_string(ty->varIndex);
            out += ')';
            return;
        case TypeTag::Sum:
        case TypeTag::Tensor:
        case TypeTag::Lolli:
            out += ty->tag == TypeTag::Sum ? "(sum " : ty->tag == TypeTag::Tensor ? "(tensor " : "(lolli ";
            appendType(out, ty->left.get());
            out += ' ';
            appendType(out, ty->right.get());
            out += ')';
            return;
        case TypeTag::Bang:
            out += "(bang ";
            appendType(out, ty->left.get());
            out += ')';
            return;
        case TypeTag::Mu:
            out += "(mu ";
            appendQuoted(out, ty->nameHint);
            out += ' ';
            appendType(out, ty->left.get());
            out += ')';
            return;
    }
}

// Printing instruction: either emit a term (recursively via the work stack)
// or emit a literal chunk of text.
struct Job {
    const CoreTerm* term = nullptr;
    std::string text;
};

}  // namespace

std::string typeToSexpr(const TypeRef& ty) {
    std::string out;
    appendType(out, ty.get());
    return out;
}

std::string termToSexpr(const TermRef& t) {
    std::string out;
    std::vector<Job> work;
    work.push_back(Job{t.get(), {}});
    while (!work.empty()) {
        Job job = std::move(work.back());
        work.pop_back();
        if (!job.term) {
            out += job.text;
            continue;
        }
        const CoreTerm* m = job.term;
        auto lit = [&](std::string s) { work.push_back(Job{nullptr, std::move(s)}); };
        auto sub = [&](const TermRef& child) { work.push_back(Job{child.get(), {}}); };
        // Pushed in reverse so jobs pop in source order.
        switch (m->tag) {
            case TermTag::Var: {
                out += "(var ";
                out += std::to_string(m->varIndex);
                out += ' ';
                appendQuoted(out, m->hint);
                out += ')';
                break;
            }
            case TermTag::Left:
            case TermTag::Right: {
                out += m->tag == TermTag::Left ? "(left " : "(right ";
                appendType(out, m->annotA.get());
                out += ' ';
                appendType(out, m->annotB.get());
                out += ' ';
                lit(")");
                sub(m->child0);
                break;
            }
            case TermTag::Case: {
                out += "(case ";
                std::string mid1 = " ", mid2 = " ";
                appendQuoted(mid1, m->hint);
                mid1 += ' ';
                appendQuoted(mid2, m->hint2);
                mid2 += ' ';
                lit(")");
                sub(m->child2);
                lit(mid2);
                sub(m->child1);
                lit(mid1);
                sub(m->child0);
                break;
            }
            case TermTag::Pair: {
                out += "(pair ";
                lit(")");
                sub(m->child1);
                lit(" ");
                sub(m->child0);
                break;
            }
            case TermTag::LetPair: {
                out += "(letpair ";
                std::string mid = " ";
                appendQuoted(mid, m->hint);
                mid += ' ';
                appendQuoted(mid, m->hint2);
                mid += ' ';
                lit(")");
                sub(m->child1);
                lit(mid);
                sub(m->child0);
                break;
            }
            case TermTag::Lam: {
                out += "(lam ";
                appendQuoted(out, m->hint);
                out += ' ';
                appendType(out, m->annotA.get());
                out += ' ';
                lit(")");
                sub(m->child0);
                break;
            }
            case TermTag::App: {
                out += "(app ";
                lit(")");
                sub(m->child1);
                lit(" ");
                sub(m->child0);
                break;
            }
            case TermTag::Lift:
            case TermTag::Force:
            case TermTag::Unfold: {
                out += m->tag == TermTag::Lift ? "(lift " : m->tag == TermTag::Force ? "(force " : "(unfold ";
                lit(")");
                sub(m->child0);
                break;
            }
            case TermTag::Fold: {
                out += "(fold ";
                appendType(out, m->annotA.get());
                out += ' ';
                lit(")");
                sub(m->child0);
                break;
            }
        }
    }
    return out;
}

}  // namespace lnlfpc
