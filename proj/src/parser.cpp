#include "lnlfpc/parser.hpp"

#include <unordered_set>

#include "lnlfpc/lexer.hpp"

namespace lnlfpc {

namespace {

// Thrown inside an item, caught by the module loop for panic recovery.
struct ParseFailure {
    Diagnostic diag;
};

[[noreturn]] void fail(std::string message, Span span) {
    throw ParseFailure{Diagnostic::error("E-PARSE", std::move(message), span)};
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
    bool at(Tok k) const { return peek().kind == k; }

    Token advance() { return toks_[at(Tok::Eof) ? pos_ : pos_++]; }

    Token expect(Tok k) {
        if (!at(k))
            fail(std::string("expected ") + tokenName(k) + ", found " + tokenName(peek().kind),
                 peek().span);
        return advance();
    }

    std::string expectIdent() { return expect(Tok::Ident).text; }

    // -- types ---------------------------------------------------------------

    STypeRef parseType() {
        if (at(Tok::KwMu)) {
            Span sp = advance().span;
            std::string name = expectIdent();
            expect(Tok::Dot);
            return sMu(std::move(name), parseType(), sp);
        }
        return parseArrow();
    }

    STypeRef parseArrow() {
        STypeRef lhs = parseSum();
        if (at(Tok::Lolli)) {
            Span sp = advance().span;
            return sLolli(std::move(lhs), parseType(), sp);  // right-assoc, lowest precedence
        }
        return lhs;
    }

    STypeRef parseSum() {
        STypeRef acc = parseProd();
        while (at(Tok::Plus)) {
            Span sp = advance().span;
            acc = sSum(std::move(acc), parseProd(), sp);
        }
        return acc;
    }

    STypeRef parseProd() {
        STypeRef acc = parseBangType();
        while (at(Tok::Star)) {
            Span sp = advance().span;
            acc = sTensor(std::move(acc), parseBangType(), sp);
        }
        return acc;
    }

    STypeRef parseBangType() {
        if (at(Tok::Bang)) {
            Span sp = advance().span;
            return sBang(parseBangType(), sp);
        }
        return parseTypeAtom();
    }

    STypeRef parseTypeAtom() {
        if (at(Tok::Ident)) {
            Token t = advance();
            return sName(t.text, t.span);
        }
        if (at(Tok::LParen)) {
            advance();
            STypeRef inner = parseType();
            expect(Tok::RParen);
            return inner;
        }
        fail(std::string("expected a type, found ") + tokenName(peek().kind), peek().span);
    }

    // -- terms ---------------------------------------------------------------

    bool atBinderForm() const {
        switch (peek().kind) {
            case Tok::Backslash:
            case Tok::KwRec:
            case Tok::KwCase:
            case Tok::KwLet:
                return true;
            default:
                return false;
        }
    }

    bool atPrefixStart() const {
        switch (peek().kind) {
            case Tok::KwLeft:
            case Tok::KwRight:
            case Tok::KwFold:
            case Tok::KwUnfold:
            case Tok::KwLift:
            case Tok::KwForce:
            case Tok::Ident:
            case Tok::NatLit:
            case Tok::Lt:
            case Tok::LParen:
                return true;
            default:
                return false;
        }
    }

    STermRef parseTermTop() {
        if (atBinderForm()) return parseBinderForm();
        return parseAppSeq();
    }

    STermRef parseBinderForm() {
        switch (peek().kind) {
            case Tok::Backslash: {
                Span sp = advance().span;
                std::string name = expectIdent();
                expect(Tok::Colon);
                STypeRef ty = parseType();
                expect(Tok::Dot);
                return stLam(std::move(name), std::move(ty), parseTermTop(), sp);
            }
            case Tok::KwRec: {
                Span sp = advance().span;
                std::string name = expectIdent();
                expect(Tok::Colon);
                STypeRef ty = parseType();
                expect(Tok::Dot);
                return stRec(std::move(name), std::move(ty), parseTermTop(), sp);
            }
            case Tok::KwCase: {
                Span sp = advance().span;
                STermRef scrutinee = parseTermTop();
                expect(Tok::KwOf);
                expect(Tok::LBrace);
                expect(Tok::KwLeft);
                std::string ln = expectIdent();
                expect(Tok::Arrow);
                STermRef lb = parseTermTop();
                expect(Tok::Bar);
                expect(Tok::KwRight);
                std::string rn = expectIdent();
                expect(Tok::Arrow);
                STermRef rb = parseTermTop();
                expect(Tok::RBrace);
                return stCase(std::move(scrutinee), std::move(ln), std::move(lb), std::move(rn),
                              std::move(rb), sp);
            }
            case Tok::KwLet: {
                Span sp = advance().span;
                expect(Tok::Lt);
                std::string n1 = expectIdent();
                expect(Tok::Comma);
                std::string n2 = expectIdent();
                expect(Tok::Gt);
                expect(Tok::Equals);
                STermRef scrutinee = parseTermTop();
                expect(Tok::KwIn);
                return stLetPair(std::move(scrutinee), std::move(n1), std::move(n2), parseTermTop(),
                                 sp);
            }
            default:
                fail("expected a term", peek().span);
        }
    }

    STermRef parseAppSeq() {
        STermRef acc = parsePrefix();
        while (atPrefixStart() || atBinderForm()) {
            Span sp = peek().span;
            // A binder form as argument swallows the rest of the sequence.
            STermRef arg = atBinderForm() ? parseBinderForm() : parsePrefix();
            acc = stApp(std::move(acc), std::move(arg), sp);
        }
        return acc;
    }

    // Operand of a prefix operator: another prefix, or a trailing binder form.
    STermRef parsePrefixOperand() {
        if (atBinderForm()) return parseBinderForm();
        return parsePrefix();
    }

    STermRef parsePrefix() {
        switch (peek().kind) {
            case Tok::KwLeft:
            case Tok::KwRight: {
                bool isLeft = peek().kind == Tok::KwLeft;
                Span sp = advance().span;
                expect(Tok::LBracket);
                STypeRef a = parseType();
                expect(Tok::Comma);
                STypeRef b = parseType();
                expect(Tok::RBracket);
                STermRef body = parsePrefixOperand();
                return isLeft ? stLeft(std::move(a), std::move(b), std::move(body), sp)
                              : stRight(std::move(a), std::move(b), std::move(body), sp);
            }
            case Tok::KwFold: {
                Span sp = advance().span;
                expect(Tok::LBracket);
                STypeRef ty = parseType();
                expect(Tok::RBracket);
                return stFold(std::move(ty), parsePrefixOperand(), sp);
            }
            case Tok::KwUnfold: {
                Span sp = advance().span;
                return stUnfold(parsePrefixOperand(), sp);
            }
            case Tok::KwLift: {
                Span sp = advance().span;
                return stLift(parsePrefixOperand(), sp);
            }
            case Tok::KwForce: {
                Span sp = advance().span;
                return stForce(parsePrefixOperand(), sp);
            }
            default:
                return parseTermAtom();
        }
    }

    STermRef parseTermAtom() {
        switch (peek().kind) {
            case Tok::Ident: {
                Token t = advance();
                return stName(t.text, t.span);
            }
            case Tok::NatLit: {
                Token t = advance();
                return stNat(t.natValue, t.span);
            }
            case Tok::Lt: {
                Span sp = advance().span;
                STermRef first = parseTermTop();
                expect(Tok::Comma);
                STermRef second = parseTermTop();
                expect(Tok::Gt);
                return stPair(std::move(first), std::move(second), sp);
            }
            case Tok::LParen: {
                advance();
                STermRef inner = parseTermTop();
                expect(Tok::RParen);
                return inner;
            }
            default:
                fail(std::string("expected a term, found ") + tokenName(peek().kind), peek().span);
        }
    }

    // -- module --------------------------------------------------------------

    SurfaceModule parseModuleItems(std::vector<Diagnostic>& diags) {
        SurfaceModule mod;
        std::unordered_set<std::string> aliasNames;
        std::unordered_set<std::string> defNames;
        while (!at(Tok::Eof)) {
            try {
                switch (peek().kind) {
                    case Tok::KwType: {
                        advance();
                        Span nameSpan = peek().span;
                        std::string name = expectIdent();
                        if (!aliasNames.insert(name).second)
                            fail("duplicate type alias '" + name + "'", nameSpan);
                        expect(Tok::Equals);
                        STypeRef body = parseType();
                        expect(Tok::Semi);
                        mod.aliases.push_back(SurfaceAlias{std::move(name), nameSpan, std::move(body)});
                        break;
                    }
                    case Tok::KwDef: {
                        advance();
                        Span nameSpan = peek().span;
                        std::string name = expectIdent();
                        if (!defNames.insert(name).second)
                            fail("duplicate definition '" + name + "'", nameSpan);
                        expect(Tok::Colon);
                        STypeRef annot = parseType();
                        expect(Tok::Equals);
                        STermRef body = parseTermTop();
                        expect(Tok::Semi);
                        mod.defs.push_back(
                            SurfaceDef{std::move(name), nameSpan, std::move(annot), std::move(body)});
                        break;
                    }
                    case Tok::KwMain: {
                        Span sp = advance().span;
                        if (mod.main) fail("duplicate 'main'", sp);
                        expect(Tok::Equals);
                        STermRef body = parseTermTop();
                        expect(Tok::Semi);
                        mod.main = std::move(body);
                        mod.mainSpan = sp;
                        break;
                    }
                    default:
                        fail(std::string("expected 'type', 'def' or 'main', found ") +
                                 tokenName(peek().kind),
                             peek().span);
                }
            } catch (ParseFailure& f) {
                diags.push_back(std::move(f.diag));
                skipToSemi();
            }
        }
        return mod;
    }

    void skipToSemi() {
        while (!at(Tok::Eof) && !at(Tok::Semi)) advance();
        if (at(Tok::Semi)) advance();
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

ParseModuleResult parseModule(std::string_view source) {
    ParseModuleResult result;
    std::vector<Token> toks = lex(source, result.diagnostics);
    if (!result.diagnostics.empty()) return result;  // lexical errors stop early
    Parser parser(std::move(toks));
    result.module = parser.parseModuleItems(result.diagnostics);
    return result;
}

ParseTermResult parseTerm(std::string_view source) {
    ParseTermResult result;
    std::vector<Token> toks = lex(source, result.diagnostics);
    if (!result.diagnostics.empty()) return result;
    Parser parser(std::move(toks));
    try {
        STermRef t = parser.parseTermTop();
        if (!parser.at(Tok::Eof))
            fail(std::string("unexpected ") + tokenName(parser.peek().kind) + " after term",
                 parser.peek().span);
        result.term = std::move(t);
    } catch (ParseFailure& f) {
        result.diagnostics.push_back(std::move(f.diag));
    }
    return result;
}

}  // namespace lnlfpc
