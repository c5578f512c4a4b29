#include "lnlfpc/lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace lnlfpc {

namespace {

const std::unordered_map<std::string_view, Tok>& keywordTable() {
    static const std::unordered_map<std::string_view, Tok> table = {
        {"mu", Tok::KwMu},       {"rec", Tok::KwRec},   {"case", Tok::KwCase},
        {"of", Tok::KwOf},       {"left", Tok::KwLeft}, {"right", Tok::KwRight},
        {"let", Tok::KwLet},     {"in", Tok::KwIn},     {"fold", Tok::KwFold},
        {"unfold", Tok::KwUnfold}, {"lift", Tok::KwLift}, {"force", Tok::KwForce},
        {"type", Tok::KwType},   {"def", Tok::KwDef},   {"main", Tok::KwMain},
    };
    return table;
}

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identCont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> lex(std::string_view src, std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    uint32_t line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok kind, uint32_t startCol, uint32_t len) {
        out.push_back(Token{kind, Span{line, startCol, len}, {}, 0});
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;  // line comment; newline handled above
        }
        uint32_t startCol = col;
        if (identStart(c)) {
            size_t j = i + 1;
            while (j < src.size() && identCont(src[j])) ++j;
            std::string_view word = src.substr(i, j - i);
            auto kw = keywordTable().find(word);
            Token t;
            t.kind = kw == keywordTable().end() ? Tok::Ident : kw->second;
            t.span = Span{line, startCol, static_cast<uint32_t>(word.size())};
            if (t.kind == Tok::Ident) t.text = std::string(word);
            out.push_back(std::move(t));
            col += static_cast<uint32_t>(j - i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            uint64_t value = 0;
            bool overflow = false;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                value = value * 10 + static_cast<uint64_t>(src[j] - '0');
                if (value > 10'000'000) overflow = true;  // numerals expand to O(n) nodes
                ++j;
            }
            uint32_t len = static_cast<uint32_t>(j - i);
            if (overflow) {
                diags.push_back(Diagnostic::error("E-PARSE", "numeral literal too large",
                                                  Span{line, startCol, len}));
                value = 0;
            }
            Token t;
            t.kind = Tok::NatLit;
            t.span = Span{line, startCol, len};
            t.natValue = value;
            out.push_back(std::move(t));
            col += len;
            i = j;
            continue;
        }
        if (c == '-') {
            if (i + 1 < src.size() && src[i + 1] == 'o') {
                push(Tok::Lolli, startCol, 2);
                i += 2;
                col += 2;
                continue;
            }
            if (i + 1 < src.size() && src[i + 1] == '>') {
                push(Tok::Arrow, startCol, 2);
                i += 2;
                col += 2;
                continue;
            }
            diags.push_back(Diagnostic::error("E-PARSE", "stray '-' (expected '-o', '->' or '--')",
                                              Span{line, startCol, 1}));
            ++i;
            ++col;
            continue;
        }
        Tok kind;
        switch (c) {
            case '\\': kind = Tok::Backslash; break;
            case ':': kind = Tok::Colon; break;
            case '.': kind = Tok::Dot; break;
            case ';': kind = Tok::Semi; break;
            case '=': kind = Tok::Equals; break;
            case '<': kind = Tok::Lt; break;
            case '>': kind = Tok::Gt; break;
            case ',': kind = Tok::Comma; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case '{': kind = Tok::LBrace; break;
            case '}': kind = Tok::RBrace; break;
            case '|': kind = Tok::Bar; break;
            case '+': kind = Tok::Plus; break;
            case '*': kind = Tok::Star; break;
            case '!': kind = Tok::Bang; break;
            default:
                diags.push_back(Diagnostic::error(
                    "E-PARSE", std::string("unexpected character '") + c + "'",
                    Span{line, startCol, 1}));
                ++i;
                ++col;
                continue;
        }
        push(kind, startCol, 1);
        ++i;
        ++col;
    }
    out.push_back(Token{Tok::Eof, Span{line, col, 1}, {}, 0});
    return out;
}

const char* tokenName(Tok kind) {
    switch (kind) {
        case Tok::Ident: return "identifier";
        case Tok::NatLit: return "numeral";
        case Tok::KwMu: return "'mu'";
        case Tok::KwRec: return "'rec'";
        case Tok::KwCase: return "'case'";
        case Tok::KwOf: return "'of'";
        case Tok::KwLeft: return "'left'";
        case Tok::KwRight: return "'right'";
        case Tok::KwLet: return "'let'";
        case Tok::KwIn: return "'in'";
        case Tok::KwFold: return "'fold'";
        case Tok::KwUnfold: return "'unfold'";
        case Tok::KwLift: return "'lift'";
        case Tok::KwForce: return "'force'";
        case Tok::KwType: return "'type'";
        case Tok::KwDef: return "'def'";
        case Tok::KwMain: return "'main'";
        case Tok::Backslash: return "'\\'";
        case Tok::Colon: return "':'";
        case Tok::Dot: return "'.'";
        case Tok::Semi: return "';'";
        case Tok::Equals: return "'='";
        case Tok::Lt: return "'<'";
        case Tok::Gt: return "'>'";
        case Tok::Comma: return "','";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::Bar: return "'|'";
        case Tok::Plus: return "'+'";
        case Tok::Star: return "'*'";
        case Tok::Bang: return "'!'";
        case Tok::Lolli: return "'-o'";
        case Tok::Arrow: return "'->'";
        case Tok::Eof: return "end of input";
    }
    return "?";
}

}  // namespace lnlfpc
