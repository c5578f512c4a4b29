#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lnlfpc/diagnostics.hpp"

namespace lnlfpc {

enum class Tok : uint8_t {
    Ident,
    NatLit,
    // keywords
    KwMu,
    KwRec,
    KwCase,
    KwOf,
    KwLeft,
    KwRight,
    KwLet,
    KwIn,
    KwFold,
    KwUnfold,
    KwLift,
    KwForce,
    KwType,
    KwDef,
    KwMain,
    // punctuation
    Backslash,
    Colon,
    Dot,
    Semi,
    Equals,
    Lt,
    Gt,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Bar,
    Plus,
    Star,
    Bang,
    Lolli,   // -o
    Arrow,   // ->
    Eof,
};

struct Token {
    Tok kind;
    Span span;
    std::string text;     // Ident payload
    uint64_t natValue = 0;  // NatLit payload
};

// Tokenizes the whole input. Lexical errors become diagnostics; an Eof token
// is always appended so the parser never runs off the end.
std::vector<Token> lex(std::string_view source, std::vector<Diagnostic>& diags);

const char* tokenName(Tok kind);

}  // namespace lnlfpc
