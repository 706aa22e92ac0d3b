#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "satcc/diag.hpp"

namespace satcc {

enum class Tok {
    End,
    Ident,
    IntLit,
    FloatLit,
    Pragma,   // whole logical pragma line, continuations folded in
    KwInt,
    KwDouble,
    KwVoid,
    KwIf,
    KwElse,
    KwFor,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Semi,
    Comma,
    Assign,
    PlusAssign,
    MinusAssign,
    StarAssign,
    Plus,
    Minus,
    Star,
    Slash,
    Percent,
    PlusPlus,
    MinusMinus,
    Lt,
    Le,
    Gt,
    Ge,
    EqEq,
    NotEq,
    Not,
    AndAnd,
    OrOr,
    Amp,    // rejected later: address-of
    Dot,    // rejected later: member access
    Arrow,  // rejected later: member access
};

struct Token {
    Tok kind = Tok::End;
    SourceLoc loc{};
    std::string text;      // identifier / literal spelling / pragma raw text
    long long ival = 0;
    double fval = 0.0;
    size_t offset = 0;     // byte offset of token start in the source
    size_t end_offset = 0; // one past the last byte of the token
};

std::vector<Token> lex(std::string_view source);

}  // namespace satcc
