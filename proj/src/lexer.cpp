#include "satcc/lexer.hpp"

#include <cctype>
#include <charconv>
#include <unordered_map>

namespace satcc {

namespace {

const std::unordered_map<std::string_view, Tok> kKeywords = {
    {"int", Tok::KwInt},   {"double", Tok::KwDouble}, {"void", Tok::KwVoid},
    {"if", Tok::KwIf},     {"else", Tok::KwElse},     {"for", Tok::KwFor},
};

struct Cursor {
    std::string_view src;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= src.size(); }
    char peek(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        return c;
    }
    SourceLoc loc() const { return {line, col}; }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> lex(std::string_view source) {
    std::vector<Token> out;
    Cursor cur{source};

    auto push = [&](Tok kind, SourceLoc loc, size_t start, std::string text = {}) {
        Token t;
        t.kind = kind;
        t.loc = loc;
        t.text = std::move(text);
        t.offset = start;
        t.end_offset = cur.pos;
        out.push_back(std::move(t));
    };

    while (!cur.done()) {
        char c = cur.peek();

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.advance();
            continue;
        }

        // Comments.
        if (c == '/' && cur.peek(1) == '/') {
            while (!cur.done() && cur.peek() != '\n') cur.advance();
            continue;
        }
        if (c == '/' && cur.peek(1) == '*') {
            SourceLoc start = cur.loc();
            cur.advance();
            cur.advance();
            while (!(cur.peek() == '*' && cur.peek(1) == '/')) {
                if (cur.done()) throw SyntaxError(start, "unterminated block comment");
                cur.advance();
            }
            cur.advance();
            cur.advance();
            continue;
        }

        // Pragma: capture the physical line from its start, folding
        // backslash continuations, byte-exact including leading whitespace.
        if (c == '#') {
            SourceLoc loc = cur.loc();
            // Walk back over the current line's leading whitespace.
            size_t line_start = cur.pos;
            while (line_start > 0 && source[line_start - 1] != '\n' &&
                   (source[line_start - 1] == ' ' || source[line_start - 1] == '\t'))
                line_start--;
            size_t tok_start = line_start;
            std::string raw(source.substr(line_start, cur.pos - line_start));
            while (!cur.done() && cur.peek() != '\n') raw += cur.advance();
            while (raw.size() && raw.back() == '\\') {
                raw += '\n';
                if (!cur.done()) cur.advance();  // the newline itself
                while (!cur.done() && cur.peek() != '\n') raw += cur.advance();
            }
            // Validate it is a pragma, not some other preprocessor line.
            size_t h = raw.find('#');
            size_t p = h + 1;
            while (p < raw.size() && (raw[p] == ' ' || raw[p] == '\t')) p++;
            if (raw.compare(p, 6, "pragma") != 0)
                throw SyntaxError(loc, "preprocessor directives other than #pragma are not supported");
            Token t;
            t.kind = Tok::Pragma;
            t.loc = loc;
            t.text = std::move(raw);
            t.offset = tok_start;
            t.end_offset = cur.pos;
            out.push_back(std::move(t));
            continue;
        }

        if (ident_start(c)) {
            SourceLoc loc = cur.loc();
            size_t start = cur.pos;
            while (ident_char(cur.peek())) cur.advance();
            std::string text(source.substr(start, cur.pos - start));
            auto kw = kKeywords.find(text);
            push(kw != kKeywords.end() ? kw->second : Tok::Ident, loc, start, std::move(text));
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(cur.peek(1))))) {
            SourceLoc loc = cur.loc();
            size_t start = cur.pos;
            bool is_float = false;
            while (std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
            if (cur.peek() == '.') {
                is_float = true;
                cur.advance();
                while (std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
            }
            if (cur.peek() == 'e' || cur.peek() == 'E') {
                size_t save = cur.pos;
                cur.advance();
                if (cur.peek() == '+' || cur.peek() == '-') cur.advance();
                if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                    is_float = true;
                    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
                } else {
                    cur.pos = save;  // not an exponent; leave 'e' for the ident lexer
                }
            }
            std::string digits(source.substr(start, cur.pos - start));
            if (cur.peek() == 'f' || cur.peek() == 'F') {
                is_float = true;
                cur.advance();
            }
            std::string text(source.substr(start, cur.pos - start));
            Token t;
            t.kind = is_float ? Tok::FloatLit : Tok::IntLit;
            t.loc = loc;
            t.text = text;
            t.offset = start;
            t.end_offset = cur.pos;
            if (is_float) {
                t.fval = std::stod(digits);
            } else {
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.ival);
                if (ec != std::errc())
                    throw SyntaxError(loc, "integer literal out of range: " + digits);
            }
            out.push_back(std::move(t));
            continue;
        }

        SourceLoc loc = cur.loc();
        size_t start = cur.pos;
        cur.advance();
        auto two = [&](char second, Tok pair, Tok single) {
            if (cur.peek() == second) {
                cur.advance();
                push(pair, loc, start);
            } else {
                push(single, loc, start);
            }
        };
        switch (c) {
            case '(': push(Tok::LParen, loc, start); break;
            case ')': push(Tok::RParen, loc, start); break;
            case '[': push(Tok::LBracket, loc, start); break;
            case ']': push(Tok::RBracket, loc, start); break;
            case '{': push(Tok::LBrace, loc, start); break;
            case '}': push(Tok::RBrace, loc, start); break;
            case ';': push(Tok::Semi, loc, start); break;
            case ',': push(Tok::Comma, loc, start); break;
            case '.': push(Tok::Dot, loc, start); break;
            case '%': push(Tok::Percent, loc, start); break;
            case '/': push(Tok::Slash, loc, start); break;
            case '=': two('=', Tok::EqEq, Tok::Assign); break;
            case '!': two('=', Tok::NotEq, Tok::Not); break;
            case '<': two('=', Tok::Le, Tok::Lt); break;
            case '>': two('=', Tok::Ge, Tok::Gt); break;
            case '&': two('&', Tok::AndAnd, Tok::Amp); break;
            case '|':
                if (cur.peek() == '|') {
                    cur.advance();
                    push(Tok::OrOr, loc, start);
                } else {
                    throw SyntaxError(loc, "unexpected character '|'");
                }
                break;
            case '+':
                if (cur.peek() == '+') {
                    cur.advance();
                    push(Tok::PlusPlus, loc, start);
                } else if (cur.peek() == '=') {
                    cur.advance();
                    push(Tok::PlusAssign, loc, start);
                } else {
                    push(Tok::Plus, loc, start);
                }
                break;
            case '-':
                if (cur.peek() == '-') {
                    cur.advance();
                    push(Tok::MinusMinus, loc, start);
                } else if (cur.peek() == '=') {
                    cur.advance();
                    push(Tok::MinusAssign, loc, start);
                } else if (cur.peek() == '>') {
                    cur.advance();
                    push(Tok::Arrow, loc, start);
                } else {
                    push(Tok::Minus, loc, start);
                }
                break;
            case '*':
                if (cur.peek() == '=') {
                    cur.advance();
                    push(Tok::StarAssign, loc, start);
                } else {
                    push(Tok::Star, loc, start);
                }
                break;
            default:
                throw SyntaxError(loc, std::string("unexpected character '") + c + "'");
        }
    }

    Token end;
    end.kind = Tok::End;
    end.loc = cur.loc();
    end.offset = cur.pos;
    end.end_offset = cur.pos;
    out.push_back(std::move(end));
    return out;
}

}  // namespace satcc
