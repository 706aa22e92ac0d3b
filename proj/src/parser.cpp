#include "satcc/parser.hpp"

#include "satcc/diag.hpp"
#include "satcc/lexer.hpp"

namespace satcc {

namespace {

class Parser {
public:
    Parser(std::string_view src, std::string name)
        : src_(src), name_(std::move(name)), toks_(lex(src)) {}

    KernelModule parse_module() {
        KernelModule m;
        m.source_name = name_;
        for (;;) {
            auto pragmas = take_pragmas();
            if (check(Tok::End)) {
                for (auto& d : pragmas) m.trailing_pragmas.push_back(std::move(d));
                break;
            }
            parse_top_item(std::move(pragmas), m);
        }
        return m;
    }

private:
    std::string_view src_;
    std::string name_;
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    const Token& prev() const { return toks_[pos_ - 1]; }
    bool check(Tok k) const { return cur().kind == k; }

    const Token& advance() { return toks_[pos_++]; }

    bool accept(Tok k) {
        if (!check(k)) return false;
        pos_++;
        return true;
    }

    const Token& expect(Tok k, const char* what) {
        if (!check(k)) throw SyntaxError(cur().loc, std::string("expected ") + what);
        return advance();
    }

    std::vector<Directive> take_pragmas() {
        std::vector<Directive> out;
        while (check(Tok::Pragma)) out.push_back(make_directive(advance().text));
        return out;
    }

    // -- top level ----------------------------------------------------------

    void parse_top_item(std::vector<Directive> pragmas, KernelModule& m) {
        SourceLoc loc = cur().loc;
        bool is_void = false;
        Ty type{};
        if (accept(Tok::KwVoid)) {
            is_void = true;
        } else if (accept(Tok::KwInt)) {
            type = Ty::Int;
        } else if (accept(Tok::KwDouble)) {
            type = Ty::Double;
        } else {
            throw SyntaxError(loc, "expected declaration or function definition");
        }
        if (check(Tok::Star)) throw UnsupportedConstruct(cur().loc, "pointer type");
        Token name = expect(Tok::Ident, "name");

        if (check(Tok::LParen)) {
            if (!is_void) throw UnsupportedConstruct(loc, "non-void function");
            TopItem item;
            item.kind = TopItem::Kind::Func;
            item.fn.name = name.text;
            item.fn.pragmas = std::move(pragmas);
            parse_params(item.fn.params);
            if (check(Tok::Semi))
                throw UnsupportedConstruct(cur().loc, "function prototype");
            item.fn.body = parse_block();
            m.items.push_back(std::move(item));
            return;
        }

        if (is_void) throw SyntaxError(loc, "variable of type void");
        pos_--;  // let parse_declarators re-read the first name
        TopItem item;
        item.kind = TopItem::Kind::Global;
        item.decl = parse_declarators(type, loc);
        item.decl->pragmas = std::move(pragmas);
        m.items.push_back(std::move(item));
    }

    void parse_params(std::vector<Param>& out) {
        expect(Tok::LParen, "'('");
        if (accept(Tok::RParen)) return;
        if (check(Tok::KwVoid) && toks_[pos_ + 1].kind == Tok::RParen) {
            advance();
            advance();
            return;
        }
        do {
            Param p;
            if (accept(Tok::KwInt))
                p.type = Ty::Int;
            else if (accept(Tok::KwDouble))
                p.type = Ty::Double;
            else
                throw SyntaxError(cur().loc, "expected parameter type");
            if (check(Tok::Star)) throw UnsupportedConstruct(cur().loc, "pointer type");
            p.name = expect(Tok::Ident, "parameter name").text;
            while (accept(Tok::LBracket)) {
                Token dim = expect(Tok::IntLit, "constant array dimension");
                p.dims.push_back(dim.ival);
                expect(Tok::RBracket, "']'");
            }
            out.push_back(std::move(p));
        } while (accept(Tok::Comma));
        expect(Tok::RParen, "')'");
    }

    // Declarator list plus the terminating ';'. Leading type already eaten.
    StmtPtr parse_declarators(Ty type, SourceLoc loc) {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::Decl;
        s->loc = loc;
        s->decl_type = type;
        do {
            Declarator d;
            if (check(Tok::Star)) throw UnsupportedConstruct(cur().loc, "pointer type");
            d.name = expect(Tok::Ident, "name").text;
            while (accept(Tok::LBracket)) {
                Token dim = expect(Tok::IntLit, "constant array dimension");
                d.dims.push_back(dim.ival);
                expect(Tok::RBracket, "']'");
            }
            if (accept(Tok::Assign)) {
                if (!d.dims.empty())
                    throw UnsupportedConstruct(prev().loc, "array initializer");
                d.init = parse_expr();
            }
            s->decls.push_back(std::move(d));
        } while (accept(Tok::Comma));
        expect(Tok::Semi, "';'");
        return s;
    }

    // -- statements ---------------------------------------------------------

    StmtPtr parse_block() {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::Block;
        s->loc = cur().loc;
        expect(Tok::LBrace, "'{'");
        for (;;) {
            auto pragmas = take_pragmas();
            if (check(Tok::RBrace)) {
                if (!pragmas.empty()) {
                    // Pragma at the end of a block: keep the bytes alive by
                    // hanging it off an empty statement.
                    auto e = std::make_unique<Stmt>();
                    e->kind = StmtKind::Empty;
                    e->pragmas = std::move(pragmas);
                    s->stmts.push_back(std::move(e));
                }
                break;
            }
            if (check(Tok::End)) throw SyntaxError(cur().loc, "unterminated block");
            auto st = parse_stmt();
            st->pragmas = std::move(pragmas);
            s->stmts.push_back(std::move(st));
        }
        expect(Tok::RBrace, "'}'");
        return s;
    }

    StmtPtr parse_stmt_outer() {
        auto pragmas = take_pragmas();
        auto s = parse_stmt();
        s->pragmas = std::move(pragmas);
        return s;
    }

    StmtPtr parse_stmt() {
        switch (cur().kind) {
            case Tok::LBrace:
                return parse_block();
            case Tok::KwInt: {
                SourceLoc loc = advance().loc;
                return parse_declarators(Ty::Int, loc);
            }
            case Tok::KwDouble: {
                SourceLoc loc = advance().loc;
                return parse_declarators(Ty::Double, loc);
            }
            case Tok::KwVoid:
                throw SyntaxError(cur().loc, "variable of type void");
            case Tok::KwIf:
                return parse_if();
            case Tok::KwFor:
                return parse_for();
            case Tok::Semi: {
                auto s = std::make_unique<Stmt>();
                s->kind = StmtKind::Empty;
                s->loc = advance().loc;
                return s;
            }
            case Tok::Star:
                throw UnsupportedConstruct(cur().loc, "pointer dereference");
            case Tok::Amp:
                throw UnsupportedConstruct(cur().loc, "address-of");
            case Tok::Ident:
            case Tok::PlusPlus:
            case Tok::MinusMinus: {
                auto s = parse_simple_stmt(/*allow_call=*/true);
                expect(Tok::Semi, "';'");
                return s;
            }
            default:
                throw SyntaxError(cur().loc, "expected statement");
        }
    }

    StmtPtr parse_if() {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::If;
        s->loc = expect(Tok::KwIf, "'if'").loc;
        expect(Tok::LParen, "'('");
        s->cond = parse_expr();
        expect(Tok::RParen, "')'");
        s->then_s = parse_stmt_outer();
        if (accept(Tok::KwElse)) s->else_s = parse_stmt_outer();
        return s;
    }

    StmtPtr parse_for() {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::For;
        const Token& kw = expect(Tok::KwFor, "'for'");
        s->loc = kw.loc;
        size_t start = kw.offset;
        expect(Tok::LParen, "'('");

        if (check(Tok::Semi)) {
            s->init = std::make_unique<Stmt>();
            s->init->kind = StmtKind::Empty;
            s->init->loc = advance().loc;
        } else if (check(Tok::KwInt) || check(Tok::KwDouble)) {
            Ty type = advance().kind == Tok::KwInt ? Ty::Int : Ty::Double;
            s->init = parse_declarators(type, prev().loc);
        } else {
            s->init = parse_simple_stmt(/*allow_call=*/false);
            expect(Tok::Semi, "';'");
        }

        if (!check(Tok::Semi)) s->for_cond = parse_expr();
        expect(Tok::Semi, "';'");

        if (!check(Tok::RParen)) {
            s->step = parse_simple_stmt(/*allow_call=*/false);
        } else {
            s->step = std::make_unique<Stmt>();
            s->step->kind = StmtKind::Empty;
            s->step->loc = cur().loc;
        }
        const Token& rp = expect(Tok::RParen, "')'");
        s->raw_for_header = std::string(src_.substr(start, rp.end_offset - start));

        s->loop_var = deduce_loop_var(*s);
        s->body = parse_stmt_outer();
        return s;
    }

    static std::string deduce_loop_var(const Stmt& s) {
        if (s.init->kind == StmtKind::Assign && s.init->lhs->kind == ExprKind::Var)
            return s.init->lhs->name;
        if (s.init->kind == StmtKind::Decl && s.init->decls.size() == 1)
            return s.init->decls[0].name;
        if (s.step->kind == StmtKind::Assign && s.step->lhs->kind == ExprKind::Var)
            return s.step->lhs->name;
        return {};
    }

    // Assignment / call / increment without the trailing ';'.
    StmtPtr parse_simple_stmt(bool allow_call) {
        auto s = std::make_unique<Stmt>();
        s->loc = cur().loc;

        if (accept(Tok::PlusPlus) || accept(Tok::MinusMinus)) {
            BinOp op = prev().kind == Tok::PlusPlus ? BinOp::Add : BinOp::Sub;
            ExprPtr target = parse_lvalue();
            s->kind = StmtKind::Assign;
            s->rhs = make_binary(op, target->clone(), make_int(1));
            s->rhs->loc = s->loc;
            s->lhs = std::move(target);
            return s;
        }

        Token name = expect(Tok::Ident, "statement");
        if (check(Tok::LParen)) {
            if (!allow_call) throw SyntaxError(cur().loc, "call not allowed here");
            s->kind = StmtKind::CallStmt;
            s->call = parse_call(name);
            return s;
        }

        ExprPtr target = parse_lvalue_suffix(name);
        s->kind = StmtKind::Assign;
        SourceLoc op_loc = cur().loc;
        switch (advance().kind) {
            case Tok::Assign:
                s->rhs = parse_expr();
                s->lhs = std::move(target);
                return s;
            case Tok::PlusAssign:
                s->rhs = make_binary(BinOp::Add, target->clone(), parse_expr());
                break;
            case Tok::MinusAssign:
                s->rhs = make_binary(BinOp::Sub, target->clone(), parse_expr());
                break;
            case Tok::StarAssign:
                s->rhs = make_binary(BinOp::Mul, target->clone(), parse_expr());
                break;
            case Tok::PlusPlus:
                s->rhs = make_binary(BinOp::Add, target->clone(), make_int(1));
                break;
            case Tok::MinusMinus:
                s->rhs = make_binary(BinOp::Sub, target->clone(), make_int(1));
                break;
            default:
                throw SyntaxError(op_loc, "expected assignment operator");
        }
        s->rhs->loc = op_loc;
        s->lhs = std::move(target);
        return s;
    }

    ExprPtr parse_lvalue() {
        Token name = expect(Tok::Ident, "lvalue");
        return parse_lvalue_suffix(name);
    }

    ExprPtr parse_lvalue_suffix(const Token& name) {
        auto e = std::make_unique<Expr>();
        e->loc = name.loc;
        e->name = name.text;
        e->kind = ExprKind::Var;
        while (accept(Tok::LBracket)) {
            e->kind = ExprKind::ArrayRef;
            e->kids.push_back(parse_expr());
            expect(Tok::RBracket, "']'");
        }
        reject_member_access();
        return e;
    }

    void reject_member_access() {
        if (check(Tok::Dot)) throw UnsupportedConstruct(cur().loc, "member access");
        if (check(Tok::Arrow)) throw UnsupportedConstruct(cur().loc, "member access");
    }

    // -- expressions --------------------------------------------------------

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_or() {
        auto e = parse_and();
        while (check(Tok::OrOr)) {
            SourceLoc loc = advance().loc;
            e = make_binary(BinOp::Or, std::move(e), parse_and());
            e->loc = loc;
        }
        return e;
    }

    ExprPtr parse_and() {
        auto e = parse_eq();
        while (check(Tok::AndAnd)) {
            SourceLoc loc = advance().loc;
            e = make_binary(BinOp::And, std::move(e), parse_eq());
            e->loc = loc;
        }
        return e;
    }

    ExprPtr parse_eq() {
        auto e = parse_rel();
        while (check(Tok::EqEq) || check(Tok::NotEq)) {
            BinOp op = cur().kind == Tok::EqEq ? BinOp::Eq : BinOp::Ne;
            SourceLoc loc = advance().loc;
            e = make_binary(op, std::move(e), parse_rel());
            e->loc = loc;
        }
        return e;
    }

    ExprPtr parse_rel() {
        auto e = parse_add();
        for (;;) {
            BinOp op;
            switch (cur().kind) {
                case Tok::Lt: op = BinOp::Lt; break;
                case Tok::Le: op = BinOp::Le; break;
                case Tok::Gt: op = BinOp::Gt; break;
                case Tok::Ge: op = BinOp::Ge; break;
                default: return e;
            }
            SourceLoc loc = advance().loc;
            e = make_binary(op, std::move(e), parse_add());
            e->loc = loc;
        }
    }

    ExprPtr parse_add() {
        auto e = parse_mul();
        for (;;) {
            BinOp op;
            if (check(Tok::Plus))
                op = BinOp::Add;
            else if (check(Tok::Minus))
                op = BinOp::Sub;
            else
                return e;
            SourceLoc loc = advance().loc;
            e = make_binary(op, std::move(e), parse_mul());
            e->loc = loc;
        }
    }

    ExprPtr parse_mul() {
        auto e = parse_unary();
        for (;;) {
            BinOp op;
            switch (cur().kind) {
                case Tok::Star: op = BinOp::Mul; break;
                case Tok::Slash: op = BinOp::Div; break;
                case Tok::Percent: op = BinOp::Mod; break;
                default: return e;
            }
            SourceLoc loc = advance().loc;
            e = make_binary(op, std::move(e), parse_unary());
            e->loc = loc;
        }
    }

    ExprPtr parse_unary() {
        switch (cur().kind) {
            case Tok::Minus: {
                SourceLoc loc = advance().loc;
                auto e = make_unary(UnOp::Neg, parse_unary());
                e->loc = loc;
                return e;
            }
            case Tok::Not: {
                SourceLoc loc = advance().loc;
                auto e = make_unary(UnOp::Not, parse_unary());
                e->loc = loc;
                return e;
            }
            case Tok::Plus:
                advance();  // unary plus is a no-op
                return parse_unary();
            case Tok::Star:
                throw UnsupportedConstruct(cur().loc, "pointer dereference");
            case Tok::Amp:
                throw UnsupportedConstruct(cur().loc, "address-of");
            case Tok::PlusPlus:
            case Tok::MinusMinus:
                throw UnsupportedConstruct(cur().loc, "increment inside expression");
            default:
                return parse_postfix();
        }
    }

    ExprPtr parse_postfix() {
        auto e = parse_primary();
        while (accept(Tok::LBracket)) {
            if (e->kind == ExprKind::Var) {
                e->kind = ExprKind::ArrayRef;
            } else if (e->kind != ExprKind::ArrayRef) {
                throw UnsupportedConstruct(prev().loc, "subscript of a non-array expression");
            }
            e->kids.push_back(parse_expr());
            expect(Tok::RBracket, "']'");
        }
        reject_member_access();
        if (check(Tok::PlusPlus) || check(Tok::MinusMinus))
            throw UnsupportedConstruct(cur().loc, "increment inside expression");
        return e;
    }

    ExprPtr parse_primary() {
        switch (cur().kind) {
            case Tok::IntLit: {
                const Token& t = advance();
                auto e = make_int(t.ival);
                e->loc = t.loc;
                e->spelling = t.text;
                return e;
            }
            case Tok::FloatLit: {
                const Token& t = advance();
                auto e = make_float(t.fval);
                e->loc = t.loc;
                e->spelling = t.text;
                return e;
            }
            case Tok::Ident: {
                const Token& t = advance();
                if (check(Tok::LParen)) return parse_call(t);
                auto e = make_var(t.text);
                e->loc = t.loc;
                return e;
            }
            case Tok::LParen: {
                advance();
                if (check(Tok::KwInt) || check(Tok::KwDouble) || check(Tok::KwVoid))
                    throw UnsupportedConstruct(cur().loc, "cast");
                auto e = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            default:
                throw SyntaxError(cur().loc, "expected expression");
        }
    }

    ExprPtr parse_call(const Token& callee) {
        auto e = std::make_unique<Expr>();
        e->kind = ExprKind::Call;
        e->loc = callee.loc;
        e->name = callee.text;
        expect(Tok::LParen, "'('");
        if (!check(Tok::RParen)) {
            do {
                e->kids.push_back(parse_expr());
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen, "')'");
        return e;
    }
};

}  // namespace

KernelModule parse(std::string_view source, std::string source_name) {
    Parser p(source, std::move(source_name));
    return p.parse_module();
}

}  // namespace satcc
