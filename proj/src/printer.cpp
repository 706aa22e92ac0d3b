#include "satcc/printer.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "satcc/diag.hpp"

namespace satcc {

std::string format_double(double v) {
    if (!std::isfinite(v)) throw InternalError("non-finite constant in output");
    char buf[64];
    for (int prec = 1; prec <= 17; prec++) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    // Must lex as a floating literal, not an integer.
    if (!std::strpbrk(buf, ".eE")) std::strcat(buf, ".0");
    return buf;
}

namespace {

// Precedence levels, loosest first. Used to drop redundant parentheses.
enum Prec {
    kOr = 1,
    kAnd,
    kEq,
    kRel,
    kAdd,
    kMul,
    kUnary,
    kPostfix,
};

int binop_prec(BinOp op) {
    switch (op) {
        case BinOp::Or: return kOr;
        case BinOp::And: return kAnd;
        case BinOp::Eq:
        case BinOp::Ne: return kEq;
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge: return kRel;
        case BinOp::Add:
        case BinOp::Sub: return kAdd;
        case BinOp::Mul:
        case BinOp::Div:
        case BinOp::Mod: return kMul;
    }
    return kPostfix;
}

void emit_expr(const Expr& e, int parent_prec, std::string& out) {
    switch (e.kind) {
        case ExprKind::IntConst:
            if (!e.spelling.empty())
                out += e.spelling;
            else
                out += std::to_string(e.ival);
            break;
        case ExprKind::FloatConst:
            if (!e.spelling.empty())
                out += e.spelling;
            else
                out += format_double(e.fval);
            break;
        case ExprKind::Var:
            out += e.name;
            break;
        case ExprKind::ArrayRef:
            out += e.name;
            for (auto& idx : e.kids) {
                out += '[';
                emit_expr(*idx, 0, out);
                out += ']';
            }
            break;
        case ExprKind::Call: {
            out += e.name;
            out += '(';
            bool first = true;
            for (auto& a : e.kids) {
                if (!first) out += ", ";
                first = false;
                emit_expr(*a, 0, out);
            }
            out += ')';
            break;
        }
        case ExprKind::Unary: {
            bool paren = kUnary < parent_prec;
            if (paren) out += '(';
            out += e.un == UnOp::Neg ? '-' : '!';
            emit_expr(*e.kids[0], kPostfix, out);
            if (paren) out += ')';
            break;
        }
        case ExprKind::Binary: {
            int p = binop_prec(e.bin);
            bool paren = p < parent_prec;
            if (paren) out += '(';
            emit_expr(*e.kids[0], p, out);
            out += ' ';
            out += binop_text(e.bin);
            out += ' ';
            emit_expr(*e.kids[1], p + 1, out);
            if (paren) out += ')';
            break;
        }
        case ExprKind::Fma: {
            // a + b * c
            bool paren = kAdd < parent_prec;
            if (paren) out += '(';
            emit_expr(*e.kids[0], kAdd, out);
            out += " + ";
            emit_expr(*e.kids[1], kMul, out);
            out += " * ";
            emit_expr(*e.kids[2], kMul + 1, out);
            if (paren) out += ')';
            break;
        }
    }
}

void pad(int indent, std::string& out) { out.append(static_cast<size_t>(indent) * 4, ' '); }

void emit_stmt(const Stmt& s, int indent, std::string& out);

// Body of an if/else/for: block braces stay on the header line.
void emit_substmt(const Stmt& s, int indent, std::string& out) {
    if (s.kind == StmtKind::Block && s.pragmas.empty()) {
        out += " {\n";
        for (auto& st : s.stmts) emit_stmt(*st, indent + 1, out);
        pad(indent, out);
        out += '}';
    } else {
        out += '\n';
        emit_stmt(s, indent + 1, out);
        if (!out.empty() && out.back() == '\n') out.pop_back();
    }
}

void emit_decl_body(const Stmt& s, std::string& out) {
    out += s.decl_type == Ty::Int ? "int " : "double ";
    bool first = true;
    for (auto& d : s.decls) {
        if (!first) out += ", ";
        first = false;
        out += d.name;
        for (long long dim : d.dims) {
            out += '[';
            out += std::to_string(dim);
            out += ']';
        }
        if (d.init) {
            out += " = ";
            emit_expr(*d.init, 0, out);
        }
    }
    out += ';';
}

void emit_stmt(const Stmt& s, int indent, std::string& out) {
    for (auto& d : s.pragmas) {
        out += d.raw_text;
        out += '\n';
    }
    pad(indent, out);
    switch (s.kind) {
        case StmtKind::Decl:
            emit_decl_body(s, out);
            break;
        case StmtKind::Assign:
            emit_expr(*s.lhs, 0, out);
            out += " = ";
            emit_expr(*s.rhs, 0, out);
            out += ';';
            break;
        case StmtKind::If:
            out += "if (";
            emit_expr(*s.cond, 0, out);
            out += ')';
            emit_substmt(*s.then_s, indent, out);
            if (s.else_s) {
                if (out.back() == '}')
                    out += " else";
                else {
                    out += '\n';
                    pad(indent, out);
                    out += "else";
                }
                if (s.else_s->kind == StmtKind::If && s.else_s->pragmas.empty()) {
                    out += ' ';
                    size_t mark = out.size();
                    emit_stmt(*s.else_s, indent, out);
                    out.erase(mark, static_cast<size_t>(indent) * 4);  // drop pad after "else "
                    if (!out.empty() && out.back() == '\n') out.pop_back();
                } else {
                    emit_substmt(*s.else_s, indent, out);
                }
            }
            break;
        case StmtKind::For:
            out += s.raw_for_header;
            emit_substmt(*s.body, indent, out);
            break;
        case StmtKind::Block:
            out += "{\n";
            for (auto& st : s.stmts) emit_stmt(*st, indent + 1, out);
            pad(indent, out);
            out += '}';
            break;
        case StmtKind::CallStmt:
            emit_expr(*s.call, 0, out);
            out += ';';
            break;
        case StmtKind::Empty:
            out += ';';
            break;
    }
    out += '\n';
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    emit_expr(e, 0, out);
    return out;
}

std::string print_stmt(const Stmt& s, int indent) {
    std::string out;
    emit_stmt(s, indent, out);
    return out;
}

std::string print_module(const KernelModule& m) {
    std::string out;
    bool first = true;
    for (auto& item : m.items) {
        if (!first) out += '\n';
        first = false;
        if (item.kind == TopItem::Kind::Global) {
            emit_stmt(*item.decl, 0, out);
            continue;
        }
        const Function& fn = item.fn;
        for (auto& d : fn.pragmas) {
            out += d.raw_text;
            out += '\n';
        }
        out += "void ";
        out += fn.name;
        out += '(';
        bool first_param = true;
        for (auto& p : fn.params) {
            if (!first_param) out += ", ";
            first_param = false;
            out += p.type == Ty::Int ? "int " : "double ";
            out += p.name;
            for (long long dim : p.dims) {
                out += '[';
                out += std::to_string(dim);
                out += ']';
            }
        }
        out += ')';
        emit_substmt(*fn.body, 0, out);
        out += '\n';
    }
    for (auto& d : m.trailing_pragmas) {
        out += d.raw_text;
        out += '\n';
    }
    return out;
}

}  // namespace satcc
