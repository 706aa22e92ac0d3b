#include "satcc/ast.hpp"

#include <cctype>

namespace satcc {

namespace {

std::vector<std::string> pragma_words(const std::string& raw) {
    std::vector<std::string> words;
    std::string cur;
    for (char c : raw) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            cur += c;
        } else if (!cur.empty()) {
            words.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) words.push_back(cur);
    return words;
}

}  // namespace

Directive make_directive(std::string raw_text) {
    Directive d;
    d.raw_text = std::move(raw_text);
    auto words = pragma_words(d.raw_text);
    // words[0] == "pragma"; words[1] names the model.
    if (words.size() > 1) {
        if (words[1] == "acc")
            d.kind = DirKind::Acc;
        else if (words[1] == "omp")
            d.kind = DirKind::Omp;
        else
            d.kind = DirKind::Other;
    }
    for (size_t i = 1; i < words.size(); i++) {
        const std::string& w = words[i];
        if (w == "gang") d.markers |= static_cast<uint32_t>(Marker::Gang);
        else if (w == "worker") d.markers |= static_cast<uint32_t>(Marker::Worker);
        else if (w == "vector") d.markers |= static_cast<uint32_t>(Marker::Vector);
        else if (w == "simd") d.markers |= static_cast<uint32_t>(Marker::Simd);
        else if (w == "teams") d.markers |= static_cast<uint32_t>(Marker::Teams);
        else if (w == "distribute") d.markers |= static_cast<uint32_t>(Marker::Distribute);
        else if (w == "kernels") d.markers |= static_cast<uint32_t>(Marker::Kernels);
        else if (w == "parallel") {
            if (i + 1 < words.size() && words[i + 1] == "for") {
                d.markers |= static_cast<uint32_t>(Marker::ParallelFor);
                i++;
            } else {
                d.markers |= static_cast<uint32_t>(Marker::Parallel);
            }
        }
    }
    return d;
}

// ---------------------------------------------------------------------------

ExprPtr Expr::clone() const {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->loc = loc;
    e->ival = ival;
    e->fval = fval;
    e->spelling = spelling;
    e->name = name;
    e->bin = bin;
    e->un = un;
    e->kids.reserve(kids.size());
    for (auto& k : kids) e->kids.push_back(k->clone());
    return e;
}

ExprPtr make_int(long long v) {
    auto e = std::make_unique<Expr>();
    e->kind = ExprKind::IntConst;
    e->ival = v;
    return e;
}

ExprPtr make_float(double v) {
    auto e = std::make_unique<Expr>();
    e->kind = ExprKind::FloatConst;
    e->fval = v;
    return e;
}

ExprPtr make_var(std::string name) {
    auto e = std::make_unique<Expr>();
    e->kind = ExprKind::Var;
    e->name = std::move(name);
    return e;
}

ExprPtr make_unary(UnOp op, ExprPtr a) {
    auto e = std::make_unique<Expr>();
    e->kind = ExprKind::Unary;
    e->un = op;
    e->kids.push_back(std::move(a));
    return e;
}

ExprPtr make_binary(BinOp op, ExprPtr a, ExprPtr b) {
    auto e = std::make_unique<Expr>();
    e->kind = ExprKind::Binary;
    e->bin = op;
    e->kids.push_back(std::move(a));
    e->kids.push_back(std::move(b));
    return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::IntConst:
            if (a.ival != b.ival) return false;
            break;
        case ExprKind::FloatConst:
            if (a.fval != b.fval) return false;
            break;
        case ExprKind::Var:
        case ExprKind::ArrayRef:
        case ExprKind::Call:
            if (a.name != b.name) return false;
            break;
        case ExprKind::Unary:
            if (a.un != b.un) return false;
            break;
        case ExprKind::Binary:
            if (a.bin != b.bin) return false;
            break;
        case ExprKind::Fma:
            break;
    }
    if (a.kids.size() != b.kids.size()) return false;
    for (size_t i = 0; i < a.kids.size(); i++)
        if (!expr_equal(*a.kids[i], *b.kids[i])) return false;
    return true;
}

const char* binop_text(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Mod: return "%";
        case BinOp::Lt: return "<";
        case BinOp::Le: return "<=";
        case BinOp::Gt: return ">";
        case BinOp::Ge: return ">=";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
        case BinOp::And: return "&&";
        case BinOp::Or: return "||";
    }
    return "?";
}

// ---------------------------------------------------------------------------

StmtPtr Stmt::clone() const {
    auto s = std::make_unique<Stmt>();
    s->kind = kind;
    s->loc = loc;
    s->pragmas = pragmas;
    s->decl_type = decl_type;
    for (auto& d : decls) {
        Declarator dd;
        dd.name = d.name;
        dd.dims = d.dims;
        if (d.init) dd.init = d.init->clone();
        s->decls.push_back(std::move(dd));
    }
    if (lhs) s->lhs = lhs->clone();
    if (rhs) s->rhs = rhs->clone();
    if (cond) s->cond = cond->clone();
    if (then_s) s->then_s = then_s->clone();
    if (else_s) s->else_s = else_s->clone();
    if (init) s->init = init->clone();
    if (for_cond) s->for_cond = for_cond->clone();
    if (step) s->step = step->clone();
    if (body) s->body = body->clone();
    s->loop_var = loop_var;
    s->raw_for_header = raw_for_header;
    for (auto& st : stmts) s->stmts.push_back(st->clone());
    if (call) s->call = call->clone();
    return s;
}

namespace {

bool opt_expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return expr_equal(*a, *b);
}

bool opt_stmt_equal(const StmtPtr& a, const StmtPtr& b) {
    if (!a || !b) return !a && !b;
    return stmt_equal(*a, *b);
}

bool pragmas_equal(const std::vector<Directive>& a, const std::vector<Directive>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); i++)
        if (a[i].raw_text != b[i].raw_text) return false;
    return true;
}

}  // namespace

bool stmt_equal(const Stmt& a, const Stmt& b) {
    if (a.kind != b.kind) return false;
    if (!pragmas_equal(a.pragmas, b.pragmas)) return false;
    switch (a.kind) {
        case StmtKind::Decl: {
            if (a.decl_type != b.decl_type || a.decls.size() != b.decls.size()) return false;
            for (size_t i = 0; i < a.decls.size(); i++) {
                if (a.decls[i].name != b.decls[i].name) return false;
                if (a.decls[i].dims != b.decls[i].dims) return false;
                if (!opt_expr_equal(a.decls[i].init, b.decls[i].init)) return false;
            }
            return true;
        }
        case StmtKind::Assign:
            return opt_expr_equal(a.lhs, b.lhs) && opt_expr_equal(a.rhs, b.rhs);
        case StmtKind::If:
            return opt_expr_equal(a.cond, b.cond) && opt_stmt_equal(a.then_s, b.then_s) &&
                   opt_stmt_equal(a.else_s, b.else_s);
        case StmtKind::For:
            return opt_stmt_equal(a.init, b.init) && opt_expr_equal(a.for_cond, b.for_cond) &&
                   opt_stmt_equal(a.step, b.step) && opt_stmt_equal(a.body, b.body);
        case StmtKind::Block: {
            if (a.stmts.size() != b.stmts.size()) return false;
            for (size_t i = 0; i < a.stmts.size(); i++)
                if (!stmt_equal(*a.stmts[i], *b.stmts[i])) return false;
            return true;
        }
        case StmtKind::CallStmt:
            return opt_expr_equal(a.call, b.call);
        case StmtKind::Empty:
            return true;
    }
    return false;
}

bool module_equal(const KernelModule& a, const KernelModule& b) {
    if (a.items.size() != b.items.size()) return false;
    for (size_t i = 0; i < a.items.size(); i++) {
        const TopItem& x = a.items[i];
        const TopItem& y = b.items[i];
        if (x.kind != y.kind) return false;
        if (x.kind == TopItem::Kind::Global) {
            if (!stmt_equal(*x.decl, *y.decl)) return false;
        } else {
            if (x.fn.name != y.fn.name) return false;
            if (!pragmas_equal(x.fn.pragmas, y.fn.pragmas)) return false;
            if (x.fn.params.size() != y.fn.params.size()) return false;
            for (size_t p = 0; p < x.fn.params.size(); p++) {
                if (x.fn.params[p].type != y.fn.params[p].type) return false;
                if (x.fn.params[p].name != y.fn.params[p].name) return false;
                if (x.fn.params[p].dims != y.fn.params[p].dims) return false;
            }
            if (!stmt_equal(*x.fn.body, *y.fn.body)) return false;
        }
    }
    if (!pragmas_equal(a.trailing_pragmas, b.trailing_pragmas)) return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

void collect_stmt_pragmas(const Stmt& s, std::vector<std::string>& out) {
    for (auto& d : s.pragmas) out.push_back(d.raw_text);
    switch (s.kind) {
        case StmtKind::If:
            collect_stmt_pragmas(*s.then_s, out);
            if (s.else_s) collect_stmt_pragmas(*s.else_s, out);
            break;
        case StmtKind::For:
            collect_stmt_pragmas(*s.body, out);
            break;
        case StmtKind::Block:
            for (auto& st : s.stmts) collect_stmt_pragmas(*st, out);
            break;
        default:
            break;
    }
}

}  // namespace

std::vector<std::string> collect_pragma_lines(const KernelModule& m) {
    std::vector<std::string> out;
    for (auto& item : m.items) {
        if (item.kind == TopItem::Kind::Global) {
            collect_stmt_pragmas(*item.decl, out);
        } else {
            for (auto& d : item.fn.pragmas) out.push_back(d.raw_text);
            collect_stmt_pragmas(*item.fn.body, out);
        }
    }
    for (auto& d : m.trailing_pragmas) out.push_back(d.raw_text);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool stmt_has_marked_loop(const Stmt& s) {
    if (s.kind == StmtKind::For) {
        for (auto& d : s.pragmas)
            if (d.parallel()) return true;
        return stmt_has_marked_loop(*s.body);
    }
    if (s.kind == StmtKind::If) {
        if (stmt_has_marked_loop(*s.then_s)) return true;
        return s.else_s && stmt_has_marked_loop(*s.else_s);
    }
    if (s.kind == StmtKind::Block) {
        for (auto& st : s.stmts)
            if (stmt_has_marked_loop(*st)) return true;
    }
    return false;
}

void find_in_stmt(const Function& fn, Stmt& s, std::vector<std::string>& loop_vars,
                  std::vector<Region>& out) {
    switch (s.kind) {
        case StmtKind::For: {
            bool marked = false;
            for (auto& d : s.pragmas)
                if (d.parallel()) marked = true;
            if (marked && !stmt_has_marked_loop(*s.body)) {
                Region r;
                r.fn = &fn;
                r.anchor = &s;
                r.enclosing_loop_vars = loop_vars;
                if (!s.loop_var.empty()) r.enclosing_loop_vars.push_back(s.loop_var);
                r.index = static_cast<int>(out.size());
                out.push_back(std::move(r));
                return;  // deepest marked loop: nothing below anchors
            }
            if (!s.loop_var.empty()) loop_vars.push_back(s.loop_var);
            find_in_stmt(fn, *s.body, loop_vars, out);
            if (!s.loop_var.empty()) loop_vars.pop_back();
            break;
        }
        case StmtKind::If:
            find_in_stmt(fn, *s.then_s, loop_vars, out);
            if (s.else_s) find_in_stmt(fn, *s.else_s, loop_vars, out);
            break;
        case StmtKind::Block:
            for (auto& st : s.stmts) find_in_stmt(fn, *st, loop_vars, out);
            break;
        default:
            break;
    }
}

void collect_local_decls(const Stmt& s, SymbolTable& table) {
    switch (s.kind) {
        case StmtKind::Decl:
            for (auto& d : s.decls) table.add(d.name, {s.decl_type, d.dims});
            break;
        case StmtKind::If:
            collect_local_decls(*s.then_s, table);
            if (s.else_s) collect_local_decls(*s.else_s, table);
            break;
        case StmtKind::For:
            if (s.init) collect_local_decls(*s.init, table);
            collect_local_decls(*s.body, table);
            break;
        case StmtKind::Block:
            for (auto& st : s.stmts) collect_local_decls(*st, table);
            break;
        default:
            break;
    }
}

}  // namespace

std::vector<Region> find_regions(KernelModule& m) {
    std::vector<Region> out;
    for (auto& item : m.items) {
        if (item.kind != TopItem::Kind::Func) continue;
        std::vector<std::string> loop_vars;
        find_in_stmt(item.fn, *item.fn.body, loop_vars, out);
    }
    return out;
}

SymbolTable module_symbols(const KernelModule& m, const Function& fn) {
    SymbolTable table;
    for (auto& item : m.items)
        if (item.kind == TopItem::Kind::Global)
            for (auto& d : item.decl->decls)
                table.add(d.name, {item.decl->decl_type, d.dims});
    for (auto& p : fn.params) table.add(p.name, {p.type, p.dims});
    collect_local_decls(*fn.body, table);
    return table;
}

}  // namespace satcc
