#include "satcc/ssa.hpp"

#include <algorithm>
#include <set>

#include "satcc/diag.hpp"
#include "satcc/printer.hpp"

namespace satcc {

SsaExprPtr SsaExpr::clone() const {
    auto e = std::make_unique<SsaExpr>();
    e->kind = kind;
    e->type = type;
    e->ival = ival;
    e->fval = fval;
    e->spelling = spelling;
    e->name = name;
    e->ref = ref;
    e->epoch = epoch;
    e->bin = bin;
    e->un = un;
    e->kids.reserve(kids.size());
    for (auto& k : kids) e->kids.push_back(k->clone());
    return e;
}

std::string render_ssa_expr(const SsaExpr& e) {
    switch (e.kind) {
        case SsaKind::IntConst:
            return e.spelling.empty() ? std::to_string(e.ival) : e.spelling;
        case SsaKind::FloatConst:
            return e.spelling.empty() ? format_double(e.fval) : e.spelling;
        case SsaKind::Ref:
            return "v" + std::to_string(e.ref);
        case SsaKind::FreeVar:
            return e.name;
        case SsaKind::Load: {
            std::string s = e.name + "#" + std::to_string(e.epoch);
            for (auto& k : e.kids) s += "[" + render_ssa_expr(*k) + "]";
            return s;
        }
        case SsaKind::Unary:
            return std::string("(") + (e.un == UnOp::Neg ? "-" : "!") + render_ssa_expr(*e.kids[0]) + ")";
        case SsaKind::Binary:
            return "(" + render_ssa_expr(*e.kids[0]) + " " + binop_text(e.bin) + " " +
                   render_ssa_expr(*e.kids[1]) + ")";
        case SsaKind::Call: {
            std::string s = e.name + "(";
            for (size_t i = 0; i < e.kids.size(); i++) {
                if (i) s += ", ";
                s += render_ssa_expr(*e.kids[i]);
            }
            return s + ")";
        }
        case SsaKind::Fma:
            return "fma(" + render_ssa_expr(*e.kids[0]) + ", " + render_ssa_expr(*e.kids[1]) + ", " +
                   render_ssa_expr(*e.kids[2]) + ")";
    }
    throw InternalError("unknown ssa expr kind");
}

bool store_may_alias(const std::string& store_base, const std::vector<SsaExprPtr>& store_idx,
                     const std::string& load_base, const std::vector<SsaExprPtr>& load_idx) {
    if (store_base != load_base) return false;
    if (store_idx.size() != load_idx.size()) return true;  // rank confusion: stay conservative
    for (size_t k = 0; k < store_idx.size(); k++) {
        const SsaExpr& a = *store_idx[k];
        const SsaExpr& b = *load_idx[k];
        if (a.kind == SsaKind::IntConst && b.kind == SsaKind::IntConst && a.ival != b.ival)
            return false;  // two unequal constants in one position: disjoint elements
    }
    return true;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

void collect_assigned_scalars(const Stmt& s, std::set<std::string>& out) {
    switch (s.kind) {
        case StmtKind::Assign:
            if (s.lhs->kind == ExprKind::Var) out.insert(s.lhs->name);
            break;
        case StmtKind::Decl:
            for (auto& d : s.decls)
                if (d.init && d.dims.empty()) out.insert(d.name);
            break;
        case StmtKind::If:
            collect_assigned_scalars(*s.then_s, out);
            if (s.else_s) collect_assigned_scalars(*s.else_s, out);
            break;
        case StmtKind::For:
            collect_assigned_scalars(*s.init, out);
            collect_assigned_scalars(*s.step, out);
            collect_assigned_scalars(*s.body, out);
            break;
        case StmtKind::Block:
            for (auto& st : s.stmts) collect_assigned_scalars(*st, out);
            break;
        default:
            break;
    }
}

void collect_stored_bases(const Stmt& s, std::set<std::string>& out) {
    switch (s.kind) {
        case StmtKind::Assign:
            if (s.lhs->kind == ExprKind::ArrayRef) out.insert(s.lhs->name);
            break;
        case StmtKind::If:
            collect_stored_bases(*s.then_s, out);
            if (s.else_s) collect_stored_bases(*s.else_s, out);
            break;
        case StmtKind::For:
            collect_stored_bases(*s.init, out);
            collect_stored_bases(*s.step, out);
            collect_stored_bases(*s.body, out);
            break;
        case StmtKind::Block:
            for (auto& st : s.stmts) collect_stored_bases(*st, out);
            break;
        default:
            break;
    }
}

class SsaBuilder {
public:
    SsaBuilder(const Region& region, const SymbolTable& symbols) : region_(region) {
        prog_.symbols = symbols;
        for (auto& lv : region.enclosing_loop_vars)
            prog_.symbols.add(lv, {Ty::Int, {}});  // no-op if declared
        prog_.scopes.push_back({ScopeInfo::Kind::Region, -1, -1});
    }

    SsaProgram run() {
        const Stmt& body = *region_.anchor->body;
        if (body.kind == StmtKind::Block) {
            auto blk = std::make_unique<SsaStmt>();
            blk->kind = SsaStmt::Kind::Block;
            blk->orig = &body;
            blk->scope = 0;
            for (auto& st : body.stmts) blk->stmts.push_back(walk(*st));
            prog_.body = std::move(blk);
        } else {
            prog_.body = walk(body);
        }
        return std::move(prog_);
    }

private:
    const Region& region_;
    SsaProgram prog_;
    std::map<std::string, ValRef> state_;
    std::set<std::string> region_locals_;
    std::set<std::string> warned_;
    int cur_scope_ = 0;
    bool in_header_ = false;

    struct BaseEvent {
        int store_def = -1;  // < 0: kill-all marker (merge / loop boundary)
        int scope = 0;
        std::string canon;  // store target tuple, rendered
    };
    std::map<std::string, std::vector<BaseEvent>> events_;

    const SymbolTable::Entry& symbol(const std::string& name, SourceLoc loc) const {
        const auto* e = prog_.symbols.find(name);
        if (!e) throw SyntaxError(loc, "use of undeclared name: " + name);
        return *e;
    }

    ValRef current(const std::string& name) const {
        auto it = state_.find(name);
        return it == state_.end() ? free_of(name) : it->second;
    }

    int new_scope(ScopeInfo::Kind kind, int loop_id = -1) {
        prog_.scopes.push_back({kind, cur_scope_, loop_id});
        return static_cast<int>(prog_.scopes.size()) - 1;
    }

    int add_def(SsaDef d) {
        d.id = static_cast<int>(prog_.defs.size());
        d.scope = cur_scope_;
        d.in_header = in_header_;
        prog_.defs.push_back(std::move(d));
        prog_.state_after.push_back(state_);  // snapshot before target update; fixed below
        return prog_.defs.back().id;
    }

    void finish_def(int id, const std::string& target_scalar) {
        if (!target_scalar.empty()) state_[target_scalar] = ref_of(id);
        prog_.state_after[id] = state_;
    }

    // -- expressions --------------------------------------------------------

    SsaExprPtr resolve(const Expr& e) {
        auto out = std::make_unique<SsaExpr>();
        switch (e.kind) {
            case ExprKind::IntConst:
                out->kind = SsaKind::IntConst;
                out->type = Ty::Int;
                out->ival = e.ival;
                out->spelling = e.spelling;
                return out;
            case ExprKind::FloatConst:
                out->kind = SsaKind::FloatConst;
                out->type = Ty::Double;
                out->fval = e.fval;
                out->spelling = e.spelling;
                return out;
            case ExprKind::Var: {
                const auto& sym = symbol(e.name, e.loc);
                if (!sym.dims.empty()) throw SyntaxError(e.loc, "array used as a scalar: " + e.name);
                ValRef r = current(e.name);
                if (r.is_def()) {
                    out->kind = SsaKind::Ref;
                    out->ref = r.def;
                    out->type = prog_.defs[r.def].type;
                } else {
                    if (region_locals_.count(e.name) && warned_.insert(e.name).second)
                        prog_.warnings.push_back("use of region-local '" + e.name +
                                                 "' before any definition; treated as free input");
                    out->kind = SsaKind::FreeVar;
                    out->name = e.name;
                    out->type = sym.type;
                }
                return out;
            }
            case ExprKind::ArrayRef: {
                const auto& sym = symbol(e.name, e.loc);
                if (sym.dims.empty()) throw SyntaxError(e.loc, "scalar subscripted: " + e.name);
                if (sym.dims.size() != e.kids.size())
                    throw SyntaxError(e.loc, "wrong subscript count for " + e.name);
                std::vector<SsaExprPtr> idx;
                for (auto& k : e.kids) {
                    auto r = resolve(*k);
                    if (r->type != Ty::Int) throw SyntaxError(k->loc, "array index is not an integer");
                    idx.push_back(std::move(r));
                }
                // Store-to-load forwarding: if the last may-aliasing event on
                // this base is a same-scope store to the identical element,
                // the load is just that stored value.
                std::string canon = tuple_text(idx);
                int epoch = 0;
                const BaseEvent* last_alias = nullptr;
                auto ev = events_.find(e.name);
                if (ev != events_.end()) {
                    for (auto& be : ev->second) {
                        bool alias = be.store_def < 0 ||
                                     store_may_alias(e.name, prog_.defs[be.store_def].indices, e.name, idx);
                        if (alias) {
                            epoch++;
                            last_alias = &be;
                        }
                    }
                }
                if (last_alias && last_alias->store_def >= 0 && last_alias->canon == canon &&
                    last_alias->scope == cur_scope_) {
                    out->kind = SsaKind::Ref;
                    out->ref = last_alias->store_def;
                    out->type = prog_.defs[last_alias->store_def].type;
                    return out;
                }
                out->kind = SsaKind::Load;
                out->name = e.name;
                out->epoch = epoch;
                out->type = sym.type;
                out->kids = std::move(idx);
                return out;
            }
            case ExprKind::Unary:
                out->kind = SsaKind::Unary;
                out->un = e.un;
                out->kids.push_back(resolve(*e.kids[0]));
                out->type = e.un == UnOp::Not ? Ty::Int : out->kids[0]->type;
                return out;
            case ExprKind::Binary: {
                out->kind = SsaKind::Binary;
                out->bin = e.bin;
                out->kids.push_back(resolve(*e.kids[0]));
                out->kids.push_back(resolve(*e.kids[1]));
                switch (e.bin) {
                    case BinOp::Add:
                    case BinOp::Sub:
                    case BinOp::Mul:
                    case BinOp::Div:
                        out->type = (out->kids[0]->type == Ty::Int && out->kids[1]->type == Ty::Int)
                                        ? Ty::Int
                                        : Ty::Double;
                        break;
                    case BinOp::Mod:
                        out->type = Ty::Int;
                        break;
                    default:
                        out->type = Ty::Int;  // comparisons/logicals
                        break;
                }
                return out;
            }
            case ExprKind::Call:
                out->kind = SsaKind::Call;
                out->name = e.name;
                out->type = Ty::Double;
                for (auto& k : e.kids) out->kids.push_back(resolve(*k));
                return out;
            case ExprKind::Fma:
                out->kind = SsaKind::Fma;
                for (auto& k : e.kids) out->kids.push_back(resolve(*k));
                out->type = (out->kids[0]->type == Ty::Int && out->kids[1]->type == Ty::Int &&
                             out->kids[2]->type == Ty::Int)
                                ? Ty::Int
                                : Ty::Double;
                return out;
        }
        throw InternalError("unknown expr kind");
    }

    static std::string tuple_text(const std::vector<SsaExprPtr>& idx) {
        std::string s;
        for (auto& k : idx) s += "[" + render_ssa_expr(*k) + "]";
        return s;
    }

    void kill_base(const std::string& base) { events_[base].push_back({-1, cur_scope_, {}}); }

    // -- statements ---------------------------------------------------------

    SsaStmtPtr walk(const Stmt& s) {
        auto out = std::make_unique<SsaStmt>();
        out->orig = &s;
        out->scope = cur_scope_;
        switch (s.kind) {
            case StmtKind::Assign:
                out->kind = SsaStmt::Kind::Assign;
                out->def = walk_assign(s);
                break;
            case StmtKind::Decl: {
                out->kind = SsaStmt::Kind::Decl;
                for (auto& d : s.decls) {
                    prog_.symbols.add(d.name, {s.decl_type, d.dims});
                    region_locals_.insert(d.name);
                    if (d.init && d.dims.empty()) {
                        SsaDef def;
                        def.kind = DefKind::Assign;
                        def.type = s.decl_type;
                        def.target = d.name;
                        def.value = resolve(*d.init);
                        int id = add_def(std::move(def));
                        finish_def(id, d.name);
                        out->decl_defs.push_back(id);
                    } else {
                        out->decl_defs.push_back(-1);
                    }
                }
                break;
            }
            case StmtKind::If:
                walk_if(s, *out);
                break;
            case StmtKind::For:
                walk_for(s, *out);
                break;
            case StmtKind::Block: {
                out->kind = SsaStmt::Kind::Block;
                int saved = cur_scope_;
                cur_scope_ = new_scope(ScopeInfo::Kind::Plain);
                out->scope = cur_scope_;
                for (auto& st : s.stmts) out->stmts.push_back(walk(*st));
                cur_scope_ = saved;
                break;
            }
            case StmtKind::CallStmt:
                out->kind = SsaStmt::Kind::Call;
                break;
            case StmtKind::Empty:
                out->kind = SsaStmt::Kind::Empty;
                break;
        }
        return out;
    }

    int walk_assign(const Stmt& s) {
        if (s.lhs->kind == ExprKind::Var) {
            const auto& sym = symbol(s.lhs->name, s.lhs->loc);
            if (!sym.dims.empty()) throw SyntaxError(s.lhs->loc, "assignment to array name");
            SsaDef def;
            def.kind = DefKind::Assign;
            def.type = sym.type;
            def.target = s.lhs->name;
            def.value = resolve(*s.rhs);
            int id = add_def(std::move(def));
            finish_def(id, s.lhs->name);
            return id;
        }
        // Array store.
        const auto& sym = symbol(s.lhs->name, s.lhs->loc);
        if (sym.dims.size() != s.lhs->kids.size())
            throw SyntaxError(s.lhs->loc, "wrong subscript count for " + s.lhs->name);
        SsaDef def;
        def.kind = DefKind::Store;
        def.type = sym.type;
        def.target = s.lhs->name;
        for (auto& k : s.lhs->kids) {
            auto r = resolve(*k);
            if (r->type != Ty::Int) throw SyntaxError(k->loc, "array index is not an integer");
            def.indices.push_back(std::move(r));
        }
        def.value = resolve(*s.rhs);
        std::string canon = tuple_text(def.indices);
        int id = add_def(std::move(def));
        finish_def(id, {});
        prog_.store_events.push_back({id, static_cast<int>(prog_.store_events.size())});
        events_[s.lhs->name].push_back({id, cur_scope_, canon});
        return id;
    }

    void walk_if(const Stmt& s, SsaStmt& out) {
        out.kind = SsaStmt::Kind::If;
        out.cond = resolve(*s.cond);

        auto events_len = [&] {
            std::map<std::string, size_t> n;
            for (auto& [b, v] : events_) n[b] = v.size();
            return n;
        };
        auto before = events_len();
        auto s0 = state_;

        out.then_s = walk_branch(*s.then_s);
        auto s1 = state_;
        state_ = s0;
        if (s.else_s) out.else_s = walk_branch(*s.else_s);
        auto s2 = state_;

        // φ for every name the two arms disagree on.
        std::set<std::string> names;
        for (auto& [n, v] : s1) names.insert(n);
        for (auto& [n, v] : s2) names.insert(n);
        for (auto& n : names) {
            ValRef va = s1.count(n) ? s1[n] : free_of(n);
            ValRef vb = s2.count(n) ? s2[n] : free_of(n);
            if (va == vb) {
                state_[n] = va;
                continue;
            }
            SsaDef phi;
            phi.kind = DefKind::IfPhi;
            phi.type = symbol(n, s.loc).type;
            phi.target = n;
            phi.cond = out.cond->clone();
            phi.phi_a = va;
            phi.phi_b = vb;
            int id = add_def(std::move(phi));
            finish_def(id, n);
            out.merge_phis.push_back(id);
        }

        // Conditional stores invalidate reuse for their whole base.
        for (auto& [base, v] : events_) {
            size_t was = before.count(base) ? before[base] : 0;
            if (v.size() > was) kill_base(base);
        }
    }

    SsaStmtPtr walk_branch(const Stmt& s) {
        int saved = cur_scope_;
        cur_scope_ = new_scope(ScopeInfo::Kind::IfBranch);
        SsaStmtPtr out;
        if (s.kind == StmtKind::Block) {
            out = std::make_unique<SsaStmt>();
            out->kind = SsaStmt::Kind::Block;
            out->orig = &s;
            out->scope = cur_scope_;
            for (auto& st : s.stmts) out->stmts.push_back(walk(*st));
        } else {
            out = walk(s);
        }
        cur_scope_ = saved;
        return out;
    }

    void walk_for(const Stmt& s, SsaStmt& out) {
        out.kind = SsaStmt::Kind::For;
        out.loop_id = prog_.n_loops++;

        in_header_ = true;
        out.stmts.push_back(walk(*s.init));  // stmts[0] = init, stmts[1] = step
        in_header_ = false;

        std::set<std::string> assigned;
        collect_assigned_scalars(*s.body, assigned);
        collect_assigned_scalars(*s.step, assigned);
        std::set<std::string> stored;
        collect_stored_bases(*s.body, stored);
        collect_stored_bases(*s.step, stored);

        for (auto& base : stored) kill_base(base);  // loop-carried stores kill reuse

        for (auto& n : assigned) {
            SsaDef phi;
            phi.kind = DefKind::ForPhi;
            phi.type = symbol(n, s.loc).type;
            phi.target = n;
            phi.loop_id = out.loop_id;
            phi.phi_a = current(n);  // init value
            int id = add_def(std::move(phi));
            finish_def(id, n);
            out.entry_phis.push_back(id);
        }

        int saved = cur_scope_;
        cur_scope_ = new_scope(ScopeInfo::Kind::ForBody, out.loop_id);
        if (s.body->kind == StmtKind::Block) {
            auto blk = std::make_unique<SsaStmt>();
            blk->kind = SsaStmt::Kind::Block;
            blk->orig = s.body.get();
            blk->scope = cur_scope_;
            for (auto& st : s.body->stmts) blk->stmts.push_back(walk(*st));
            out.body = std::move(blk);
        } else {
            out.body = walk(*s.body);
        }
        in_header_ = true;
        out.stmts.push_back(walk(*s.step));
        in_header_ = false;
        cur_scope_ = saved;

        for (int phi_id : out.entry_phis) {
            prog_.defs[phi_id].phi_b = current(prog_.defs[phi_id].target);  // carried value
        }

        for (auto& base : stored) kill_base(base);  // stores stay behind the loop exit

        for (auto& n : assigned) {
            SsaDef ex;
            ex.kind = DefKind::ExitPhi;
            ex.type = symbol(n, s.loc).type;
            ex.target = n;
            ex.loop_id = out.loop_id;
            int id = add_def(std::move(ex));
            finish_def(id, n);
            out.exit_phis.push_back(id);
        }
    }
};

}  // namespace

SsaProgram build_ssa(const Region& region, const SymbolTable& symbols) {
    SsaBuilder b(region, symbols);
    return b.run();
}

ValRef reaching_def(const SsaProgram& prog, const std::string& name, int point) {
    if (point < 0 || prog.state_after.empty()) return free_of(name);
    if (point >= static_cast<int>(prog.state_after.size()))
        point = static_cast<int>(prog.state_after.size()) - 1;
    const auto& st = prog.state_after[static_cast<size_t>(point)];
    auto it = st.find(name);
    return it == st.end() ? free_of(name) : it->second;
}

namespace {

std::string ref_text(const ValRef& r) {
    return r.is_def() ? "v" + std::to_string(r.def) : r.free_name;
}

}  // namespace

std::string SsaProgram::dump() const {
    std::string out;
    for (const auto& d : defs) {
        out += "v" + std::to_string(d.id) + " := ";
        switch (d.kind) {
            case DefKind::Assign:
                out += render_ssa_expr(*d.value);
                break;
            case DefKind::Store: {
                out += d.target;
                for (auto& ix : d.indices) out += "[" + render_ssa_expr(*ix) + "]";
                out += " <- " + render_ssa_expr(*d.value);
                break;
            }
            case DefKind::IfPhi:
                out += "phi(" + render_ssa_expr(*d.cond) + ", " + ref_text(d.phi_a) + ", " +
                       ref_text(d.phi_b) + ")";
                break;
            case DefKind::ForPhi:
                out += "phi(loop#" + std::to_string(d.loop_id) + " " + d.target +
                       ", init=" + ref_text(d.phi_a) + ", carried=" + ref_text(d.phi_b) + ")";
                break;
            case DefKind::ExitPhi:
                out += "exit(loop#" + std::to_string(d.loop_id) + " " + d.target + ")";
                break;
        }
        out += " [s" + std::to_string(d.scope) + "]\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// SSA evaluation (fidelity oracle)

namespace {

struct SsaEval {
    const SsaProgram& prog;
    Environment& env;
    std::vector<Scalar> table;
    std::vector<bool> have;
    long long budget = 50'000'000;

    SsaEval(const SsaProgram& p, Environment& e)
        : prog(p), env(e), table(p.defs.size()), have(p.defs.size(), false) {}

    void tick() {
        if (--budget < 0) throw EvalError("evaluation step budget exceeded (runaway loop?)");
    }

    Scalar eval(const SsaExpr& e) {
        switch (e.kind) {
            case SsaKind::IntConst:
                return Scalar::of_int(e.ival);
            case SsaKind::FloatConst:
                return Scalar::of_double(e.fval);
            case SsaKind::Ref:
                if (!have[static_cast<size_t>(e.ref)])
                    throw InternalError("ssa ref evaluated before its definition");
                return table[static_cast<size_t>(e.ref)];
            case SsaKind::FreeVar: {
                auto it = env.scalars.find(e.name);
                if (it == env.scalars.end()) throw EvalError("read of undefined variable: " + e.name);
                return it->second;
            }
            case SsaKind::Load: {
                auto it = env.arrays.find(e.name);
                if (it == env.arrays.end()) throw EvalError("read of undefined array: " + e.name);
                std::vector<long long> idx;
                for (auto& k : e.kids) idx.push_back(eval(*k).as_int());
                return it->second.get(it->second.flat(idx));
            }
            case SsaKind::Unary:
                return apply_un(e.un, eval(*e.kids[0]));
            case SsaKind::Binary: {
                if (e.bin == BinOp::And) {
                    if (!eval(*e.kids[0]).truthy()) return Scalar::of_int(0);
                    return Scalar::of_int(eval(*e.kids[1]).truthy());
                }
                if (e.bin == BinOp::Or) {
                    if (eval(*e.kids[0]).truthy()) return Scalar::of_int(1);
                    return Scalar::of_int(eval(*e.kids[1]).truthy());
                }
                return apply_bin(e.bin, eval(*e.kids[0]), eval(*e.kids[1]));
            }
            case SsaKind::Call: {
                std::vector<Scalar> args;
                for (auto& k : e.kids) args.push_back(eval(*k));
                return apply_call(e.name, args);
            }
            case SsaKind::Fma:
                return apply_fma(eval(*e.kids[0]), eval(*e.kids[1]), eval(*e.kids[2]));
        }
        throw InternalError("unknown ssa expr kind");
    }

    void set_def(int id, Scalar v) {
        const SsaDef& d = prog.defs[static_cast<size_t>(id)];
        Scalar cv = coerce(v, d.type);
        table[static_cast<size_t>(id)] = cv;
        have[static_cast<size_t>(id)] = true;
        if (d.kind != DefKind::Store) env.scalars[d.target] = cv;
    }

    Scalar env_value(const std::string& name) {
        auto it = env.scalars.find(name);
        if (it == env.scalars.end()) throw EvalError("read of undefined variable: " + name);
        return it->second;
    }

    void exec(const SsaStmt& s) {
        tick();
        switch (s.kind) {
            case SsaStmt::Kind::Assign: {
                const SsaDef& d = prog.defs[static_cast<size_t>(s.def)];
                if (d.kind == DefKind::Store) {
                    auto it = env.arrays.find(d.target);
                    if (it == env.arrays.end()) throw EvalError("store to undefined array: " + d.target);
                    std::vector<long long> idx;
                    for (auto& ix : d.indices) idx.push_back(eval(*ix).as_int());
                    Scalar cv = coerce(eval(*d.value), d.type);
                    it->second.set(it->second.flat(idx), cv);
                    table[static_cast<size_t>(s.def)] = cv;
                    have[static_cast<size_t>(s.def)] = true;
                } else {
                    set_def(s.def, eval(*d.value));
                }
                break;
            }
            case SsaStmt::Kind::Decl: {
                const Stmt& o = *s.orig;
                for (size_t k = 0; k < o.decls.size(); k++) {
                    const Declarator& d = o.decls[k];
                    if (d.dims.empty()) {
                        Scalar& slot = env.scalars[d.name];
                        slot.type = o.decl_type;
                        if (s.decl_defs[k] >= 0)
                            set_def(s.decl_defs[k],
                                    eval(*prog.defs[static_cast<size_t>(s.decl_defs[k])].value));
                    } else if (!env.arrays.count(d.name)) {
                        ArrayBuf buf;
                        buf.type = o.decl_type;
                        buf.dims = d.dims;
                        if (buf.type == Ty::Int)
                            buf.iv.assign(buf.size(), 0);
                        else
                            buf.dv.assign(buf.size(), 0.0);
                        env.arrays[d.name] = std::move(buf);
                    }
                }
                break;
            }
            case SsaStmt::Kind::If: {
                bool taken = eval(*s.cond).truthy();
                if (taken)
                    exec(*s.then_s);
                else if (s.else_s)
                    exec(*s.else_s);
                for (int phi : s.merge_phis)
                    set_def(phi, env_value(prog.defs[static_cast<size_t>(phi)].target));
                break;
            }
            case SsaStmt::Kind::For: {
                exec(*s.stmts[0]);  // init
                const Stmt& o = *s.orig;
                for (;;) {
                    if (o.for_cond && !eval_expr(*o.for_cond, env).truthy()) break;
                    tick();
                    for (int phi : s.entry_phis)
                        set_def(phi, env_value(prog.defs[static_cast<size_t>(phi)].target));
                    exec(*s.body);
                    exec(*s.stmts[1]);  // step
                }
                for (int phi : s.exit_phis)
                    set_def(phi, env_value(prog.defs[static_cast<size_t>(phi)].target));
                break;
            }
            case SsaStmt::Kind::Block:
                for (auto& st : s.stmts) exec(*st);
                break;
            case SsaStmt::Kind::Call:
                eval_expr(*s.orig->call, env);  // builtins are pure; value dropped
                break;
            case SsaStmt::Kind::Empty:
                break;
        }
    }
};

}  // namespace

Environment eval_ssa(const SsaProgram& prog, Environment env) {
    SsaEval ev(prog, env);
    ev.exec(*prog.body);
    return env;
}

}  // namespace satcc
