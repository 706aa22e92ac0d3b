#include "satcc/codegen.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "satcc/diag.hpp"
#include "satcc/printer.hpp"

namespace satcc {

namespace {

// ---------------------------------------------------------------------------
// Region skeleton laid out as numbered statement lists. Block 0 is the region
// body; every if-branch, loop body, and nested block gets its own entry, in
// preorder, so planner and emitter agree on (block, slot) addresses.

struct BlockInfo {
    int parent_block = -1;
    int parent_slot = -1;  // slot of the parent list holding this block's stmt
    ScopeInfo::Kind kind = ScopeInfo::Kind::Region;
    int loop_id = -1;  // ForBody only
    std::vector<const SsaStmt*> slots;
};

struct Pos {
    int block = 0;
    int slot = 0;
    bool operator==(const Pos&) const = default;
};

struct BlockTable {
    const SsaProgram* prog = nullptr;
    std::vector<BlockInfo> blocks;
    std::map<int, Pos> def_pos;  // non-header def id -> statement position
    std::map<const SsaStmt*, int> body_block;   // For body / plain Block / branch
    std::map<const SsaStmt*, int> else_block;   // If else branch
    // Subtree summaries used as hoisting barriers.
    std::map<const SsaStmt*, std::set<std::string>> sub_assigns;  // scalar targets
    std::map<const SsaStmt*, std::vector<int>> sub_stores;        // store def ids

    // Program-order key: chain of (slot, entered-block) pairs from the region
    // body down to the position, terminated by (slot, -1). A temp group at
    // (b, s) sits just before statement s, so its key sorts ahead of any
    // position inside that statement's sub-blocks.
    std::vector<std::pair<int, int>> key(Pos p) const {
        std::vector<std::pair<int, int>> k{{p.slot, -1}};
        int b = p.block;
        while (b > 0) {
            k.emplace_back(blocks[b].parent_slot, b);
            b = blocks[b].parent_block;
        }
        std::reverse(k.begin(), k.end());
        return k;
    }
    bool before(Pos a, Pos b) const { return key(a) < key(b); }
};

class TableBuilder {
  public:
    explicit TableBuilder(const SsaProgram& prog) : prog_(prog) { t_.prog = &prog; }

    BlockTable run() {
        int root = new_block(-1, -1, ScopeInfo::Kind::Region, -1);
        if (prog_.body->kind == SsaStmt::Kind::Block) {
            for (auto& st : prog_.body->stmts) add_slot(root, st.get());
        } else {
            add_slot(root, prog_.body.get());
        }
        return std::move(t_);
    }

  private:
    const SsaProgram& prog_;
    BlockTable t_;

    int new_block(int parent, int pslot, ScopeInfo::Kind k, int loop) {
        t_.blocks.push_back({parent, pslot, k, loop, {}});
        return static_cast<int>(t_.blocks.size()) - 1;
    }

    int list_block(const SsaStmt* s, int parent, int pslot, ScopeInfo::Kind k, int loop) {
        int b = new_block(parent, pslot, k, loop);
        if (s->kind == SsaStmt::Kind::Block) {
            for (auto& st : s->stmts) add_slot(b, st.get());
        } else {
            add_slot(b, s);
        }
        return b;
    }

    void add_slot(int b, const SsaStmt* s) {
        int slot = static_cast<int>(t_.blocks[b].slots.size());
        t_.blocks[b].slots.push_back(s);
        summarize(s);
        switch (s->kind) {
            case SsaStmt::Kind::Assign:
                t_.def_pos[s->def] = {b, slot};
                break;
            case SsaStmt::Kind::Decl:
                for (int id : s->decl_defs)
                    if (id >= 0) t_.def_pos[id] = {b, slot};
                break;
            case SsaStmt::Kind::If:
                t_.body_block[s] =
                    list_block(s->then_s.get(), b, slot, ScopeInfo::Kind::IfBranch, -1);
                if (s->else_s)
                    t_.else_block[s] =
                        list_block(s->else_s.get(), b, slot, ScopeInfo::Kind::IfBranch, -1);
                break;
            case SsaStmt::Kind::For:
                t_.body_block[s] =
                    list_block(s->body.get(), b, slot, ScopeInfo::Kind::ForBody, s->loop_id);
                break;
            case SsaStmt::Kind::Block:
                t_.body_block[s] = list_block(s, b, slot, ScopeInfo::Kind::Plain, -1);
                break;
            default:
                break;
        }
    }

    // Scalar targets and store defs of a statement subtree, loop headers
    // included (they assign the induction variable).
    void summarize(const SsaStmt* s) {
        if (t_.sub_assigns.count(s)) return;
        std::set<std::string> a;
        std::vector<int> st;
        auto merge_child = [&](const SsaStmt* c) {
            if (!c) return;
            summarize(c);
            const auto& ca = t_.sub_assigns[c];
            a.insert(ca.begin(), ca.end());
            const auto& cs = t_.sub_stores[c];
            st.insert(st.end(), cs.begin(), cs.end());
        };
        switch (s->kind) {
            case SsaStmt::Kind::Assign: {
                const SsaDef& d = prog_.defs[static_cast<size_t>(s->def)];
                if (d.kind == DefKind::Store)
                    st.push_back(d.id);
                else
                    a.insert(d.target);
                break;
            }
            case SsaStmt::Kind::Decl:
                for (int id : s->decl_defs)
                    if (id >= 0) a.insert(prog_.defs[static_cast<size_t>(id)].target);
                break;
            case SsaStmt::Kind::If:
                merge_child(s->then_s.get());
                merge_child(s->else_s.get());
                break;
            case SsaStmt::Kind::For:
                for (auto& h : s->stmts) merge_child(h.get());  // init + step
                merge_child(s->body.get());
                break;
            case SsaStmt::Kind::Block:
                for (auto& c : s->stmts) merge_child(c.get());
                break;
            default:
                break;
        }
        t_.sub_assigns[s] = std::move(a);
        t_.sub_stores[s] = std::move(st);
    }
};

// Earliest position dominating both: deepest block on both ancestor chains,
// at the smaller of the two containing slots.
Pos join(const BlockTable& t, Pos a, Pos b) {
    std::map<int, int> slot_in;  // block -> containing slot along a's chain
    {
        Pos p = a;
        for (;;) {
            slot_in[p.block] = p.slot;
            if (p.block == 0) break;
            p = {t.blocks[p.block].parent_block, t.blocks[p.block].parent_slot};
        }
    }
    Pos p = b;
    for (;;) {
        auto it = slot_in.find(p.block);
        if (it != slot_in.end()) return {p.block, std::min(it->second, p.slot)};
        p = {t.blocks[p.block].parent_block, t.blocks[p.block].parent_slot};
    }
}

// ---------------------------------------------------------------------------
// Selection helpers.

bool is_phi(Op op) { return op == Op::IfPhi || op == Op::ForPhi || op == Op::ExitPhi; }

bool is_atom_op(Op op) {
    return op == Op::ConstInt || op == Op::ConstFloat || op == Op::FreeVar || is_phi(op);
}

BinOp bin_of(Op op) {
    switch (op) {
        case Op::Add: return BinOp::Add;
        case Op::Sub: return BinOp::Sub;
        case Op::Mul: return BinOp::Mul;
        case Op::Div: return BinOp::Div;
        case Op::Mod: return BinOp::Mod;
        case Op::Lt: return BinOp::Lt;
        case Op::Le: return BinOp::Le;
        case Op::Gt: return BinOp::Gt;
        case Op::Ge: return BinOp::Ge;
        case Op::Eq: return BinOp::Eq;
        case Op::Ne: return BinOp::Ne;
        case Op::And: return BinOp::And;
        case Op::Or: return BinOp::Or;
        default: throw InternalError("not a binary op");
    }
}

std::string temp_name(int cls) { return "_v" + std::to_string(cls); }

// One planning/emission pass shares this view of the chosen DAG.
struct Selection {
    const EGraph* g = nullptr;
    std::map<int, const ENode*> choice;  // canonical class -> chosen node
    std::set<int> temps;                 // classes that get a temp
    std::vector<int> topo;               // reachable temp classes, parents first

    const ENode& node(int c) const {
        auto it = choice.find(g->find(c));
        if (it == choice.end()) throw InternalError("emission reached an unchosen class");
        return *it->second;
    }
    bool has_temp(int c) const { return temps.count(g->find(c)) != 0; }

    ExprPtr atom(int c) const {
        c = g->find(c);
        if (temps.count(c)) return make_var(temp_name(c));
        const ENode& n = node(c);
        switch (n.op) {
            case Op::ConstInt: return make_int(n.ival);
            case Op::ConstFloat: return make_float(n.fval);
            case Op::FreeVar:
            case Op::IfPhi:
            case Op::ForPhi:
            case Op::ExitPhi: return make_var(n.sym);
            default: throw InternalError("operation class used as an atom");
        }
    }

    ExprPtr render(int c) const {
        const ENode& n = node(c);
        std::vector<ExprPtr> kids;
        for (int k : n.kids) kids.push_back(atom(k));
        auto e = std::make_unique<Expr>();
        switch (n.op) {
            case Op::Load:
                e->kind = ExprKind::ArrayRef;
                e->name = n.sym;
                e->kids = std::move(kids);
                break;
            case Op::Neg:
            case Op::Not:
                return make_unary(n.op == Op::Neg ? UnOp::Neg : UnOp::Not, std::move(kids[0]));
            case Op::Fma:
                e->kind = ExprKind::Fma;
                e->kids = std::move(kids);
                break;
            case Op::Call:
                e->kind = ExprKind::Call;
                e->name = n.sym;
                e->kids = std::move(kids);
                break;
            default:
                return make_binary(bin_of(n.op), std::move(kids[0]), std::move(kids[1]));
        }
        return e;
    }
};

Selection make_selection(const Extraction& x, const EGraph& g) {
    Selection sel;
    sel.g = &g;
    for (auto& [c, n] : x.choice) sel.choice.emplace(g.find(c), &n);

    // Reachable classes, parents before kids; φ classes are leaves here.
    std::set<int> seen;
    std::vector<int> post;
    std::function<void(int)> dfs = [&](int c) {
        c = g.find(c);
        if (!seen.insert(c).second) return;
        const ENode& n = sel.node(c);
        if (!is_phi(n.op))
            for (int k : n.kids) dfs(k);
        post.push_back(c);
    };
    for (auto& [def, cls] : x.roots) dfs(cls);
    for (auto it = post.rbegin(); it != post.rend(); ++it) {
        if (!is_atom_op(sel.node(*it).op)) {
            sel.temps.insert(*it);
            sel.topo.push_back(*it);
        }
    }
    return sel;
}

// ---------------------------------------------------------------------------
// Anchors: every temp lands at the join of its consumers' positions. Roots
// pin their classes to the defining statement; a kid joins in each parent's
// anchor, walking the DAG parents-first.

std::map<int, Pos> compute_anchors(const Selection& sel, const BlockTable& t,
                                   const std::vector<std::pair<int, int>>& roots,
                                   const std::map<int, Pos>* pinned_loads) {
    std::map<int, Pos> anchor;
    auto fold = [&](int c, Pos p) {
        auto [it, fresh] = anchor.emplace(c, p);
        if (!fresh) it->second = join(t, it->second, p);
    };
    for (auto& [def, cls] : roots) {
        int c = sel.g->find(cls);
        if (!sel.has_temp(c)) continue;
        auto it = t.def_pos.find(def);
        if (it == t.def_pos.end()) throw InternalError("root definition has no statement slot");
        fold(c, it->second);
    }
    for (int c : sel.topo) {
        if (pinned_loads) {
            auto p = pinned_loads->find(c);
            if (p != pinned_loads->end()) anchor[c] = p->second;
        }
        auto it = anchor.find(c);
        if (it == anchor.end()) continue;  // unreachable from any placed consumer
        for (int k : sel.node(c).kids) {
            int kc = sel.g->find(k);
            if (sel.has_temp(kc)) fold(kc, it->second);
        }
    }
    return anchor;
}

// ---------------------------------------------------------------------------
// Load ordering key: (base, each index's text), numeric literals comparing
// numerically and sorting ahead of symbolic indices.

// Each index becomes (tag, value, text): tag 0 for integer literals (compared
// numerically, sorting ahead of symbolic indices), tag 1 for everything else
// (compared by rendered text).
using LoadKey = std::pair<std::string, std::vector<std::tuple<int, long long, std::string>>>;

LoadKey load_key(const Selection& sel, const ENode& n) {
    LoadKey k;
    k.first = n.sym;
    for (int kid : n.kids) {
        ExprPtr a = sel.atom(kid);
        if (a->kind == ExprKind::IntConst)
            k.second.emplace_back(0, a->ival, std::string());
        else
            k.second.emplace_back(1, 0, print_expr(*a));
    }
    return k;
}

// Integer constant value of a class, when that is knowable from the class
// itself (folded value or a literal node).
std::optional<long long> class_int_const(const EGraph& g, int c) {
    const EClass& cl = g.cls(c);
    if (cl.cval && cl.cval->type == Ty::Int) return cl.cval->i;
    for (const ENode& n : cl.nodes)
        if (n.op == Op::ConstInt) return n.ival;
    return std::nullopt;
}

// May a store write the cell a load reads? Conservative: different bases
// never collide; same-base accesses collide unless some index position pins
// both to different integer constants.
bool may_alias(const EGraph& g, const std::string& store_base, const std::vector<int>& store_idx,
               const ENode& load) {
    if (store_base != load.sym) return false;
    size_t n = std::min(store_idx.size(), load.kids.size());
    for (size_t i = 0; i < n; ++i) {
        auto a = class_int_const(g, g.find(store_idx[i]));
        auto b = class_int_const(g, g.find(load.kids[i]));
        if (a && b && *a != *b) return false;
    }
    return true;
}

// Scalar names and inner loads a load's index rendering depends on.
struct IndexDeps {
    std::set<std::string> reads;
    std::vector<int> loads;
};

IndexDeps index_deps(const Selection& sel, const ENode& load) {
    IndexDeps out;
    std::set<int> seen;
    std::function<void(int)> dfs = [&](int c) {
        c = sel.g->find(c);
        if (!seen.insert(c).second) return;
        const ENode& n = sel.node(c);
        if (is_phi(n.op)) {
            out.reads.insert(n.sym);
            return;
        }
        if (n.op == Op::FreeVar || n.op == Op::ConstInt || n.op == Op::ConstFloat) return;
        if (n.op == Op::Load) out.loads.push_back(c);
        for (int k : n.kids) dfs(k);
    };
    for (int k : load.kids) dfs(k);
    return out;
}

// ---------------------------------------------------------------------------
// Shared planning pass. With `bulk` set, loads are hoisted to the earliest
// barrier-free position and everything that feeds them is re-joined.

EmitPlan plan_impl(const Extraction& x, const SsaGraph& sg, const SsaProgram& prog, bool bulk) {
    const EGraph& g = sg.g;
    Selection sel = make_selection(x, g);
    BlockTable t = TableBuilder(prog).run();

    std::map<int, Pos> anchor = compute_anchors(sel, t, x.roots, nullptr);

    if (bulk) {
        // All stores of the region, for barrier checks keyed off subtree sets.
        std::map<int, const SsaDef*> store_defs;
        for (const SsaDef& d : prog.defs)
            if (d.kind == DefKind::Store) store_defs.emplace(d.id, &d);

        auto store_blocks = [&](const SsaStmt* s, const ENode& load) {
            for (int id : t.sub_stores.at(s)) {
                auto it = sg.store_index_classes.find(id);
                const std::vector<int> empty;
                const std::vector<int>& idx = it == sg.store_index_classes.end() ? empty : it->second;
                if (may_alias(g, store_defs.at(id)->target, idx, load)) return true;
            }
            return false;
        };

        std::map<int, Pos> pinned;
        // Kids-first over loads so an outer load can clamp to inner loads.
        for (auto it = sel.topo.rbegin(); it != sel.topo.rend(); ++it) {
            int c = *it;
            const ENode& n = sel.node(c);
            if (n.op != Op::Load) continue;
            auto nat = anchor.find(c);
            if (nat == anchor.end()) continue;
            IndexDeps deps = index_deps(sel, n);

            auto barred = [&](const SsaStmt* s) {
                const auto& a = t.sub_assigns.at(s);
                for (const std::string& r : deps.reads)
                    if (a.count(r)) return true;
                return store_blocks(s, n);
            };

            Pos target = nat->second;
            int b = target.block, s = target.slot;
            bool stopped = false;
            while (!stopped) {
                for (int j = s - 1; j >= 0; --j) {
                    if (barred(t.blocks[b].slots[static_cast<size_t>(j)])) {
                        target = {b, j + 1};
                        stopped = true;
                        break;
                    }
                }
                if (stopped) break;
                target = {b, 0};
                const BlockInfo& bi = t.blocks[b];
                if (bi.kind == ScopeInfo::Kind::Region || bi.kind == ScopeInfo::Kind::IfBranch)
                    break;
                if (bi.kind == ScopeInfo::Kind::ForBody) {
                    const SsaStmt* fs =
                        t.blocks[static_cast<size_t>(bi.parent_block)].slots[static_cast<size_t>(bi.parent_slot)];
                    if (barred(fs)) break;  // loop writes what the load needs
                }
                s = bi.parent_slot;
                b = bi.parent_block;
            }
            // Never land ahead of an inner load this one's indices read.
            for (int inner : deps.loads) {
                auto p = pinned.find(inner);
                Pos ip = p != pinned.end() ? p->second : anchor.at(inner);
                if (t.before(target, ip)) target = ip;
            }
            pinned[c] = target;
        }
        anchor = compute_anchors(sel, t, x.roots, &pinned);
    }

    // Index-feeding classes come first inside a group, then loads in key
    // order, then the rest; dependencies always override (Kahn over the
    // group's internal edges, picking the least (tier, key, class)).
    std::set<int> feeds_index;
    for (int c : sel.topo) {
        if (sel.node(c).op != Op::Load) continue;
        IndexDeps d = index_deps(sel, sel.node(c));
        std::set<int> seen;
        std::function<void(int)> dfs = [&](int k) {
            k = sel.g->find(k);
            if (!sel.has_temp(k) || !seen.insert(k).second) return;
            feeds_index.insert(k);
            const ENode& kn = sel.node(k);
            if (!is_phi(kn.op))
                for (int kk : kn.kids) dfs(kk);
        };
        for (int k : sel.node(c).kids) dfs(k);
    }

    std::map<std::vector<std::pair<int, int>>, std::vector<int>> groups;  // pos key -> classes
    std::map<int, Pos> pos_of;
    for (auto& [c, p] : anchor) {
        groups[t.key(p)].push_back(c);
        pos_of[c] = p;
    }

    EmitPlan plan;
    for (auto& [key, members] : groups) {
        std::set<int> in_group(members.begin(), members.end());
        std::map<int, int> pending;  // class -> unmet in-group deps
        std::map<int, std::vector<int>> consumers;
        for (int c : members) {
            int need = 0;
            const ENode& n = sel.node(c);
            for (int k : n.kids) {
                int kc = sel.g->find(k);
                if (kc != c && in_group.count(kc)) {
                    need++;
                    consumers[kc].push_back(c);
                }
            }
            pending[c] = need;
        }
        auto tier_key = [&](int c) {
            const ENode& n = sel.node(c);
            if (n.op == Op::Load) return std::tuple(1, load_key(sel, n), c);
            return std::tuple(feeds_index.count(c) ? 0 : 2, LoadKey{}, c);
        };
        std::set<int> ready;
        for (int c : members)
            if (pending[c] == 0) ready.insert(c);
        size_t emitted = 0;
        while (!ready.empty()) {
            int best = *ready.begin();
            for (int c : ready)
                if (tier_key(c) < tier_key(best)) best = c;
            ready.erase(best);
            emitted++;

            TempDef td;
            td.cls = best;
            td.name = temp_name(best);
            td.type = g.cls(best).type;
            td.is_load = sel.node(best).op == Op::Load;
            td.block = pos_of[best].block;
            td.slot = pos_of[best].slot;
            td.rhs = sel.render(best);
            plan.temp_defs.push_back(std::move(td));

            for (int c : consumers[best])
                if (--pending[c] == 0) ready.insert(c);
        }
        if (emitted != members.size())
            throw InternalError("temporary placement has a dependency cycle");
    }

    for (auto& [def, cls] : x.roots) plan.rewritten[def] = sel.atom(cls);
    return plan;
}

// ---------------------------------------------------------------------------
// Emission: rebuild the statement skeleton around the planned temps.

class BodyBuilder {
  public:
    BodyBuilder(const SsaProgram& prog, const EmitPlan& plan)
        : prog_(prog), plan_(plan), t_(TableBuilder(prog).run()) {
        for (const TempDef& td : plan.temp_defs) groups_[{td.block, td.slot}].push_back(&td);
    }

    StmtPtr run() {
        return wrap(0, prog_.body->kind == SsaStmt::Kind::Block ? prog_.body->orig : nullptr,
                    prog_.body.get());
    }

  private:
    const SsaProgram& prog_;
    const EmitPlan& plan_;
    BlockTable t_;
    std::map<std::pair<int, int>, std::vector<const TempDef*>> groups_;

    // Declarations then assignments for the temp group at (b, slot).
    void append_group(std::vector<StmtPtr>& out, int b, int slot) {
        auto it = groups_.find({b, slot});
        if (it == groups_.end()) return;
        for (Ty ty : {Ty::Int, Ty::Double}) {
            auto decl = std::make_unique<Stmt>();
            decl->kind = StmtKind::Decl;
            decl->decl_type = ty;
            for (const TempDef* td : it->second)
                if (td->type == ty) decl->decls.push_back({td->name, {}, nullptr});
            if (!decl->decls.empty()) out.push_back(std::move(decl));
        }
        for (const TempDef* td : it->second) {
            auto asg = std::make_unique<Stmt>();
            asg->kind = StmtKind::Assign;
            asg->lhs = make_var(td->name);
            asg->rhs = td->rhs->clone();
            out.push_back(std::move(asg));
        }
    }

    std::vector<StmtPtr> build_from(int b, int i) {
        std::vector<StmtPtr> out;
        append_group(out, b, i);
        int n = static_cast<int>(t_.blocks[b].slots.size());
        for (int j = i; j < n; ++j) {
            if (j > i && groups_.count({b, j})) {
                auto blk = std::make_unique<Stmt>();
                blk->kind = StmtKind::Block;
                blk->stmts = build_from(b, j);
                out.push_back(std::move(blk));
                return out;
            }
            out.push_back(rebuild(t_.blocks[b].slots[static_cast<size_t>(j)]));
        }
        return out;
    }

    // A branch/body statement list, wrapped in braces when the original had
    // them or when splicing added statements.
    StmtPtr wrap(int b, const Stmt* orig_block, const SsaStmt* skel) {
        std::vector<StmtPtr> stmts = build_from(b, 0);
        if (!orig_block && stmts.size() == 1 && skel->kind != SsaStmt::Kind::Block)
            return std::move(stmts[0]);
        auto blk = std::make_unique<Stmt>();
        blk->kind = StmtKind::Block;
        if (orig_block) blk->pragmas = orig_block->pragmas;
        blk->stmts = std::move(stmts);
        return blk;
    }

    ExprPtr rewritten_rhs(int def) const {
        auto it = plan_.rewritten.find(def);
        if (it == plan_.rewritten.end())
            throw InternalError("assignment was not covered by extraction");
        return it->second->clone();
    }

    StmtPtr rebuild(const SsaStmt* s) {
        switch (s->kind) {
            case SsaStmt::Kind::Assign: {
                auto st = std::make_unique<Stmt>();
                st->kind = StmtKind::Assign;
                st->loc = s->orig->loc;
                st->pragmas = s->orig->pragmas;
                st->lhs = s->orig->lhs->clone();  // store subscripts verbatim
                st->rhs = rewritten_rhs(s->def);
                return st;
            }
            case SsaStmt::Kind::Decl: {
                StmtPtr st = s->orig->clone();
                for (size_t i = 0; i < s->decl_defs.size(); ++i)
                    if (s->decl_defs[i] >= 0) st->decls[i].init = rewritten_rhs(s->decl_defs[i]);
                return st;
            }
            case SsaStmt::Kind::If: {
                auto st = std::make_unique<Stmt>();
                st->kind = StmtKind::If;
                st->loc = s->orig->loc;
                st->pragmas = s->orig->pragmas;
                st->cond = s->orig->cond->clone();
                st->then_s = wrap(t_.body_block.at(s),
                                  s->then_s->kind == SsaStmt::Kind::Block ? s->then_s->orig : nullptr,
                                  s->then_s.get());
                if (s->else_s)
                    st->else_s = wrap(t_.else_block.at(s),
                                      s->else_s->kind == SsaStmt::Kind::Block ? s->else_s->orig : nullptr,
                                      s->else_s.get());
                return st;
            }
            case SsaStmt::Kind::For: {
                auto st = std::make_unique<Stmt>();
                st->kind = StmtKind::For;
                st->loc = s->orig->loc;
                st->pragmas = s->orig->pragmas;
                st->raw_for_header = s->orig->raw_for_header;
                st->loop_var = s->orig->loop_var;
                st->init = s->orig->init->clone();
                if (s->orig->for_cond) st->for_cond = s->orig->for_cond->clone();
                st->step = s->orig->step->clone();
                st->body = wrap(t_.body_block.at(s),
                                s->body->kind == SsaStmt::Kind::Block ? s->body->orig : nullptr,
                                s->body.get());
                return st;
            }
            case SsaStmt::Kind::Block: {
                auto st = std::make_unique<Stmt>();
                st->kind = StmtKind::Block;
                st->loc = s->orig->loc;
                st->pragmas = s->orig->pragmas;
                st->stmts = build_from(t_.body_block.at(s), 0);
                return st;
            }
            default:
                return s->orig->clone();
        }
    }
};

}  // namespace

EmitPlan plan_temporaries(const Extraction& x, const SsaGraph& sg, const SsaProgram& prog) {
    return plan_impl(x, sg, prog, false);
}

void bulk_load_reorder(EmitPlan& plan, const Extraction& x, const SsaGraph& sg,
                       const SsaProgram& prog) {
    plan = plan_impl(x, sg, prog, true);
}

StmtPtr build_region_body(const SsaProgram& prog, const EmitPlan& plan) {
    return BodyBuilder(prog, plan).run();
}

std::string emit_module(KernelModule& m, std::vector<std::pair<Stmt*, StmtPtr>> bodies) {
    for (auto& [anchor, body] : bodies) {
        if (!anchor || anchor->kind != StmtKind::For || !body)
            throw InternalError("region anchor is not a loop");
        std::swap(anchor->body, body);
    }
    std::string text = print_module(m);
    for (auto& [anchor, body] : bodies) std::swap(anchor->body, body);
    return text;
}

}  // namespace satcc
