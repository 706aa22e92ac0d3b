#include "satcc/egraph.hpp"

#include <algorithm>
#include <cstring>

#include "satcc/diag.hpp"
#include "satcc/printer.hpp"

namespace satcc {

const char* op_name(Op op) {
    switch (op) {
        case Op::ConstInt: return "int";
        case Op::ConstFloat: return "float";
        case Op::FreeVar: return "free";
        case Op::Load: return "load";
        case Op::IfPhi: return "if-phi";
        case Op::ForPhi: return "for-phi";
        case Op::ExitPhi: return "exit-phi";
        case Op::Neg: return "neg";
        case Op::Not: return "not";
        case Op::Add: return "+";
        case Op::Sub: return "-";
        case Op::Mul: return "*";
        case Op::Div: return "/";
        case Op::Mod: return "%";
        case Op::Lt: return "<";
        case Op::Le: return "<=";
        case Op::Gt: return ">";
        case Op::Ge: return ">=";
        case Op::Eq: return "==";
        case Op::Ne: return "!=";
        case Op::And: return "&&";
        case Op::Or: return "||";
        case Op::Fma: return "fma";
        case Op::Call: return "call";
    }
    return "?";
}

bool ENode::operator==(const ENode& o) const {
    return op == o.op && ival == o.ival &&
           std::memcmp(&fval, &o.fval, sizeof(double)) == 0 && sym == o.sym && aux == o.aux &&
           kids == o.kids;
}

size_t ENodeHash::operator()(const ENode& n) const {
    auto mix = [](size_t h, size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)); };
    size_t h = static_cast<size_t>(n.op);
    h = mix(h, static_cast<size_t>(n.ival));
    uint64_t bits;
    std::memcpy(&bits, &n.fval, sizeof(bits));
    h = mix(h, static_cast<size_t>(bits));
    h = mix(h, std::hash<std::string>{}(n.sym));
    h = mix(h, static_cast<size_t>(n.aux));
    for (int k : n.kids) h = mix(h, static_cast<size_t>(k));
    return h;
}

int EGraph::find(int id) const {
    if (id < 0 || id >= static_cast<int>(uf_.size())) throw InternalError("bad e-class ref");
    while (uf_[static_cast<size_t>(id)] != id) {
        uf_[static_cast<size_t>(id)] = uf_[uf_[static_cast<size_t>(id)]];  // path halving
        id = uf_[static_cast<size_t>(id)];
    }
    return id;
}

ENode EGraph::canonicalize(ENode n) const {
    for (int& k : n.kids) k = find(k);
    return n;
}

Ty EGraph::infer_type(const ENode& n, Ty leaf_type) const {
    switch (n.op) {
        case Op::ConstInt:
            return Ty::Int;
        case Op::ConstFloat:
            return Ty::Double;
        case Op::FreeVar:
        case Op::Load:
        case Op::IfPhi:
        case Op::ForPhi:
        case Op::ExitPhi:
            return leaf_type;
        case Op::Call:
            return Ty::Double;
        case Op::Not:
        case Op::Mod:
        case Op::Lt:
        case Op::Le:
        case Op::Gt:
        case Op::Ge:
        case Op::Eq:
        case Op::Ne:
        case Op::And:
        case Op::Or:
            return Ty::Int;
        case Op::Neg:
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div:
        case Op::Fma:
            for (int k : n.kids)
                if (classes_[static_cast<size_t>(find(k))].type == Ty::Double) return Ty::Double;
            return Ty::Int;
    }
    return Ty::Double;
}

int EGraph::add(ENode n, Ty leaf_type) {
    for (int& k : n.kids) k = find(k);
    auto it = hashcons_.find(n);
    if (it != hashcons_.end()) return find(it->second);

    int id = static_cast<int>(classes_.size());
    Ty t = infer_type(n, leaf_type);
    classes_.emplace_back();
    parents_.emplace_back();
    uf_.push_back(id);

    EClass& c = classes_.back();
    c.type = t;
    c.nodes.push_back(n);
    c.serials.push_back(serial_++);

    std::vector<int> seen;
    for (int k : n.kids) {
        if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
        seen.push_back(k);
        parents_[static_cast<size_t>(k)].push_back({n, id});
    }
    hashcons_.emplace(std::move(n), id);
    return id;
}

int EGraph::merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    int w = std::min(a, b);  // lowest id stays canonical: deterministic
    int l = std::max(a, b);
    uf_[static_cast<size_t>(l)] = w;
    n_unions_++;

    EClass& cw = classes_[static_cast<size_t>(w)];
    EClass& clo = classes_[static_cast<size_t>(l)];
    for (size_t i = 0; i < clo.nodes.size(); i++) {
        cw.nodes.push_back(std::move(clo.nodes[i]));
        cw.serials.push_back(clo.serials[i]);
    }
    clo.nodes.clear();
    clo.serials.clear();
    cw.ssa_ids.insert(clo.ssa_ids.begin(), clo.ssa_ids.end());
    clo.ssa_ids.clear();
    if (clo.type == Ty::Double) cw.type = Ty::Double;
    if (!cw.cval && clo.cval) cw.cval = clo.cval;
    clo.cval.reset();

    auto& pw = parents_[static_cast<size_t>(w)];
    auto& pl = parents_[static_cast<size_t>(l)];
    pw.insert(pw.end(), std::make_move_iterator(pl.begin()), std::make_move_iterator(pl.end()));
    pl.clear();

    dirty_.push_back(w);
    return w;
}

void EGraph::repair(int id) {
    auto ps = std::move(parents_[static_cast<size_t>(id)]);
    parents_[static_cast<size_t>(id)].clear();

    // Re-key the hash-cons entries of every parent node.
    for (auto& [pn, pc] : ps) {
        hashcons_.erase(pn);
        ENode cn = canonicalize(pn);
        auto it = hashcons_.find(cn);
        if (it != hashcons_.end() && find(it->second) != find(pc)) merge(it->second, pc);
        hashcons_[cn] = find(pc);
    }

    // Deduplicate parents; congruent parents merge.
    std::unordered_map<ENode, int, ENodeHash> fresh;
    for (auto& [pn, pc] : ps) {
        ENode cn = canonicalize(pn);
        auto it = fresh.find(cn);
        if (it != fresh.end())
            merge(pc, it->second);
        else
            fresh.emplace(std::move(cn), find(pc));
    }
    auto& dst = parents_[static_cast<size_t>(find(id))];
    for (auto& [n, c] : fresh) dst.push_back({n, find(c)});
}

void EGraph::rebuild() {
    while (!dirty_.empty()) {
        std::vector<int> todo = std::move(dirty_);
        dirty_.clear();
        std::set<int> seen;
        for (int id : todo) seen.insert(find(id));
        for (int id : seen) repair(id);
    }
    rebuild_count_++;
}

std::vector<int> EGraph::class_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(classes_.size()); i++)
        if (find(i) == i) out.push_back(i);
    return out;
}

std::vector<std::pair<ENode, int>> EGraph::canonical_nodes(int id) const {
    const EClass& c = classes_[static_cast<size_t>(find(id))];
    std::vector<std::pair<ENode, int>> out;
    std::unordered_map<ENode, size_t, ENodeHash> at;
    for (size_t i = 0; i < c.nodes.size(); i++) {
        ENode n = canonicalize(c.nodes[i]);
        auto it = at.find(n);
        if (it == at.end()) {
            at.emplace(n, out.size());
            out.emplace_back(std::move(n), c.serials[i]);
        } else if (c.serials[i] < out[it->second].second) {
            out[it->second].second = c.serials[i];
        }
    }
    return out;
}

EGraphStats EGraph::stats() const {
    EGraphStats s;
    s.n_classes = static_cast<int>(class_ids().size());
    s.n_nodes = static_cast<int>(hashcons_.size());
    s.n_unions = n_unions_;
    s.rebuild_count = rebuild_count_;
    return s;
}

namespace {

std::string node_text(const ENode& n) {
    std::string s;
    switch (n.op) {
        case Op::ConstInt:
            return "int " + std::to_string(n.ival);
        case Op::ConstFloat:
            return "float " + format_double(n.fval);
        case Op::FreeVar:
            return "free " + n.sym;
        case Op::Load:
            s = "load " + n.sym + "#" + std::to_string(n.aux);
            break;
        case Op::ForPhi:
        case Op::ExitPhi:
            s = std::string(op_name(n.op)) + " loop#" + std::to_string(n.aux) + " " + n.sym;
            break;
        case Op::IfPhi:
            s = "if-phi " + n.sym;
            break;
        case Op::Call:
            s = "call " + n.sym;
            break;
        default:
            s = op_name(n.op);
            break;
    }
    for (int k : n.kids) s += " c" + std::to_string(k);
    return s;
}

}  // namespace

std::string EGraph::dump() const {
    std::string out;
    for (int id : class_ids()) {
        const EClass& c = cls(id);
        out += "c" + std::to_string(id);
        out += c.type == Ty::Int ? " [int]" : " [double]";
        if (c.cval) {
            out += " =";
            out += c.cval->type == Ty::Int ? std::to_string(c.cval->i) : format_double(c.cval->d);
        }
        out += ":";
        for (auto& [n, serial] : canonical_nodes(id)) out += " {" + node_text(n) + "}";
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// SSA conversion

namespace {

struct Loader {
    const SsaProgram& prog;
    SsaGraph out;

    int class_of(const ValRef& r) {
        if (r.is_def()) return out.def_class.at(r.def);
        const auto* sym = prog.symbols.find(r.free_name);
        ENode n;
        n.op = Op::FreeVar;
        n.sym = r.free_name;
        return out.g.add(std::move(n), sym ? sym->type : Ty::Double);
    }

    int add_expr(const SsaExpr& e) {
        ENode n;
        switch (e.kind) {
            case SsaKind::IntConst:
                n.op = Op::ConstInt;
                n.ival = e.ival;
                return out.g.add(std::move(n));
            case SsaKind::FloatConst:
                n.op = Op::ConstFloat;
                n.fval = e.fval;
                return out.g.add(std::move(n));
            case SsaKind::Ref:
                return out.def_class.at(e.ref);
            case SsaKind::FreeVar:
                n.op = Op::FreeVar;
                n.sym = e.name;
                return out.g.add(std::move(n), e.type);
            case SsaKind::Load:
                n.op = Op::Load;
                n.sym = e.name;
                n.aux = e.epoch;
                for (auto& k : e.kids) n.kids.push_back(add_expr(*k));
                return out.g.add(std::move(n), e.type);
            case SsaKind::Unary:
                n.op = e.un == UnOp::Neg ? Op::Neg : Op::Not;
                n.kids.push_back(add_expr(*e.kids[0]));
                return out.g.add(std::move(n));
            case SsaKind::Binary: {
                switch (e.bin) {
                    case BinOp::Add: n.op = Op::Add; break;
                    case BinOp::Sub: n.op = Op::Sub; break;
                    case BinOp::Mul: n.op = Op::Mul; break;
                    case BinOp::Div: n.op = Op::Div; break;
                    case BinOp::Mod: n.op = Op::Mod; break;
                    case BinOp::Lt: n.op = Op::Lt; break;
                    case BinOp::Le: n.op = Op::Le; break;
                    case BinOp::Gt: n.op = Op::Gt; break;
                    case BinOp::Ge: n.op = Op::Ge; break;
                    case BinOp::Eq: n.op = Op::Eq; break;
                    case BinOp::Ne: n.op = Op::Ne; break;
                    case BinOp::And: n.op = Op::And; break;
                    case BinOp::Or: n.op = Op::Or; break;
                }
                n.kids.push_back(add_expr(*e.kids[0]));
                n.kids.push_back(add_expr(*e.kids[1]));
                return out.g.add(std::move(n));
            }
            case SsaKind::Call:
                n.op = Op::Call;
                n.sym = e.name;
                for (auto& k : e.kids) n.kids.push_back(add_expr(*k));
                return out.g.add(std::move(n));
            case SsaKind::Fma:
                n.op = Op::Fma;
                for (auto& k : e.kids) n.kids.push_back(add_expr(*k));
                return out.g.add(std::move(n));
        }
        throw InternalError("unknown ssa expr kind");
    }

    void run() {
        for (const SsaDef& d : prog.defs) {
            int cls = -1;
            switch (d.kind) {
                case DefKind::Assign:
                    cls = add_expr(*d.value);
                    if (!d.in_header) out.roots.emplace_back(d.id, cls);
                    break;
                case DefKind::Store: {
                    std::vector<int>& ix = out.store_index_classes[d.id];
                    for (auto& i : d.indices) ix.push_back(add_expr(*i));
                    cls = add_expr(*d.value);
                    if (!d.in_header) out.roots.emplace_back(d.id, cls);
                    break;
                }
                case DefKind::IfPhi: {
                    ENode n;
                    n.op = Op::IfPhi;
                    n.sym = d.target;
                    n.kids.push_back(add_expr(*d.cond));
                    n.kids.push_back(class_of(d.phi_a));
                    n.kids.push_back(class_of(d.phi_b));
                    cls = out.g.add(std::move(n), d.type);
                    break;
                }
                case DefKind::ForPhi: {
                    ENode n;
                    n.op = Op::ForPhi;
                    n.sym = d.target;
                    n.aux = d.loop_id;
                    n.kids.push_back(class_of(d.phi_a));
                    cls = out.g.add(std::move(n), d.type);
                    break;
                }
                case DefKind::ExitPhi: {
                    ENode n;
                    n.op = Op::ExitPhi;
                    n.sym = d.target;
                    n.aux = d.loop_id;
                    cls = out.g.add(std::move(n), d.type);
                    break;
                }
            }
            out.def_class[d.id] = cls;
            out.g.cls(cls).ssa_ids.insert(d.id);
        }
    }
};

}  // namespace

SsaGraph from_ssa(const SsaProgram& prog) {
    Loader loader{prog, {}};
    loader.run();
    return std::move(loader.out);
}

}  // namespace satcc
