#include "satcc/interp.hpp"

#include <cmath>
#include <random>

#include "satcc/diag.hpp"

namespace satcc {

size_t ArrayBuf::flat(const std::vector<long long>& idx) const {
    if (idx.size() != dims.size())
        throw EvalError("array indexed with " + std::to_string(idx.size()) + " subscripts, declared with " +
                        std::to_string(dims.size()));
    size_t at = 0;
    for (size_t k = 0; k < dims.size(); k++) {
        if (idx[k] < 0 || idx[k] >= dims[k])
            throw EvalError("index " + std::to_string(idx[k]) + " out of bounds for dim " +
                            std::to_string(dims[k]));
        at = at * static_cast<size_t>(dims[k]) + static_cast<size_t>(idx[k]);
    }
    return at;
}

Scalar apply_bin(BinOp op, Scalar a, Scalar b) {
    bool ints = a.type == Ty::Int && b.type == Ty::Int;
    switch (op) {
        case BinOp::Add:
            return ints ? Scalar::of_int(a.i + b.i) : Scalar::of_double(a.as_double() + b.as_double());
        case BinOp::Sub:
            return ints ? Scalar::of_int(a.i - b.i) : Scalar::of_double(a.as_double() - b.as_double());
        case BinOp::Mul:
            return ints ? Scalar::of_int(a.i * b.i) : Scalar::of_double(a.as_double() * b.as_double());
        case BinOp::Div:
            if (ints) {
                if (b.i == 0) throw EvalError("integer division by zero");
                return Scalar::of_int(a.i / b.i);
            }
            return Scalar::of_double(a.as_double() / b.as_double());  // IEEE semantics
        case BinOp::Mod:
            if (!ints) throw EvalError("'%' requires integer operands");
            if (b.i == 0) throw EvalError("modulo by zero");
            return Scalar::of_int(a.i % b.i);
        case BinOp::Lt:
            return Scalar::of_int(ints ? a.i < b.i : a.as_double() < b.as_double());
        case BinOp::Le:
            return Scalar::of_int(ints ? a.i <= b.i : a.as_double() <= b.as_double());
        case BinOp::Gt:
            return Scalar::of_int(ints ? a.i > b.i : a.as_double() > b.as_double());
        case BinOp::Ge:
            return Scalar::of_int(ints ? a.i >= b.i : a.as_double() >= b.as_double());
        case BinOp::Eq:
            return Scalar::of_int(ints ? a.i == b.i : a.as_double() == b.as_double());
        case BinOp::Ne:
            return Scalar::of_int(ints ? a.i != b.i : a.as_double() != b.as_double());
        case BinOp::And:
            return Scalar::of_int(a.truthy() && b.truthy());
        case BinOp::Or:
            return Scalar::of_int(a.truthy() || b.truthy());
    }
    throw InternalError("unknown binary op");
}

Scalar apply_un(UnOp op, Scalar a) {
    if (op == UnOp::Not) return Scalar::of_int(!a.truthy());
    return a.type == Ty::Int ? Scalar::of_int(-a.i) : Scalar::of_double(-a.d);
}

Scalar apply_fma(Scalar a, Scalar b, Scalar c) {
    return apply_bin(BinOp::Add, a, apply_bin(BinOp::Mul, b, c));
}

namespace {

double call1(const std::string& name, double x) {
    if (name == "sqrt") return std::sqrt(x);
    if (name == "fabs") return std::fabs(x);
    if (name == "sin") return std::sin(x);
    if (name == "cos") return std::cos(x);
    if (name == "exp") return std::exp(x);
    if (name == "log") return std::log(x);
    if (name == "floor") return std::floor(x);
    if (name == "ceil") return std::ceil(x);
    throw EvalError("unknown function: " + name);
}

double call2(const std::string& name, double x, double y) {
    if (name == "pow") return std::pow(x, y);
    if (name == "fmin") return std::fmin(x, y);
    if (name == "fmax") return std::fmax(x, y);
    throw EvalError("unknown function: " + name);
}

}  // namespace

bool known_call(const std::string& name) {
    static const char* kNames[] = {"sqrt", "fabs", "sin",  "cos",  "exp", "log",
                                   "floor", "ceil", "pow",  "fmin", "fmax"};
    for (const char* n : kNames)
        if (name == n) return true;
    return false;
}

Scalar apply_call(const std::string& name, const std::vector<Scalar>& args) {
    if (args.size() == 1) return Scalar::of_double(call1(name, args[0].as_double()));
    if (args.size() == 2) return Scalar::of_double(call2(name, args[0].as_double(), args[1].as_double()));
    throw EvalError("unknown function: " + name + "/" + std::to_string(args.size()));
}

Scalar coerce(Scalar v, Ty target) {
    if (v.type == target) return v;
    return target == Ty::Int ? Scalar::of_int(v.as_int()) : Scalar::of_double(v.as_double());
}

namespace {

// Caps total evaluation steps so malformed loops terminate with an error.
struct Budget {
    long long left = 50'000'000;
    void tick() {
        if (--left < 0) throw EvalError("evaluation step budget exceeded (runaway loop?)");
    }
};

const Scalar& read_scalar(const Environment& env, const std::string& name) {
    auto it = env.scalars.find(name);
    if (it == env.scalars.end()) throw EvalError("read of undefined variable: " + name);
    return it->second;
}

std::vector<long long> eval_indices(const Expr& ref, const Environment& env) {
    std::vector<long long> idx;
    idx.reserve(ref.kids.size());
    for (auto& k : ref.kids) {
        Scalar v = eval_expr(*k, env);
        if (v.type != Ty::Int) throw EvalError("array index is not an integer");
        idx.push_back(v.i);
    }
    return idx;
}

void exec(const Stmt& s, Environment& env, Budget& budget);

}  // namespace

Scalar eval_expr(const Expr& e, const Environment& env) {
    switch (e.kind) {
        case ExprKind::IntConst:
            return Scalar::of_int(e.ival);
        case ExprKind::FloatConst:
            return Scalar::of_double(e.fval);
        case ExprKind::Var:
            return read_scalar(env, e.name);
        case ExprKind::ArrayRef: {
            auto it = env.arrays.find(e.name);
            if (it == env.arrays.end()) throw EvalError("read of undefined array: " + e.name);
            const ArrayBuf& buf = it->second;
            return buf.get(buf.flat(eval_indices(e, env)));
        }
        case ExprKind::Unary:
            return apply_un(e.un, eval_expr(*e.kids[0], env));
        case ExprKind::Binary: {
            if (e.bin == BinOp::And) {  // short-circuit like C
                Scalar a = eval_expr(*e.kids[0], env);
                if (!a.truthy()) return Scalar::of_int(0);
                return Scalar::of_int(eval_expr(*e.kids[1], env).truthy());
            }
            if (e.bin == BinOp::Or) {
                Scalar a = eval_expr(*e.kids[0], env);
                if (a.truthy()) return Scalar::of_int(1);
                return Scalar::of_int(eval_expr(*e.kids[1], env).truthy());
            }
            return apply_bin(e.bin, eval_expr(*e.kids[0], env), eval_expr(*e.kids[1], env));
        }
        case ExprKind::Call: {
            std::vector<Scalar> args;
            args.reserve(e.kids.size());
            for (auto& k : e.kids) args.push_back(eval_expr(*k, env));
            return apply_call(e.name, args);
        }
        case ExprKind::Fma:
            return apply_fma(eval_expr(*e.kids[0], env), eval_expr(*e.kids[1], env),
                             eval_expr(*e.kids[2], env));
    }
    throw InternalError("unknown expression kind");
}

namespace {

void assign_to(const Expr& lhs, Scalar v, Environment& env) {
    if (lhs.kind == ExprKind::Var) {
        auto it = env.scalars.find(lhs.name);
        if (it == env.scalars.end()) {
            env.scalars[lhs.name] = v;  // first write creates the slot (fresh temps)
        } else {
            it->second = coerce(v, it->second.type);
        }
        return;
    }
    if (lhs.kind != ExprKind::ArrayRef) throw EvalError("assignment target is not an lvalue");
    auto it = env.arrays.find(lhs.name);
    if (it == env.arrays.end()) throw EvalError("store to undefined array: " + lhs.name);
    ArrayBuf& buf = it->second;
    buf.set(buf.flat(eval_indices(lhs, env)), v);
}

void exec(const Stmt& s, Environment& env, Budget& budget) {
    budget.tick();
    switch (s.kind) {
        case StmtKind::Decl:
            for (auto& d : s.decls) {
                if (d.dims.empty()) {
                    Scalar& slot = env.scalars[d.name];
                    slot.type = s.decl_type;
                    if (d.init) slot = coerce(eval_expr(*d.init, env), s.decl_type);
                } else if (!env.arrays.count(d.name)) {
                    ArrayBuf buf;
                    buf.type = s.decl_type;
                    buf.dims = d.dims;
                    if (buf.type == Ty::Int)
                        buf.iv.assign(buf.size(), 0);
                    else
                        buf.dv.assign(buf.size(), 0.0);
                    env.arrays[d.name] = std::move(buf);
                }
            }
            break;
        case StmtKind::Assign:
            assign_to(*s.lhs, eval_expr(*s.rhs, env), env);
            break;
        case StmtKind::If:
            if (eval_expr(*s.cond, env).truthy())
                exec(*s.then_s, env, budget);
            else if (s.else_s)
                exec(*s.else_s, env, budget);
            break;
        case StmtKind::For:
            exec(*s.init, env, budget);
            for (;;) {
                if (s.for_cond && !eval_expr(*s.for_cond, env).truthy()) break;
                budget.tick();
                exec(*s.body, env, budget);
                exec(*s.step, env, budget);
            }
            break;
        case StmtKind::Block:
            for (auto& st : s.stmts) exec(*st, env, budget);
            break;
        case StmtKind::CallStmt: {
            std::vector<Scalar> args;
            for (auto& k : s.call->kids) args.push_back(eval_expr(*k, env));
            apply_call(s.call->name, args);  // value discarded; builtins are pure
            break;
        }
        case StmtKind::Empty:
            break;
    }
}

}  // namespace

void exec_stmt(const Stmt& s, Environment& env) {
    Budget budget;
    exec(s, env, budget);
}

Environment eval_region(const Stmt& body, Environment env) {
    Budget budget;
    exec(body, env, budget);
    return env;
}

Environment random_env(const SymbolTable& syms, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dbl(-10.0, 10.0);
    std::uniform_int_distribution<long long> smallint(1, 8);

    Environment env;
    for (auto& [name, entry] : syms.entries) {
        if (entry.dims.empty()) {
            env.scalars[name] = entry.type == Ty::Int ? Scalar::of_int(smallint(rng))
                                                      : Scalar::of_double(dbl(rng));
            continue;
        }
        ArrayBuf buf;
        buf.type = entry.type;
        buf.dims = entry.dims;
        size_t n = buf.size();
        if (buf.type == Ty::Int) {
            buf.iv.resize(n);
            for (auto& v : buf.iv) v = smallint(rng);
        } else {
            buf.dv.resize(n);
            for (auto& v : buf.dv) v = dbl(rng);
        }
        env.arrays[name] = std::move(buf);
    }
    return env;
}

}  // namespace satcc
