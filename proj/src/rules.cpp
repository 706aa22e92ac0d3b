#include "satcc/rules.hpp"

#include <chrono>
#include <optional>

namespace satcc {

namespace {

using Binding = std::vector<int>;  // slot → canonical class, -1 unset
using Clock = std::chrono::steady_clock;

// Accumulates every way `p` can match class `cls` given a partial binding.
void match_class(const EGraph& g, const Pat& p, int cls, const Binding& b,
                 std::vector<Binding>& out) {
    cls = g.find(cls);
    if (p.is_var) {
        if (b[static_cast<size_t>(p.var)] == -1) {
            Binding b2 = b;
            b2[static_cast<size_t>(p.var)] = cls;
            out.push_back(std::move(b2));
        } else if (b[static_cast<size_t>(p.var)] == cls) {
            out.push_back(b);
        }
        return;
    }
    for (auto& [n, serial] : g.canonical_nodes(cls)) {
        if (n.op != p.op || n.kids.size() != p.kids.size()) continue;
        std::vector<Binding> partial{b};
        for (size_t i = 0; i < p.kids.size() && !partial.empty(); i++) {
            std::vector<Binding> next;
            for (const Binding& pb : partial) match_class(g, p.kids[i], n.kids[i], pb, next);
            partial = std::move(next);
        }
        for (Binding& done : partial) out.push_back(std::move(done));
    }
}

std::vector<std::pair<int, Binding>> find_matches(const EGraph& g, const RewriteRule& r) {
    std::vector<std::pair<int, Binding>> out;
    Binding empty(static_cast<size_t>(r.n_vars), -1);
    for (int id : g.class_ids()) {
        std::vector<Binding> found;
        match_class(g, r.lhs, id, empty, found);
        for (Binding& b : found) out.push_back({id, std::move(b)});
    }
    return out;
}

int instantiate(EGraph& g, const Pat& p, const Binding& b) {
    if (p.is_var) return b[static_cast<size_t>(p.var)];
    ENode n;
    n.op = p.op;
    for (const Pat& k : p.kids) n.kids.push_back(instantiate(g, k, b));
    return g.add(n);
}

// Evaluates a node whose operand classes all carry constants. Only the
// arithmetic operators fold; anything else (and any division or modulo by
// zero) yields nothing.
std::optional<Scalar> fold_node(const EGraph& g, const ENode& n) {
    switch (n.op) {
        case Op::ConstInt:
            return Scalar::of_int(n.ival);
        case Op::ConstFloat:
            return Scalar::of_double(n.fval);
        case Op::Neg:
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div:
        case Op::Mod:
        case Op::Fma:
            break;
        default:
            return std::nullopt;
    }
    std::vector<Scalar> k;
    for (int kid : n.kids) {
        const auto& cv = g.cls(kid).cval;
        if (!cv) return std::nullopt;
        k.push_back(*cv);
    }
    bool all_int = true;
    for (const Scalar& s : k) all_int &= (s.type == Ty::Int);
    if (all_int) {
        switch (n.op) {
            case Op::Neg: return Scalar::of_int(-k[0].i);
            case Op::Add: return Scalar::of_int(k[0].i + k[1].i);
            case Op::Sub: return Scalar::of_int(k[0].i - k[1].i);
            case Op::Mul: return Scalar::of_int(k[0].i * k[1].i);
            case Op::Div:
                if (k[1].i == 0) return std::nullopt;
                return Scalar::of_int(k[0].i / k[1].i);
            case Op::Mod:
                if (k[1].i == 0) return std::nullopt;
                return Scalar::of_int(k[0].i % k[1].i);
            case Op::Fma: return Scalar::of_int(k[0].i + k[1].i * k[2].i);
            default: return std::nullopt;
        }
    }
    if (n.op == Op::Mod) return std::nullopt;  // % is integer-only
    switch (n.op) {
        case Op::Neg: return Scalar::of_double(-k[0].as_double());
        case Op::Add: return Scalar::of_double(k[0].as_double() + k[1].as_double());
        case Op::Sub: return Scalar::of_double(k[0].as_double() - k[1].as_double());
        case Op::Mul: return Scalar::of_double(k[0].as_double() * k[1].as_double());
        case Op::Div:
            if (k[1].as_double() == 0.0) return std::nullopt;
            return Scalar::of_double(k[0].as_double() / k[1].as_double());
        case Op::Fma:
            return Scalar::of_double(k[0].as_double() + k[1].as_double() * k[2].as_double());
        default: return std::nullopt;
    }
}

std::pair<int, int> progress_key(const EGraph& g) {
    return {g.n_allocated(), g.stats().n_unions};
}

}  // namespace

std::vector<RewriteRule> default_rules() {
    Pat A = Pat::v(0), B = Pat::v(1), C = Pat::v(2);
    auto add = [](Pat a, Pat b) { return Pat::n(Op::Add, {std::move(a), std::move(b)}); };
    auto mul = [](Pat a, Pat b) { return Pat::n(Op::Mul, {std::move(a), std::move(b)}); };
    auto sub = [](Pat a, Pat b) { return Pat::n(Op::Sub, {std::move(a), std::move(b)}); };
    auto neg = [](Pat a) { return Pat::n(Op::Neg, {std::move(a)}); };
    auto fma = [](Pat a, Pat b, Pat c) {
        return Pat::n(Op::Fma, {std::move(a), std::move(b), std::move(c)});
    };
    return {
        {"FMA1", add(A, mul(B, C)), fma(A, B, C), 3},
        {"FMA2", sub(A, mul(B, C)), fma(A, neg(B), C), 3},
        {"FMA3", sub(mul(B, C), A), fma(neg(A), B, C), 3},
        {"COMM-ADD", add(A, B), add(B, A), 2},
        {"COMM-MUL", mul(A, B), mul(B, A), 2},
        {"ASSOC-ADD1", add(A, add(B, C)), add(add(A, B), C), 3},
        {"ASSOC-ADD2", add(add(A, B), C), add(A, add(B, C)), 3},
        {"ASSOC-MUL1", mul(A, mul(B, C)), mul(mul(A, B), C), 3},
        {"ASSOC-MUL2", mul(mul(A, B), C), mul(A, mul(B, C)), 3},
    };
}

std::vector<RewriteRule> extra_rules() {
    Pat A = Pat::v(0), B = Pat::v(1);
    auto add = [](Pat a, Pat b) { return Pat::n(Op::Add, {std::move(a), std::move(b)}); };
    auto mul = [](Pat a, Pat b) { return Pat::n(Op::Mul, {std::move(a), std::move(b)}); };
    auto sub = [](Pat a, Pat b) { return Pat::n(Op::Sub, {std::move(a), std::move(b)}); };
    auto neg = [](Pat a) { return Pat::n(Op::Neg, {std::move(a)}); };
    return {
        {"SUB-NEG", sub(A, B), add(A, neg(B)), 2},
        {"NEG-NEG", neg(neg(A)), A, 1},
        {"MUL-NEG", mul(neg(A), B), neg(mul(A, B)), 2},
    };
}

const char* stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::Saturated: return "saturated";
        case StopReason::NodeLimit: return "node_limit";
        case StopReason::TimeLimit: return "time_limit";
        case StopReason::IterLimit: return "iter_limit";
    }
    return "?";
}

bool fold_constants(EGraph& g) {
    bool changed = false;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int id : g.class_ids()) {
            if (g.cls(id).cval) continue;
            for (auto& [n, serial] : g.canonical_nodes(id)) {
                auto v = fold_node(g, n);
                if (v) {
                    g.cls(id).cval = *v;
                    progress = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    for (int id : g.class_ids()) {
        auto cv = g.cls(id).cval;
        if (!cv) continue;
        bool has_const = false;
        for (auto& [n, serial] : g.canonical_nodes(id))
            has_const |= (n.op == Op::ConstInt || n.op == Op::ConstFloat);
        if (has_const) continue;
        ENode c;
        if (cv->type == Ty::Int) {
            c.op = Op::ConstInt;
            c.ival = cv->i;
        } else {
            c.op = Op::ConstFloat;
            c.fval = cv->d;
        }
        g.merge(id, g.add(c));
        changed = true;
    }
    g.rebuild();
    return changed;
}

SaturationReport saturate(EGraph& g, const std::vector<RewriteRule>& rules,
                          const SaturationLimits& lim) {
    auto deadline =
        Clock::now() + std::chrono::microseconds(static_cast<long long>(lim.max_time * 1e6));
    SaturationReport rep;
    for (const RewriteRule& r : rules) rep.per_rule_matches[r.name] = 0;

    auto limit_hit = [&]() -> std::optional<StopReason> {
        if (g.n_nodes() >= lim.max_nodes) return StopReason::NodeLimit;
        if (Clock::now() > deadline) return StopReason::TimeLimit;
        return std::nullopt;
    };

    fold_constants(g);

    std::optional<StopReason> stop;
    bool saturated = false;
    int iter = 0;
    while (iter < lim.max_iters && !stop && !saturated) {
        iter++;
        auto before = progress_key(g);
        for (const RewriteRule& rule : rules) {
            if ((stop = limit_hit())) break;
            auto matches = find_matches(g, rule);
            long long applied = 0;
            for (auto& [cls, b] : matches) {
                if ((stop = limit_hit())) break;
                g.merge(cls, instantiate(g, rule.rhs, b));
                applied++;
            }
            rep.per_rule_matches[rule.name] += applied;
            g.rebuild();
            if (stop) break;
        }
        if (!stop) {
            fold_constants(g);
            saturated = (progress_key(g) == before);
        }
    }
    rep.iterations_run = iter;
    rep.nodes_final = g.n_nodes();
    rep.stop_reason = stop ? *stop : (saturated ? StopReason::Saturated : StopReason::IterLimit);
    return rep;
}

}  // namespace satcc
