#pragma once

#include <map>
#include <string>
#include <vector>

#include "satcc/egraph.hpp"

namespace satcc {

// Expression pattern: either a variable slot or an operator over sub-patterns.
struct Pat {
    bool is_var = true;
    int var = 0;
    Op op = Op::Add;
    std::vector<Pat> kids;

    static Pat v(int slot) {
        Pat p;
        p.var = slot;
        return p;
    }
    static Pat n(Op op, std::vector<Pat> kids) {
        Pat p;
        p.is_var = false;
        p.op = op;
        p.kids = std::move(kids);
        return p;
    }
};

struct RewriteRule {
    std::string name;
    Pat lhs;
    Pat rhs;
    int n_vars = 0;  // variable slots are 0 .. n_vars-1; all rhs slots occur in lhs
};

// The nine rewrite rules in table order: FMA1–3 introduce fused
// multiply-adds, COMM-ADD/COMM-MUL flip operands, ASSOC-ADD1/2 and
// ASSOC-MUL1/2 reassociate.
std::vector<RewriteRule> default_rules();

// Extra sound rules (subtraction/negation shuffling). Not part of the
// default pipeline; tests enable them explicitly.
std::vector<RewriteRule> extra_rules();

struct SaturationLimits {
    size_t max_nodes = 10000;
    double max_time = 10.0;  // seconds
    int max_iters = 10;
};

enum class StopReason { Saturated, NodeLimit, TimeLimit, IterLimit };
const char* stop_reason_name(StopReason r);

struct SaturationReport {
    int iterations_run = 0;
    size_t nodes_final = 0;
    StopReason stop_reason = StopReason::Saturated;
    std::map<std::string, long long> per_rule_matches;  // rule name → matches applied
};

// Folds every class whose value is determined by constant operands: the
// class gains a constant value and a constant node. Integer arithmetic is
// exact; float folding uses host double semantics; division/modulo by a
// constant zero is left unfolded. Comparisons, logical operators and calls
// never fold. Runs to a fixed point; returns whether anything changed.
bool fold_constants(EGraph& g);

// Repeated match-apply-rebuild sweeps over the rule list (constant folding
// after each sweep) until a fixed point or a limit. The node budget is
// checked between rule applications, so the final count may overshoot
// max_nodes by at most one application's additions.
SaturationReport saturate(EGraph& g, const std::vector<RewriteRule>& rules,
                          const SaturationLimits& lim = {});

}  // namespace satcc
