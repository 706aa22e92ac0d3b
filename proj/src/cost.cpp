#include "satcc/cost.hpp"

#include <set>

#include "satcc/diag.hpp"

namespace satcc {

long long node_cost(const ENode& n, const CostModel& m) {
    switch (n.op) {
        case Op::ConstInt:
        case Op::ConstFloat:
            return m.const_cost;
        case Op::FreeVar:
        case Op::IfPhi:
        case Op::ForPhi:
        case Op::ExitPhi:
            return m.leaf_cost;
        case Op::Load:
        case Op::Div:
        case Op::Mod:
        case Op::Call:
            return m.heavy_cost;
        case Op::Neg:
        case Op::Not:
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Lt:
        case Op::Le:
        case Op::Gt:
        case Op::Ge:
        case Op::Eq:
        case Op::Ne:
        case Op::And:
        case Op::Or:
        case Op::Fma:
            return m.op_cost;
    }
    return m.op_cost;
}

bool is_selection_leaf(const ENode& n) {
    return n.op == Op::IfPhi || n.op == Op::ForPhi || n.op == Op::ExitPhi;
}

DagCost dag_cost(const EGraph& g, const std::map<int, ENode>& choice,
                 const std::vector<std::pair<int, int>>& roots, const CostModel& m) {
    DagCost out;
    std::set<int> visited;
    std::vector<int> stack;
    for (auto& [ssa_id, cls] : roots) stack.push_back(g.find(cls));
    while (!stack.empty()) {
        int c = g.find(stack.back());
        stack.pop_back();
        if (!visited.insert(c).second) continue;
        auto it = choice.find(c);
        if (it == choice.end())
            throw InternalError("open selection: class c" + std::to_string(c) + " has no choice");
        const ENode& n = it->second;
        long long cost = node_cost(n, m);
        out.per_class[c] = cost;
        out.total += cost;
        if (!is_selection_leaf(n))
            for (int k : n.kids) stack.push_back(g.find(k));
    }
    return out;
}

}  // namespace satcc
