#pragma once

#include <map>
#include <vector>

#include "satcc/egraph.hpp"

namespace satcc {

// Operation pricing: constants are free, leaves (free inputs, φ) cost 1,
// ordinary arithmetic 10, and memory/division/modulo/calls 100.
struct CostModel {
    long long const_cost = 0;
    long long leaf_cost = 1;
    long long op_cost = 10;
    long long heavy_cost = 100;
};

long long node_cost(const ENode& n, const CostModel& m);

// φ nodes are selection leaves: they stand for a merged variable value, so
// their children (condition, init) are never pulled into a selection.
bool is_selection_leaf(const ENode& n);

struct DagCost {
    long long total = 0;
    std::map<int, long long> per_class;  // canonical class → its chosen node's cost
};

// Cost of a closed selection over the classes reachable from the roots,
// each class counted exactly once. Throws InternalError if the selection
// leaves a reachable class without a choice.
DagCost dag_cost(const EGraph& g, const std::map<int, ENode>& choice,
                 const std::vector<std::pair<int, int>>& roots, const CostModel& m);

}  // namespace satcc
