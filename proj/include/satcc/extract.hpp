#pragma once

#include <string>

#include "satcc/cost.hpp"

namespace satcc {

enum class ExtractMethod { Ilp, Greedy, Brute };
const char* method_name(ExtractMethod m);

// One chosen node per class reachable from the roots. φ classes terminate
// the closure (their condition/init children stay unselected); the chosen
// node graph over non-leaf edges must be acyclic.
struct Extraction {
    std::map<int, ENode> choice;  // canonical class → chosen node
    std::vector<std::pair<int, int>> roots;
    ExtractMethod method = ExtractMethod::Greedy;
    DagCost objective;
    bool timed_out = false;  // exact search hit its limit; greedy result returned
};

struct ExtractLimits {
    double max_time = 30.0;  // seconds for the exact search
};

// Classic bottom-up tree-cost fixpoint; the returned objective is the DAG
// cost of the induced selection (shared classes counted once).
Extraction extract_greedy(const EGraph& g, const std::vector<std::pair<int, int>>& roots,
                          const CostModel& m);

// Exact minimum-DAG-cost selection: 0/1 choice per node, closure and
// acyclicity constraints, solved by branch and bound with the greedy result
// as incumbent and Σ(cheapest node of each required class) as lower bound.
// Equal-cost solutions resolve toward lower node creation index. On timeout
// the greedy result is returned with method=greedy and timed_out set.
Extraction extract_ilp(const EGraph& g, const std::vector<std::pair<int, int>>& roots,
                       const CostModel& m, const ExtractLimits& lim = {});

// Exhaustive enumeration over per-class choices; guard: ≤ 25 nodes total.
Extraction extract_brute(const EGraph& g, const std::vector<std::pair<int, int>>& roots,
                         const CostModel& m);

// Checks closure, membership, acyclicity, and objective consistency.
bool validate_extraction(const EGraph& g, const Extraction& x, std::string* why = nullptr);

}  // namespace satcc
