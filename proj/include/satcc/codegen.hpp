#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "satcc/ast.hpp"
#include "satcc/egraph.hpp"
#include "satcc/extract.hpp"
#include "satcc/ssa.hpp"

namespace satcc {

// One scalar temporary introduced by emission. Every selected e-class whose
// chosen node is an operation (not a constant, free variable, or φ) gets
// exactly one temp named after the class, so shared subexpressions are
// computed once no matter how many right-hand sides mention them.
struct TempDef {
    int cls = -1;       // canonical e-class id; the temp is named "_v<cls>"
    std::string name;   //
    Ty type = Ty::Double;
    bool is_load = false;  // defining node is an array read
    int block = 0;         // emission block (see EmitPlan::blocks numbering)
    int slot = 0;          // temp is placed just before this statement index
    ExprPtr rhs;           // defining expression; operands are atoms (temp
                           // names / literals / variable names), depth one
};

// Where temporaries go and what original right-hand sides become. Blocks are
// numbered by a fixed preorder walk of the region skeleton (region body = 0,
// then each if-branch / loop-body / nested block in statement order), so a
// (block, slot) pair addresses "immediately before statement <slot> of that
// statement list" in both the planner and the emitter.
struct EmitPlan {
    std::vector<TempDef> temp_defs;   // global emission order
    std::map<int, ExprPtr> rewritten; // root def id -> replacement RHS
};

// Plans one temp per selected operation class, anchored at the earliest
// statement position that dominates every use (the join of all consumer
// anchors). Loads land immediately before their first consumer.
EmitPlan plan_temporaries(const Extraction& x, const SsaGraph& sg, const SsaProgram& prog);

// Moves every load temp (and, via re-joining, the index temps feeding it) to
// the first position where its operands are resolved: the scan walks upward
// from the load's natural anchor and stops at a statement whose subtree
// contains a possibly-aliasing store or an assignment to a scalar the load's
// index rendering reads, never leaves an if-branch, and leaves a loop body
// only when the loop neither stores to the load's base nor feeds its indices.
// Loads that share a landing slot are ordered by (base, index text), numeric
// index literals comparing numerically.
void bulk_load_reorder(EmitPlan& plan, const Extraction& x, const SsaGraph& sg,
                       const SsaProgram& prog);

// Replacement body for the region: the original statement skeleton with temp
// declarations and assignments spliced in. A temp group landing at slot 0 is
// emitted flat at the top of its statement list; a group landing at a later
// slot opens a nested block that encloses the rest of the list, so scopes
// telescope and every temp dominates its uses. Store left-hand sides, loop
// headers, conditions, call statements, and pragmas are reproduced verbatim.
StmtPtr build_region_body(const SsaProgram& prog, const EmitPlan& plan);

// Prints the module with each anchor's loop body swapped for its replacement.
// The module is restored before returning.
std::string emit_module(KernelModule& m, std::vector<std::pair<Stmt*, StmtPtr>> bodies);

}  // namespace satcc
