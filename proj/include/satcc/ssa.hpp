#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "satcc/ast.hpp"
#include "satcc/interp.hpp"

namespace satcc {

// Reference to a value: a prior definition, or a free input (a name whose
// value comes from outside the region).
struct ValRef {
    int def = -1;           // >= 0: index into SsaProgram::defs
    std::string free_name;  // def < 0: free scalar name
    bool is_def() const { return def >= 0; }
    bool operator==(const ValRef&) const = default;
};

inline ValRef ref_of(int def) { return {def, {}}; }
inline ValRef free_of(std::string name) { return {-1, std::move(name)}; }

// Expression with every name resolved: scalar reads become Ref (to a def) or
// FreeVar; array reads become Load or Ref (store-to-load forwarding).
enum class SsaKind { IntConst, FloatConst, Ref, FreeVar, Load, Unary, Binary, Call, Fma };

struct SsaExpr;
using SsaExprPtr = std::unique_ptr<SsaExpr>;

struct SsaExpr {
    SsaKind kind{};
    Ty type = Ty::Double;
    long long ival = 0;
    double fval = 0.0;
    std::string spelling;  // literal spelling, kept for faithful reprinting
    std::string name;      // FreeVar name / Load base / Call callee
    int ref = -1;          // Ref: def id
    int epoch = 0;         // Load: count of prior may-aliasing kill events on this base
    BinOp bin{};
    UnOp un{};
    std::vector<SsaExprPtr> kids;  // operands / load indices / call args

    SsaExprPtr clone() const;
};

// One definition. Assign/Store carry a value expression; φ kinds carry
// references. A for-φ's condition is abstract (the loop id); an if-φ's
// condition is a concrete expression.
enum class DefKind { Assign, Store, IfPhi, ForPhi, ExitPhi };

struct SsaDef {
    int id = 0;
    DefKind kind{};
    Ty type = Ty::Double;
    int scope = 0;          // index into SsaProgram::scopes
    bool in_header = false;  // defined by a for-loop init/step (emitted verbatim)

    std::string target;               // scalar name or array base; φ merge variable
    std::vector<SsaExprPtr> indices;  // Store: target subscripts
    SsaExprPtr value;                 // Assign/Store RHS

    SsaExprPtr cond;     // IfPhi condition
    ValRef phi_a;        // IfPhi: then-value;  ForPhi: init value
    ValRef phi_b;        // IfPhi: else-value;  ForPhi: loop-carried value
    int loop_id = -1;    // ForPhi/ExitPhi: which loop
};

struct StoreEvent {
    int def = 0;          // a Store def
    int sequence_no = 0;  // strictly increasing textual order
};

// Statement skeleton mirroring the region body. Emission walks this and the
// original statements side by side; headers and conditions print verbatim.
struct SsaStmt;
using SsaStmtPtr = std::unique_ptr<SsaStmt>;

struct SsaStmt {
    enum class Kind { Assign, Decl, If, For, Block, Call, Empty } kind{};
    const Stmt* orig = nullptr;
    int scope = 0;

    int def = -1;                   // Assign: the Assign/Store def
    std::vector<int> decl_defs;     // Decl: init def per declarator, -1 if none
    SsaExprPtr cond;                // If: resolved condition (for φ bookkeeping)
    SsaStmtPtr then_s, else_s;      // If
    SsaStmtPtr body;                // For
    std::vector<SsaStmtPtr> stmts;  // Block
    int loop_id = -1;               // For
    std::vector<int> entry_phis;    // For: φs at loop entry
    std::vector<int> exit_phis;     // For: exit values after the loop
    std::vector<int> merge_phis;    // If: φs at the merge point
};

// Scope tree node. Hoisting may cross For/Plain scope boundaries but never
// an If branch (a guarded computation must stay guarded).
struct ScopeInfo {
    enum class Kind { Region, ForBody, IfBranch, Plain } kind = Kind::Region;
    int parent = -1;
    int loop_id = -1;  // ForBody: its loop
};

struct SsaProgram {
    std::vector<SsaDef> defs;  // creation order == deterministic textual order
    std::vector<StoreEvent> store_events;
    SsaStmtPtr body;
    SymbolTable symbols;  // names visible in the region, incl. region locals
    std::vector<ScopeInfo> scopes;  // scopes[0] = region body
    std::vector<std::string> warnings;
    int n_loops = 0;

    // Reaching state snapshot after each def, for reaching_def queries.
    std::vector<std::map<std::string, ValRef>> state_after;

    std::string dump() const;  // one line per def: "id := expr [scope]"
};

// Converts a region body to SSA. `symbols` must cover every name the region
// uses (module_symbols of the enclosing function plus enclosing loop vars).
SsaProgram build_ssa(const Region& region, const SymbolTable& symbols);

// Latest reaching definition of a scalar after def `point` executed
// (point = -1 queries region entry). Free inputs come back as free ValRefs.
ValRef reaching_def(const SsaProgram& prog, const std::string& name, int point);

// Conservative may-alias between an array store target and a load target:
// different bases never alias; same base aliases unless some subscript
// position has two unequal constants.
bool store_may_alias(const std::string& store_base, const std::vector<SsaExprPtr>& store_idx,
                     const std::string& load_base, const std::vector<SsaExprPtr>& load_idx);

// Deterministic rendering used for dumps and syntactic index comparison.
std::string render_ssa_expr(const SsaExpr& e);

// Reference evaluation of the SSA program (bitwise-faithful to the AST
// interpreter on the same region; there is no rewriting at this stage).
Environment eval_ssa(const SsaProgram& prog, Environment env);

}  // namespace satcc
