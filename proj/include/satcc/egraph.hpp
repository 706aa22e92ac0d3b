#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "satcc/ssa.hpp"

namespace satcc {

// E-node operators. Integer and floating constants are distinct operators
// because integer and floating arithmetic differ (division, modulo).
enum class Op {
    ConstInt,
    ConstFloat,
    FreeVar,
    Load,
    IfPhi,
    ForPhi,
    ExitPhi,
    Neg,
    Not,
    Add,
    Sub,
    Mul,
    Div,
    Mod,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
    And,
    Or,
    Fma,
    Call
};

const char* op_name(Op op);

struct ENode {
    Op op{};
    long long ival = 0;     // ConstInt
    double fval = 0.0;      // ConstFloat; identity is the bit pattern
    std::string sym;        // FreeVar name, Load base, Call callee, φ variable
    int aux = 0;            // Load epoch; ForPhi/ExitPhi loop id
    std::vector<int> kids;  // e-class refs: operands, load indices, call args,
                            // if-φ (cond, then, else), for-φ (init)

    bool operator==(const ENode& o) const;
};

struct ENodeHash {
    size_t operator()(const ENode& n) const;
};

struct EClass {
    std::vector<ENode> nodes;    // child refs may be stale; canonicalize on use
    std::vector<int> serials;    // global creation index per node (parallel)
    std::set<int> ssa_ids;       // definitions whose value lives here
    Ty type = Ty::Double;
    std::optional<Scalar> cval;  // constant-analysis value (set by folding)
};

struct EGraphStats {
    int n_classes = 0;
    int n_nodes = 0;
    int n_unions = 0;
    int rebuild_count = 0;
};

// Hash-consed e-graph with union-find and deferred (batched) congruence
// repair: merge() queues work, rebuild() restores the congruence invariant.
class EGraph {
public:
    // Adds a node (children canonicalized first). Returns the existing class
    // when a congruent node is present, else a fresh class. `leaf_type` types
    // free-variable/load/φ/call leaves; operator types derive from children.
    int add(ENode n, Ty leaf_type = Ty::Double);

    int find(int id) const;
    int merge(int a, int b);
    void rebuild();
    bool clean() const { return dirty_.empty(); }

    int n_allocated() const { return static_cast<int>(classes_.size()); }
    const EClass& cls(int id) const { return classes_[static_cast<size_t>(find(id))]; }
    EClass& cls(int id) { return classes_[static_cast<size_t>(find(id))]; }

    std::vector<int> class_ids() const;  // canonical ids, ascending

    // A class's distinct nodes with canonical children, paired with the
    // lowest creation serial among duplicates. First-occurrence order.
    std::vector<std::pair<ENode, int>> canonical_nodes(int id) const;

    size_t n_nodes() const { return hashcons_.size(); }
    EGraphStats stats() const;
    std::string dump() const;

    ENode canonicalize(ENode n) const;

private:
    mutable std::vector<int> uf_;
    std::vector<EClass> classes_;
    std::vector<std::vector<std::pair<ENode, int>>> parents_;  // (node as stored, its class)
    std::unordered_map<ENode, int, ENodeHash> hashcons_;
    std::vector<int> dirty_;
    int n_unions_ = 0;
    int rebuild_count_ = 0;
    int serial_ = 0;

    void repair(int id);
    Ty infer_type(const ENode& n, Ty leaf_type) const;
};

// An SSA program loaded into an e-graph. Loads of one (base, epoch, index
// classes) tuple hash-cons into one class, which alone implements load-CSE.
struct SsaGraph {
    EGraph g;
    std::vector<std::pair<int, int>> roots;  // (def id, RHS class), region order:
                                             // body assignments and stores only —
                                             // for-header defs print verbatim
    std::map<int, int> def_class;            // every def (incl. φ) → class
    std::map<int, std::vector<int>> store_index_classes;  // Store def → index classes
};

SsaGraph from_ssa(const SsaProgram& prog);

}  // namespace satcc
