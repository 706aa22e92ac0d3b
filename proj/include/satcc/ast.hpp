#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "satcc/diag.hpp"

namespace satcc {

// ---------------------------------------------------------------------------
// Directives

enum class DirKind { Acc, Omp, Other };

// Parallelism markers recognized inside a pragma line. Everything else in the
// directive is opaque text that must be reproduced byte-identically.
enum class Marker : uint32_t {
    Gang = 1u << 0,
    Worker = 1u << 1,
    Vector = 1u << 2,
    ParallelFor = 1u << 3,
    Simd = 1u << 4,
    Teams = 1u << 5,
    Distribute = 1u << 6,
    Kernels = 1u << 7,
    Parallel = 1u << 8,
};

struct Directive {
    std::string raw_text;  // full pragma line(s), byte-exact, no trailing '\n'
    DirKind kind = DirKind::Other;
    uint32_t markers = 0;

    bool has(Marker m) const { return markers & static_cast<uint32_t>(m); }
    bool parallel() const { return markers != 0; }
};

// Scans raw pragma text and fills kind/markers.
Directive make_directive(std::string raw_text);

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind { IntConst, FloatConst, Var, ArrayRef, Unary, Binary, Call, Fma };

enum class BinOp { Add, Sub, Mul, Div, Mod, Lt, Le, Gt, Ge, Eq, Ne, And, Or };
enum class UnOp { Neg, Not };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    ExprKind kind{};
    SourceLoc loc{};

    long long ival = 0;    // IntConst
    double fval = 0.0;     // FloatConst
    std::string spelling;  // literal spelling as written, kept for printing
    std::string name;      // Var name / ArrayRef base / Call callee
    BinOp bin{};
    UnOp un{};
    std::vector<ExprPtr> kids;  // operands / indices / call args

    ExprPtr clone() const;
};

ExprPtr make_int(long long v);
ExprPtr make_float(double v);
ExprPtr make_var(std::string name);
ExprPtr make_unary(UnOp op, ExprPtr a);
ExprPtr make_binary(BinOp op, ExprPtr a, ExprPtr b);

bool expr_equal(const Expr& a, const Expr& b);

const char* binop_text(BinOp op);

// ---------------------------------------------------------------------------
// Statements

enum class StmtKind { Decl, Assign, If, For, Block, CallStmt, Empty };

enum class Ty { Int, Double };

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Declarator {
    std::string name;
    std::vector<long long> dims;  // empty: scalar
    ExprPtr init;                 // scalars only; may be null
};

struct Stmt {
    StmtKind kind{};
    SourceLoc loc{};
    std::vector<Directive> pragmas;  // pragmas immediately preceding this stmt

    // Decl
    Ty decl_type{};
    std::vector<Declarator> decls;

    // Assign (compound ops are desugared at parse time)
    ExprPtr lhs;
    ExprPtr rhs;

    // If
    ExprPtr cond;
    StmtPtr then_s;
    StmtPtr else_s;  // may be null

    // For
    StmtPtr init;          // Assign, Decl, or Empty
    ExprPtr for_cond;      // may be null
    StmtPtr step;          // Assign or Empty
    StmtPtr body;          // If/For body (any stmt; usually Block)
    std::string loop_var;  // induction variable, empty if indeterminate
    std::string raw_for_header;  // source slice "for (...)", printed verbatim

    // Block
    std::vector<StmtPtr> stmts;

    // CallStmt
    ExprPtr call;

    StmtPtr clone() const;
};

bool stmt_equal(const Stmt& a, const Stmt& b);

// ---------------------------------------------------------------------------
// Module

struct Param {
    Ty type{};
    std::string name;
    std::vector<long long> dims;  // empty: scalar
};

struct Function {
    std::string name;
    std::vector<Param> params;
    StmtPtr body;  // Block
    std::vector<Directive> pragmas;
};

struct TopItem {
    enum class Kind { Func, Global } kind{};
    Function fn;   // Kind::Func
    StmtPtr decl;  // Kind::Global (a Decl stmt)
};

struct KernelModule {
    std::vector<TopItem> items;
    std::vector<Directive> trailing_pragmas;
    std::string source_name;
};

bool module_equal(const KernelModule& a, const KernelModule& b);

// All pragma lines of a module, in source order.
std::vector<std::string> collect_pragma_lines(const KernelModule& m);

// ---------------------------------------------------------------------------
// Regions

// Innermost parallel-marked loop plus context. Borrows from the module.
struct Region {
    const Function* fn = nullptr;
    Stmt* anchor = nullptr;  // a For stmt carrying a parallelism marker
    std::vector<std::string> enclosing_loop_vars;  // anchor's var last
    int index = 0;  // position among the module's regions, source order
};

std::vector<Region> find_regions(KernelModule& m);

// Declared scalar/array types visible to a region: globals, params, and the
// loop variables of enclosing loops (always int).
struct SymbolTable {
    struct Entry {
        Ty type{};
        std::vector<long long> dims;  // empty: scalar
        bool operator==(const Entry&) const = default;
    };
    std::vector<std::pair<std::string, Entry>> entries;

    const Entry* find(const std::string& name) const {
        for (auto& [n, e] : entries)
            if (n == name) return &e;
        return nullptr;
    }
    void add(const std::string& name, Entry e) {
        if (!find(name)) entries.emplace_back(name, std::move(e));
    }
};

SymbolTable module_symbols(const KernelModule& m, const Function& fn);

}  // namespace satcc
