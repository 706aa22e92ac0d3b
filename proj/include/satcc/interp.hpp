#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "satcc/ast.hpp"

namespace satcc {

// Tagged scalar value; int/double mirror the two kernel types.
struct Scalar {
    Ty type = Ty::Double;
    long long i = 0;
    double d = 0.0;

    static Scalar of_int(long long v) { return {Ty::Int, v, 0.0}; }
    static Scalar of_double(double v) { return {Ty::Double, 0, v}; }

    double as_double() const { return type == Ty::Int ? static_cast<double>(i) : d; }
    long long as_int() const { return type == Ty::Int ? i : static_cast<long long>(d); }
    bool truthy() const { return type == Ty::Int ? i != 0 : d != 0.0; }
};

// Typed flat buffer with declared dims; all accesses bounds-checked.
struct ArrayBuf {
    Ty type = Ty::Double;
    std::vector<long long> dims;
    std::vector<double> dv;
    std::vector<long long> iv;

    size_t size() const {
        size_t n = 1;
        for (long long d : dims) n *= static_cast<size_t>(d);
        return n;
    }
    size_t flat(const std::vector<long long>& idx) const;  // throws EvalError when out of bounds
    Scalar get(size_t at) const {
        return type == Ty::Int ? Scalar::of_int(iv[at]) : Scalar::of_double(dv[at]);
    }
    void set(size_t at, Scalar v) {
        if (type == Ty::Int)
            iv[at] = v.as_int();
        else
            dv[at] = v.as_double();
    }
};

// Ordered maps so iteration (comparison, reporting) is deterministic.
struct Environment {
    std::map<std::string, Scalar> scalars;
    std::map<std::string, ArrayBuf> arrays;
};

// Scalar arithmetic shared by the interpreter and constant folding, so folded
// values match evaluated values exactly. Usual promotions: int op int stays
// int; anything else goes double. Comparisons/logicals yield int 0/1.
Scalar apply_bin(BinOp op, Scalar a, Scalar b);  // throws EvalError on int /0, %0, double %
Scalar apply_un(UnOp op, Scalar a);
Scalar apply_fma(Scalar a, Scalar b, Scalar c);  // a + b*c, two roundings
Scalar apply_call(const std::string& name, const std::vector<Scalar>& args);
bool known_call(const std::string& name);
Scalar coerce(Scalar v, Ty target);

// Expression/statement evaluation over a flat environment (no shadowing; the
// kernel subset assumes unique names per function). Reading a name absent
// from the environment is an error — it flags use of an undefined value.
Scalar eval_expr(const Expr& e, const Environment& env);
void exec_stmt(const Stmt& s, Environment& env);

// Runs a region body to completion and returns the post-state. Guarded by an
// internal step budget so runaway loops fail instead of hanging.
Environment eval_region(const Stmt& body, Environment env);

// Environment seeded from declared symbols: doubles uniform in [-10,10],
// ints uniform in 1..8 (safe loop bounds / array offsets).
Environment random_env(const SymbolTable& syms, uint64_t seed);

}  // namespace satcc
