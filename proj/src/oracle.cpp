#include "satcc/oracle.hpp"

#include <cmath>
#include <cstdio>

#include "satcc/diag.hpp"

namespace satcc {

namespace {

constexpr double kAbsFloor = 1e-12;

std::string element_name(const std::string& base, const std::vector<long long>& dims, size_t at) {
    std::string out = base;
    std::vector<long long> idx(dims.size(), 0);
    for (size_t d = dims.size(); d-- > 0;) {
        idx[d] = static_cast<long long>(at) % dims[d];
        at /= static_cast<size_t>(dims[d]);
    }
    for (long long i : idx) out += "[" + std::to_string(i) + "]";
    return out;
}

struct Comparer {
    DiffReport& rep;
    uint64_t seed;
    double tol_rel;

    void value(const std::string& loc, double want, double got) {
        double abs_err = std::fabs(got - want);
        double mag = std::max(std::fabs(got), std::fabs(want));
        double rel_err = mag > 0.0 ? abs_err / mag : 0.0;
        rep.max_abs_err = std::max(rep.max_abs_err, abs_err);
        rep.max_rel_err = std::max(rep.max_rel_err, rel_err);
        if (abs_err <= tol_rel * mag || abs_err <= kAbsFloor) return;
        rep.failures.push_back({seed, loc, got, want});
    }

    void run(const Environment& want, const Environment& got) {
        for (auto& [n, v] : want.scalars) {
            auto it = got.scalars.find(n);
            if (it == got.scalars.end()) {
                rep.failures.push_back({seed, n + " (missing)", 0.0, v.as_double()});
                continue;
            }
            value(n, v.as_double(), it->second.as_double());
        }
        for (auto& [n, v] : want.arrays) {
            auto it = got.arrays.find(n);
            if (it == got.arrays.end() || it->second.dims != v.dims) {
                rep.failures.push_back({seed, n + " (missing)", 0.0, 0.0});
                continue;
            }
            for (size_t i = 0; i < v.size(); ++i)
                value(element_name(n, v.dims, i), v.get(i).as_double(),
                      it->second.get(i).as_double());
        }
    }
};

}  // namespace

DiffReport diff_test(const Region& original, const Region& optimized, int trials, double tol_rel,
                     const SymbolTable& syms) {
    DiffReport rep;
    rep.n_trials = trials;
    for (int t = 0; t < trials; ++t) {
        uint64_t seed = static_cast<uint64_t>(t) + 1;
        Environment env = random_env(syms, seed);
        Comparer cmp{rep, seed, tol_rel};
        try {
            Environment want = eval_region(*original.anchor->body, env);
            Environment got = eval_region(*optimized.anchor->body, env);
            cmp.run(want, got);
        } catch (const EvalError& e) {
            rep.failures.push_back({seed, std::string("error: ") + e.what(), 0.0, 0.0});
        }
    }
    return rep;
}

}  // namespace satcc
