#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satcc/ast.hpp"
#include "satcc/interp.hpp"

namespace satcc {

// One comparison miss: where the two runs disagreed and by how much.
struct DiffFailure {
    uint64_t seed = 0;
    std::string location;  // "x", "a[2][1]", or "error: <what>" if a run threw
    double got = 0.0;      // optimized value
    double want = 0.0;     // reference value
};

struct DiffReport {
    int n_trials = 0;
    double max_rel_err = 0.0;
    double max_abs_err = 0.0;
    std::vector<DiffFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Runs both region bodies on `trials` seeded random environments (doubles
// uniform in [-10,10], ints in 1..8) and compares every scalar and array
// element the reference run knows about. A value passes when
// |got-want| <= tol_rel*max(|got|,|want|) or |got-want| <= 1e-12; anything
// else lands in `failures`. Names introduced by optimization (the "_v" temps)
// are ignored. `syms` seeds the environments; both regions must agree on the
// names and dims it declares.
DiffReport diff_test(const Region& original, const Region& optimized, int trials, double tol_rel,
                     const SymbolTable& syms);

}  // namespace satcc
